from enum import Enum, unique
from math import inf, isfinite
from typing import Dict, NamedTuple

from src.asymptotics.exceptions import InvalidParameters


@unique
class Regime(Enum):
    """ Asymptotic regimes of the random features model.
    """

    # Ridgeless, lambda -> 0+
    R1 = 'r1'
    # Highly overparameterized, psi1 -> inf
    R2 = 'r2'
    # Large sample, psi2 -> inf
    R3 = 'r3'


class RegimeParams(NamedTuple):
    """
    psi1: Number of features per input dimension N/d
    psi2: Number of samples per input dimension n/d
    lam: Ridge regularization lambda
    alpha: Weight of the sensitivity in the objective, in [0, 1)
    f1: Magnitude of the linear part of the target
    f_star: Magnitude of the nonlinear part of the target
    tau: Standard deviation of the label noise
    """
    psi1: float
    psi2: float
    lam: float = 0.0
    alpha: float = 0.0
    f1: float = 1.0
    f_star: float = 0.0
    tau: float = 0.0

    @property
    def noise_sq(self) -> float:
        """
        Everything the linear part of a model cannot capture, F_star^2 + tau^2.
        """
        return self.f_star ** 2 + self.tau ** 2

    @property
    def rho(self) -> float:
        """
        Signal to noise ratio F1^2 / (F_star^2 + tau^2), infinite without noise.
        """
        noise = self.noise_sq
        return inf if noise == 0 else self.f1 ** 2 / noise

    @property
    def inv_rho(self) -> float:
        return self.noise_sq / self.f1 ** 2

    @property
    def psi(self) -> float:
        return min(self.psi1, self.psi2)

    def validate(self) -> 'RegimeParams':
        """
        Check the domain of all constants.
        :return: self to allow chaining
        """
        if not 0 <= self.alpha < 1:
            raise InvalidParameters(f"alpha needs to be in [0, 1), got {self.alpha}.")
        if not self.f1 > 0:
            raise InvalidParameters(f"F1 needs to be positive, got {self.f1}.")
        if self.f_star < 0 or self.tau < 0 or self.lam < 0:
            raise InvalidParameters("F_star, tau and lambda need to be non-negative.")
        if not (self.psi1 > 0 and self.psi2 > 0):
            raise InvalidParameters(f"psi1 and psi2 need to be positive, got {self.psi1}, {self.psi2}.")
        if not all(isfinite(v) for v in (self.alpha, self.f1, self.f_star, self.tau)):
            raise InvalidParameters("Problem constants need to be finite.")
        return self

    def as_dict(self) -> Dict[str, float]:
        return dict(self._asdict())


class RegimeEvaluation(NamedTuple):
    """
    error: Asymptotic test error
    sensitivity: Asymptotic expected squared gradient norm
    objective: (1 - alpha) * error + alpha * sensitivity
    """
    error: float
    sensitivity: float
    objective: float

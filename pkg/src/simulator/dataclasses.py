from typing import Any, Dict, List, NamedTuple, Tuple

import numpy as np

from src.activation.ActivationSpec import BaseActivation
from src.simulator.exceptions import InvalidSimConfig

MIN_DIMENSION = 20
MIN_TEST_POINTS = 100


class SimConfig(NamedTuple):
    """
    d: Input dimension
    psi1: Features per dimension, N = round(psi1 d)
    psi2: Samples per dimension, n = round(psi2 d)
    lam: Ridge regularization lambda, 0 gives the minimum norm interpolator
    af: Activation function
    f0: Intercept of the target
    f1: Norm of the linear part of the target
    f_star: Root mean square of the nonlinear part of the target
    tau: Standard deviation of the label noise
    n_test: Number of test points per trial
    trials: Number of independent trials
    seed: Root seed, trial seeds are spawned from it
    """
    d: int
    psi1: float
    psi2: float
    lam: float
    af: BaseActivation
    f0: float = 0.0
    f1: float = 1.0
    f_star: float = 0.0
    tau: float = 0.0
    n_test: int = 2000
    trials: int = 20
    seed: int = 0

    @property
    def n_features(self) -> int:
        return int(round(self.psi1 * self.d))

    @property
    def n_samples(self) -> int:
        return int(round(self.psi2 * self.d))

    @property
    def penalty(self) -> float:
        """
        Factor N lambda / d of the squared weight norm in the training objective.
        """
        return self.n_features * self.lam / self.d

    def validate(self) -> 'SimConfig':
        if self.d < MIN_DIMENSION:
            raise InvalidSimConfig(f"d needs to be at least {MIN_DIMENSION}, got {self.d}.")
        if self.n_features < 1 or self.n_samples < 1:
            raise InvalidSimConfig(f"psi1 = {self.psi1} and psi2 = {self.psi2} leave no features or samples.")
        if self.n_test < MIN_TEST_POINTS:
            raise InvalidSimConfig(f"n_test needs to be at least {MIN_TEST_POINTS}, got {self.n_test}.")
        if self.trials < 1:
            raise InvalidSimConfig(f"At least one trial is needed, got {self.trials}.")
        if self.lam < 0 or self.f1 <= 0 or self.f_star < 0 or self.tau < 0:
            raise InvalidSimConfig("lambda, F_star and tau need to be non-negative and F1 positive.")
        return self

    def as_row(self) -> Dict[str, Any]:
        return {'d': self.d, 'psi1': self.psi1, 'psi2': self.psi2, 'lambda': self.lam, 'af': self.af.notation}


class SimEstimate(NamedTuple):
    """
    Mean and standard error over trials of the test error, the pointwise sensitivity and the averaged slope
    sensitivity.
    """
    error_mean: float
    error_se: float
    sens_mean: float
    sens_se: float
    avg_sens_mean: float
    avg_sens_se: float
    per_trial: List[Tuple[float, float, float]]

    @classmethod
    def from_trials(cls, per_trial: List[Tuple[float, float, float]]) -> 'SimEstimate':
        values = np.asarray(per_trial, dtype=float)
        means = np.mean(values, axis=0)
        if len(values) < 2:
            ses = np.zeros(values.shape[1])
        else:
            ses = np.std(values, axis=0, ddof=1) / np.sqrt(len(values))
        return cls(error_mean=float(means[0]), error_se=float(ses[0]), sens_mean=float(means[1]),
                   sens_se=float(ses[1]), avg_sens_mean=float(means[2]), avg_sens_se=float(ses[2]),
                   per_trial=[tuple(t) for t in per_trial])

    def to_json_dict(self) -> Dict[str, Any]:
        return {
            'error_mean': self.error_mean,
            'error_se': self.error_se,
            'sens_mean': self.sens_mean,
            'sens_se': self.sens_se,
            'avg_sens_mean': self.avg_sens_mean,
            'avg_sens_se': self.avg_sens_se,
            'per_trial': [list(t) for t in self.per_trial],
        }

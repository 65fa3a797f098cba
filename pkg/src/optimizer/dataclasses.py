from typing import Any, Dict, NamedTuple

from src.activation.dataclasses import Moments
from src.asymptotics.dataclasses import Regime


class R1Thresholds(NamedTuple):
    """
    Thresholds of the ridgeless case distinction.
    beta1, beta2, beta3: Curvature thresholds compared against max(psi1, psi2), beta3 < beta2 < beta1
    alpha_l, alpha_c, alpha_r: Thresholds on the sensitivity weight
    a, b: Thresholds on psi1, only meaningful for psi1 > psi2
    e1, e2: Whether the boundary x = xR has a negative (e1) or positive (e2) slope
    """
    beta1: float
    beta2: float
    beta3: float
    alpha_l: float
    alpha_c: float
    alpha_r: float
    a: float
    b: float
    e1: bool
    e2: bool


class Optimum(NamedTuple):
    """
    Result of one of the regime optimizers.
    regime: Regime the optimum was computed for
    x_opt: Optimal value of the search variable (chi in R1, Moebius variable of omega in R2 and R3)
    branch: Case that produced x_opt
    canonical_moments: Representative of the set of optimal moments with mu0 = 0
    objective: Optimal value of (1 - alpha) * error + alpha * sensitivity
    is_linear: Whether the optimal activation function is linear
    """
    regime: Regime
    x_opt: float
    branch: str
    canonical_moments: Moments
    objective: float
    is_linear: bool

    def to_json_dict(self) -> Dict[str, Any]:
        m = self.canonical_moments
        return {
            'regime': self.regime.value,
            'x_opt': self.x_opt,
            'branch': self.branch,
            'mu0': m.mu0,
            'mu1': m.mu1,
            'mu1_sq': m.mu1_sq,
            'mu_star': m.mu_star,
            'objective': self.objective,
            'is_linear': self.is_linear,
        }

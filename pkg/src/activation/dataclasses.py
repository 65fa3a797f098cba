from math import inf, sqrt
from typing import NamedTuple

MU_STAR_TOLERANCE = 1e-12


class Moments(NamedTuple):
    """
    Gaussian moments of an activation function sigma under Z ~ N(0, 1).
    mu0: E sigma(Z)
    mu1: E Z sigma(Z)
    mu2: E sigma(Z)^2
    mu_star_sq: Nonlinear part mu2 - mu0^2 - mu1^2
    zeta_sq: Ratio mu1^2 / mu_star^2, infinite for linear functions
    """
    mu0: float
    mu1: float
    mu2: float
    mu_star_sq: float
    zeta_sq: float

    @classmethod
    def from_components(cls, mu0: float, mu1: float, mu_star_sq: float) -> 'Moments':
        """
        Build a consistent moment set from the mean, the linear coefficient and the nonlinear part.
        :param mu0: Mean
        :param mu1: Linear coefficient, may be infinite for limiting activation functions
        :param mu_star_sq: Nonlinear part, must be non-negative
        :return: Moments with mu2 and zeta_sq derived
        """
        mu1_sq = mu1 * mu1
        return cls(mu0=mu0, mu1=mu1, mu2=mu0 * mu0 + mu1_sq + mu_star_sq, mu_star_sq=mu_star_sq,
                   zeta_sq=zeta_sq_of(mu1_sq, mu_star_sq))

    @property
    def mu1_sq(self) -> float:
        return self.mu1 * self.mu1

    @property
    def mu_star(self) -> float:
        return sqrt(max(self.mu_star_sq, 0.0))

    @property
    def is_linear(self) -> bool:
        return self.mu_star_sq <= MU_STAR_TOLERANCE and self.mu1 != 0


def zeta_sq_of(mu1_sq: float, mu_star_sq: float) -> float:
    """
    Ratio of linear to nonlinear energy. A vanishing nonlinear part gives infinity unless the function is constant.
    :param mu1_sq:
    :param mu_star_sq:
    :return:
    """
    if mu_star_sq <= MU_STAR_TOLERANCE:
        return inf if mu1_sq != 0 else 0.0
    return mu1_sq / mu_star_sq

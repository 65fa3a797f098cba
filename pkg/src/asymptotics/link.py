"""
Link variables between activation moments and the asymptotic formulas.

chi carries the moment dependence of the ridgeless regime and omega the one of the overparameterized and the large
sample regime. Both are the non-positive root of a quadratic. The Moebius variable x = (1 + omega) / (omega - 1) maps
omega in [-inf, 0] onto [-1, 1].
"""
from math import inf, isinf, sqrt

from src.activation.dataclasses import zeta_sq_of

# Larger ratios are evaluated through the linear limit
ZETA_SQ_INFINITY = 1e12


def negative_root(a: float, b: float, c: float) -> float:
    """
    Non-positive root of a y^2 + b y + c = 0 for a >= 0 and c <= 0.
    The limit a -> 0+ is taken when a vanishes, which gives -inf for b >= 0 > c.
    :param a: Quadratic coefficient
    :param b: Linear coefficient
    :param c: Constant coefficient
    :return: Root y <= 0
    """
    if a == 0:
        if c == 0:
            return 0.0
        return -c / b if b < 0 else -inf

    s = sqrt(b * b - 4 * a * c)
    if b > 0:
        return -(b + s) / (2 * a)
    denominator = s - b
    if denominator == 0:
        return 0.0
    # Product of the roots is c / a
    return 2 * c / denominator


def chi(zeta_sq: float, psi: float) -> float:
    """
    Ridgeless link variable, the non-positive root of zeta^2 chi^2 + (psi zeta^2 - zeta^2 - 1) chi - psi = 0.
    Always lies in [-psi, min(0, 1 - psi)].
    :param zeta_sq: mu1^2 / mu_star^2, may be infinite
    :param psi: min(psi1, psi2)
    :return: chi
    """
    if isinf(zeta_sq) or zeta_sq > ZETA_SQ_INFINITY:
        return negative_root(1.0, psi - 1.0, 0.0)
    return negative_root(zeta_sq, (psi - 1.0) * zeta_sq - 1.0, -psi)


def chi_from_moments(mu1_sq: float, mu_star_sq: float, psi: float) -> float:
    return chi(zeta_sq_of(mu1_sq, mu_star_sq), psi)


def zeta_sq_from_chi(x: float, psi: float) -> float:
    """
    Inverse of chi on (-psi, min(0, 1 - psi)).
    :param x: Value of chi
    :param psi: min(psi1, psi2)
    :return: zeta^2 = (x + psi) / (x (x + psi - 1))
    """
    denominator = x * (x + psi - 1.0)
    if denominator == 0:
        return inf
    return (x + psi) / denominator


def omega(zeta_sq: float, psi: float, lambda_bar: float) -> float:
    """
    Link variable of the overparameterized (psi = psi2) and the large sample regime (psi = psi1).
    Non-positive root of (lambda_bar psi + 1) w^2 + (psi zeta^2 - zeta^2 - lambda_bar psi - 1) w - psi zeta^2 = 0.
    :param zeta_sq: mu1^2 / mu_star^2
    :param psi: psi2 or psi1
    :param lambda_bar: lambda / mu_star^2
    :return: omega <= 0
    """
    if isinf(lambda_bar):
        return 0.0
    lead = lambda_bar * psi + 1.0
    if isinf(zeta_sq) or zeta_sq > ZETA_SQ_INFINITY:
        return negative_root(0.0, psi - 1.0, -psi)
    return negative_root(lead, (psi - 1.0) * zeta_sq - lead, -psi * zeta_sq)


def omega_from_moments(mu1_sq: float, mu_star_sq: float, psi: float, lam: float) -> float:
    """
    Same root as omega, written homogeneously in the moments so linear functions with lambda > 0 stay finite.
    (lambda psi + mu_star^2) w^2 + ((psi - 1) mu1^2 - lambda psi - mu_star^2) w - psi mu1^2 = 0
    :param mu1_sq:
    :param mu_star_sq:
    :param psi: psi2 or psi1
    :param lam: Ridge regularization lambda
    :return: omega <= 0
    """
    if isinf(mu1_sq):
        return negative_root(0.0, psi - 1.0, -psi)
    lead = lam * psi + mu_star_sq
    return negative_root(lead, (psi - 1.0) * mu1_sq - lead, -psi * mu1_sq)


def x_from_omega(w: float) -> float:
    if isinf(w):
        return 1.0
    return (1.0 + w) / (w - 1.0)


def omega_from_x(x: float) -> float:
    if x == 1:
        return -inf
    return (x + 1.0) / (x - 1.0)

"""
Optimal activation function in the highly overparameterized regime.

The objective is convex in the Moebius variable x of omega2 on (-1, min(1, 2 psi2 - 1)) with a negative slope at the
left end and a positive slope at the right end, so the unique root of a quartic is the optimum.
"""
from typing import List, Tuple

from src.activation.dataclasses import Moments
from src.asymptotics.dataclasses import Regime, RegimeParams
from src.asymptotics.link import omega
from src.asymptotics.regimes import combine, r2_terms
from src.optimizer.dataclasses import Optimum
from src.optimizer.roots import unique_root


def r2_interval(psi2: float) -> Tuple[float, float]:
    return -1.0, min(1.0, 2 * psi2 - 1.0)


def r2_polynomial(alpha: float, psi2: float, inv_rho: float) -> List[float]:
    """
    Numerator of dO/dx in the overparameterized regime, up to a positive factor.
    :param alpha: Weight of the sensitivity
    :param psi2: Samples per input dimension
    :param inv_rho: (F_star^2 + tau^2) / F1^2
    :return: Coefficients in ascending order
    """
    return [
        8 * psi2 * inv_rho + alpha + 4 * psi2 * (2 * psi2 - 1) * (2 * alpha - 1),
        8 * psi2 * inv_rho + 4 * ((1 - 4 * psi2) * alpha + 2 * psi2 ** 2),
        -2 * (-3 * alpha + psi2 * (2 + 4 * alpha)),
        4 * alpha,
        alpha,
    ]


def r2_objective_at(x: float, params: RegimeParams) -> float:
    return combine(r2_terms(x, params.psi2), params).objective


def r2_mu1_sq(x: float, psi2: float, lam: float, mu_star_sq: float = 1.0) -> float:
    """
    Linear coefficient that places omega2 at the Moebius variable x for a given nonlinear part.
    :return: mu1^2 = 2 (lambda psi2 + mu_star^2) (1 + x) / ((1 - x)(2 psi2 - 1 - x))
    """
    return 2 * (lam * psi2 + mu_star_sq) * (1 + x) / ((1 - x) * (2 * psi2 - 1 - x))


def solve_r2(params: RegimeParams) -> Optimum:
    """
    Optimal activation function in the highly overparameterized regime.
    :param params: Problem constants, psi1 is ignored
    :return: Optimum with mu_star = 1
    """
    params.validate()
    lo, hi = r2_interval(params.psi2)
    coeffs = r2_polynomial(params.alpha, params.psi2, params.inv_rho)
    x = unique_root(coeffs, lo, hi, lambda t: r2_objective_at(t, params), 'overparameterized')
    moments = Moments.from_components(0.0, r2_mu1_sq(x, params.psi2, params.lam) ** 0.5, 1.0)
    return Optimum(
        regime=Regime.R2,
        x_opt=x,
        branch='unique root of the quartic',
        canonical_moments=moments,
        objective=r2_objective_at(x, params),
        is_linear=False,
    )


def r2_omega_range(zeta_sq: float, psi2: float) -> Tuple[float, float]:
    """
    Values of omega2 reachable with a fixed activation function when lambda is tuned.
    :param zeta_sq: mu1^2 / mu_star^2 of the activation function
    :param psi2: Samples per input dimension
    :return: Tuple (lowest omega, 0), the lowest value is attained for lambda -> 0
    """
    return omega(zeta_sq, psi2, 0.0), 0.0


def r2_optimal_omega_range(psi2: float) -> Tuple[float, float]:
    """
    Values of omega2 reachable by tuning the activation function, which contain all values of r2_omega_range.
    :param psi2: Samples per input dimension
    :return: Tuple (psi2 / min(0-, psi2 - 1), 0)
    """
    lowest = -float('inf') if psi2 >= 1 else psi2 / (psi2 - 1)
    return lowest, 0.0

"""
Optimal activation function in the large sample regime.

Label noise averages out and any nonlinear part only adds error, so the optimal activation function is linear. Its
slope is fixed by the regularization unless it diverges.
"""
from math import inf, sqrt

from src.activation.dataclasses import Moments
from src.asymptotics.dataclasses import Regime, RegimeParams
from src.asymptotics.exceptions import InvalidParameters
from src.asymptotics.link import omega_from_moments, x_from_omega
from src.asymptotics.regimes import combine, r3_terms
from src.optimizer.dataclasses import Optimum
from src.optimizer.overparameterized import r2_interval, r2_polynomial
from src.optimizer.roots import unique_root


def r3_objective_at(x: float, params: RegimeParams) -> float:
    return combine(r3_terms(x, params.psi1, 0.0), params, noise_in_error=False).objective


def _linear_optimum(params: RegimeParams, mu1_sq: float, branch: str) -> Optimum:
    moments = Moments(mu0=0.0, mu1=sqrt(mu1_sq), mu2=mu1_sq, mu_star_sq=0.0, zeta_sq=inf)
    x = x_from_omega(omega_from_moments(mu1_sq, 0.0, params.psi1, params.lam))
    return Optimum(
        regime=Regime.R3,
        x_opt=x,
        branch=branch,
        canonical_moments=moments,
        objective=r3_objective_at(x, params),
        is_linear=True,
    )


def solve_r3(params: RegimeParams) -> Optimum:
    """
    Optimal activation function in the large sample regime.
    :param params: Problem constants, psi2, tau are ignored
    :return: Optimum with mu_star = 0
    """
    params.validate()
    alpha, psi1, lam = params.alpha, params.psi1, params.lam

    if alpha == 0:
        return _linear_optimum(params, inf, 'alpha=0: mu1 -> inf')
    if psi1 == 1 and alpha <= 0.25:
        return _linear_optimum(params, inf, 'psi1=1, 0<alpha<=1/4: mu1 -> inf')

    if lam == 0:
        raise InvalidParameters("The large sample optimum with alpha > 0 needs lambda > 0.")

    if psi1 == 1:
        mu1_sq = lam * (-4 * alpha ** 2 + 3 * alpha + sqrt(alpha)) / (16 * alpha ** 2 - 8 * alpha + 1)
        return _linear_optimum(params, mu1_sq, 'psi1=1, alpha>1/4: closed form')

    lo, hi = r2_interval(psi1)
    x = unique_root(r2_polynomial(alpha, psi1, 0.0), lo, hi, lambda t: r3_objective_at(t, params), 'large sample')
    mu1_sq = 2 * lam * psi1 * (1 + x) / ((2 * psi1 - 1 - x) * (1 - x))
    return _linear_optimum(params, mu1_sq, 'psi1!=1: unique root of the quartic')

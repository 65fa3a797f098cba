"""
Closed-form asymptotic test error and sensitivity in the three regimes.

Every regime is written through a single link variable. Each formula splits into terms that multiply F1^2 and
F_star^2 + tau^2 so the optimizer can evaluate the objective directly on its search variable:

    error       = F1^2 * bias + (F_star^2 + tau^2) * variance + F_star^2
    sensitivity = F1^2 * sens_signal + (F_star^2 + tau^2) * sens_noise

The ridgeless regime uses chi and u = chi zeta^2 = (chi + psi) / (chi + psi - 1), which keeps linear activation
functions (u -> -inf) finite. The other two regimes use the Moebius variable x of omega.
"""
from math import copysign, fsum, inf, isinf
from typing import NamedTuple, Sequence

from src.activation.dataclasses import Moments
from src.asymptotics.dataclasses import Regime, RegimeEvaluation, RegimeParams
from src.asymptotics.exceptions import InterpolationThreshold
from src.asymptotics.link import chi_from_moments, omega_from_moments, x_from_omega

THRESHOLD_TOLERANCE = 1e-12
U_POLE_TOLERANCE = 1e-14


class Terms(NamedTuple):
    bias: float
    variance: float
    sens_signal: float
    sens_noise: float


def _trim(coeffs: Sequence[float]) -> list:
    coeffs = list(coeffs)
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _polyval(coeffs: Sequence[float], u: float) -> float:
    # Compensated summation, the cubic terms cancel for |u| near 1
    return fsum(c * u ** i for i, c in enumerate(coeffs))


def _polymul(p: Sequence[float], q: Sequence[float]) -> list:
    out = [0.0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


def rational_at(num: Sequence[float], den: Sequence[float], u: float) -> float:
    """
    Evaluate num(u) / den(u) for ascending coefficient lists, including u = +-inf.
    :param num: Numerator coefficients, constant first
    :param den: Denominator coefficients, constant first
    :param u: Evaluation point
    :return: Quotient, +-inf at poles
    """
    num, den = _trim(num), _trim(den)
    if isinf(u):
        dn, dd = len(num) - 1, len(den) - 1
        lead = num[-1] / den[-1]
        if dn < dd or num[-1] == 0:
            return 0.0
        if dn == dd:
            return lead
        sign = 1.0 if u > 0 or (dn - dd) % 2 == 0 else -1.0
        return copysign(inf, lead * sign)
    d = _polyval(den, u)
    n = _polyval(num, u)
    if d == 0:
        return 0.0 if n == 0 else copysign(inf, n)
    return n / d


def check_threshold(psi1: float, psi2: float):
    if abs(psi1 - psi2) <= THRESHOLD_TOLERANCE * max(1.0, abs(psi2)):
        raise InterpolationThreshold(f"The ridgeless objective is not defined at psi1 = psi2 = {psi2}.")


class RidgelessPolynomials(NamedTuple):
    """
    Ascending coefficients in u of the ridgeless error (e) and sensitivity (d) polynomials. The coefficients are
    polynomials in chi and work elementwise on arrays of chi.
    """
    e0: list
    e1: list
    e2: list
    d0: list
    d1: list
    d2: list


def r1_polynomials(x, psi1: float, psi2: float) -> RidgelessPolynomials:
    x2 = x * x
    p12 = psi1 * psi2
    e0 = [x2 - p12, -3 * x2 + 2 * x + 3 * p12, 3 * x2 - 2 * x + psi1 + psi2 - 3 * p12 + 1,
          -x2 + (psi1 - 1) * (psi2 - 1)]
    return RidgelessPolynomials(
        e0=e0,
        e1=[-p12, -psi2 * x + p12, psi2 * x],
        e2=[-x2, 3 * x2 - 2 * x, -3 * x2 + 2 * x - psi1 - 1, x2 + psi1 - 1],
        d0=[-c for c in e0],
        d1=[-x, x2 - (psi1 + psi2 + p12 + 1), -2 * x2 + x - 2 * (1 - p12), x2 - (psi1 - 1) * (psi2 - 1)],
        d2=[x, psi1 + 1 - x, -(psi1 - 1)],
    )


def r1_terms(x: float, psi1: float, psi2: float) -> Terms:
    """
    Ridgeless terms as a function of chi.
    :param x: chi in [-psi, min(0, 1 - psi)] with psi = min(psi1, psi2)
    :param psi1:
    :param psi2:
    :return: Terms
    """
    check_threshold(psi1, psi2)
    psi = min(psi1, psi2)
    pole = x + psi - 1.0
    u = -inf if abs(pole) <= U_POLE_TOLERANCE * max(1.0, psi) else (x + psi) / pole

    p = r1_polynomials(x, psi1, psi2)
    # Sensitivity carries an extra factor u, absorbed into the numerators
    return Terms(
        bias=rational_at(p.e1, p.e0, u),
        variance=rational_at(p.e2, p.e0, u),
        sens_signal=rational_at([0.0] + p.d1, _polymul([-1.0, 1.0], p.d0), u),
        sens_noise=rational_at([0.0] + p.d2, p.d0, u),
    )


def r2_terms(x: float, psi2: float) -> Terms:
    """
    Overparameterized terms as a function of the Moebius variable of omega2.
    :param x: In [-1, min(1, 2 psi2 - 1)]
    :param psi2:
    :return: Terms
    """
    y2 = (x + 1.0) ** 2
    if psi2 == 1:
        # 4 - (x + 1)^2 = (1 - x)(3 + x), the factor 1 - x cancels in bias and sens_signal
        variance = inf if x == 1 else y2 / ((1.0 - x) * (3.0 + x))
        return Terms(bias=(1.0 - x) / (3.0 + x), variance=variance, sens_signal=y2 / (3.0 + x), sens_noise=variance)
    den = 4 * psi2 - y2
    if den == 0:
        return Terms(bias=inf, variance=inf, sens_signal=inf, sens_noise=inf)
    return Terms(
        bias=psi2 * (x - 1.0) ** 2 / den,
        variance=y2 / den,
        sens_signal=y2 * (psi2 - x) / den,
        sens_noise=y2 / den,
    )


def r3_terms(x: float, psi1: float, inv_zeta_sq: float) -> Terms:
    """
    Large sample terms as a function of the Moebius variable of omega1. Label noise averages out.
    :param x: In [-1, min(1, 2 psi1 - 1)]
    :param psi1:
    :param inv_zeta_sq: mu_star^2 / mu1^2
    :return: Terms
    """
    y2 = (x + 1.0) ** 2
    if psi1 == 1:
        linear = (1.0 - x) / (3.0 + x)
        den = (1.0 - x) * (3.0 + x)
    else:
        den = 4 * psi1 - y2
        if den == 0:
            return Terms(bias=inf, variance=0.0, sens_signal=inf, sens_noise=0.0)
        linear = psi1 * (x - 1.0) ** 2 / den
    if y2 == 0 or inv_zeta_sq == 0:
        nonlinear = 0.0
    else:
        nonlinear = inf if den == 0 else y2 * inv_zeta_sq / den
    return Terms(bias=linear + nonlinear, variance=0.0, sens_signal=x + linear, sens_noise=0.0)


def _scaled(weight: float, term: float) -> float:
    # 0 * inf is 0 here, a vanishing weight removes the term
    return 0.0 if weight == 0 else weight * term


def combine(terms: Terms, params: RegimeParams, noise_in_error: bool = True) -> RegimeEvaluation:
    """
    Assemble error, sensitivity and objective from the terms.
    :param terms: Output of one of the *_terms functions
    :param params: Problem constants
    :param noise_in_error: The large sample regime has no label noise contribution
    :return: RegimeEvaluation
    """
    f1_sq = params.f1 ** 2
    noise = params.noise_sq if noise_in_error else 0.0
    f_star_sq = params.f_star ** 2
    error = _scaled(f1_sq, terms.bias) + _scaled(noise, terms.variance) + f_star_sq
    sensitivity = _scaled(f1_sq, terms.sens_signal) + _scaled(noise, terms.sens_noise)
    objective = _scaled(1 - params.alpha, error) + _scaled(params.alpha, sensitivity)
    return RegimeEvaluation(error=error, sensitivity=sensitivity, objective=objective)


def _r1(moments: Moments, params: RegimeParams) -> RegimeEvaluation:
    check_threshold(params.psi1, params.psi2)
    x = chi_from_moments(moments.mu1_sq, moments.mu_star_sq, params.psi)
    return combine(r1_terms(x, params.psi1, params.psi2), params)


def _r2(moments: Moments, params: RegimeParams) -> RegimeEvaluation:
    w = omega_from_moments(moments.mu1_sq, moments.mu_star_sq, params.psi2, params.lam)
    return combine(r2_terms(x_from_omega(w), params.psi2), params)


def _inv_zeta_sq(moments: Moments) -> float:
    if isinf(moments.mu1_sq) or moments.mu_star_sq == 0:
        return 0.0
    if moments.mu1_sq == 0:
        return inf
    return moments.mu_star_sq / moments.mu1_sq


def _r3(moments: Moments, params: RegimeParams) -> RegimeEvaluation:
    w = omega_from_moments(moments.mu1_sq, moments.mu_star_sq, params.psi1, params.lam)
    return combine(r3_terms(x_from_omega(w), params.psi1, _inv_zeta_sq(moments)), params, noise_in_error=False)


def error_r1(moments: Moments, params: RegimeParams) -> float:
    return _r1(moments, params).error


def sensitivity_r1(moments: Moments, params: RegimeParams) -> float:
    return _r1(moments, params).sensitivity


def error_r2(moments: Moments, params: RegimeParams) -> float:
    return _r2(moments, params).error


def sensitivity_r2(moments: Moments, params: RegimeParams) -> float:
    return _r2(moments, params).sensitivity


def error_r3(moments: Moments, params: RegimeParams) -> float:
    return _r3(moments, params).error


def sensitivity_r3(moments: Moments, params: RegimeParams) -> float:
    return _r3(moments, params).sensitivity


REGIME_DISPATCH = {
    Regime.R1: _r1,
    Regime.R2: _r2,
    Regime.R3: _r3,
}


def objective(regime: Regime, moments: Moments, params: RegimeParams) -> RegimeEvaluation:
    """
    Evaluate (1 - alpha) * error + alpha * sensitivity in a regime.
    :param regime: R1, R2 or R3
    :param moments: Gaussian moments of the activation function
    :param params: Problem constants
    :return: RegimeEvaluation
    """
    return REGIME_DISPATCH[regime](moments, params)

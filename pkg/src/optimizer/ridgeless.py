"""
Optimal activation function in the ridgeless regime.

The objective depends on the activation function only through chi, which ranges over [xL, xR] with xL = -psi and
xR = min(0, 1 - psi). The numerator of dO/dx is a polynomial of degree five (three when psi1 = 1 < psi2). A case
distinction on alpha, psi1, psi2 and the signal to noise ratio decides whether a boundary point or one of the roots
of that polynomial is optimal. xR is attained by linear activation functions only, xL by functions without linear
part.
"""
import logging
from math import inf, isfinite, isinf, nan, sqrt
from typing import Callable, Dict, List, Optional, Tuple

from scipy.optimize import minimize_scalar

from src.activation.dataclasses import Moments
from src.asymptotics.dataclasses import Regime, RegimeParams
from src.asymptotics.exceptions import InvalidParameters
from src.asymptotics.link import zeta_sq_from_chi
from src.asymptotics.regimes import check_threshold, combine, r1_terms
from src.optimizer.dataclasses import Optimum, R1Thresholds
from src.optimizer.exceptions import TieBreakAmbiguous
from src.optimizer.roots import real_roots_in_interval

DEFAULT_TIE_TOLERANCE = 1e-12
SAFEGUARD_TOLERANCE = 1e-9
LINEAR_TOLERANCE = 1e-12

# Rows: (alpha vs alphaL, E1 / E2, alpha vs alphaC), columns: max(psi1, psi2) vs beta1 > beta2 > beta3.
# 'a|b' picks b if it exists and is strictly better than a. None marks combinations that cannot occur.
R1_TABLE = (
    ('xR', 'xR|x1', 'xR', 'xR'),
    ('x1', 'x1|x3', 'x1', None),
    ('x1', 'x1|x3', 'x1', None),
    (None, 'xL', 'xL', 'xL'),
    (None, 'xR', 'xR', 'xR'),
    ('xL', 'xL|x2', 'xL|x2', 'xL'),
)
ROW_LABELS = (
    'alpha<alphaL, E1',
    'alpha<alphaL, E2, alpha>alphaC',
    'alpha<alphaL, E2, alpha<alphaC',
    'alpha>alphaL, E1, alpha>alphaC',
    'alpha>alphaL, E1, alpha<alphaC',
    'alpha>alphaL, E2',
)
COLUMN_LABELS = (
    'beta1<=psi_bar',
    'beta2<psi_bar<beta1',
    'beta3<psi_bar<=beta2',
    'psi_bar<=beta3',
)


def r1_interval(psi1: float, psi2: float) -> Tuple[float, float]:
    """
    Range of chi over all activation functions.
    :return: Tuple (xL, xR)
    """
    psi = min(psi1, psi2)
    return -psi, min(0.0, 1.0 - psi)


def _psi1_below(a: float, p1: float, p2: float) -> Tuple[List[float], List[float]]:
    c = (p1 - 1) ** 2 * p1 ** 2
    rho_part = [
        -c * (a - 4 * a * p1 + (3 * a - 1) * p2),
        2 * (p1 - 1) * p1 * (a * (p1 * (9 * p1 - 6 * p2 - 4) + p2) + 2 * p1 * p2),
        2 * p1 * (a + 4 * a * p1 * (4 * p1 - 3) + p2 * (4 * a - 9 * a * p1 + 3 * p1 - 1)),
        4 * p1 * (a * (7 * p1 - 2) - 3 * a * p2 + p2),
        a * (12 * p1 - 1) - 3 * a * p2 + p2,
        2 * a,
    ]
    const_part = [
        -c * a,
        -4 * (p1 - 1) * p1 * a * p1,
        -2 * p1 * a * (3 * p1 - 1),
        -4 * p1 * a,
        -a,
        0.0,
    ]
    return rho_part, const_part


def _psi1_one(a: float, p2: float) -> Tuple[List[float], List[float]]:
    rho_part = [-10 * a + 10 * a * p2 - 4 * p2, -20 * a + 12 * a * p2 - 4 * p2, -11 * a + 3 * a * p2 - p2, -2 * a]
    const_part = [4 * a, 4 * a, a, 0.0]
    return rho_part, const_part


def _psi1_above(a: float, p1: float, p2: float) -> Tuple[List[float], List[float]]:
    m = p2 - 1
    rho_part = [
        p2 ** 2 * m ** 2 * (2 * a * p1 - (3 * a + 1) * p2 + a),
        -2 * p2 * m * ((7 * a + 2) * p2 ** 2 - p2 * (4 * a * p1 + 3 * a + 1) + p1),
        -2 * p2 * ((13 * a + 3) * p2 ** 2 - 2 * p2 * (3 * a * p1 + 5 * a + 1) + 2 * a * p1 + a + p1),
        4 * p2 * (2 * a * (p1 + 1) - (6 * a + 1) * p2),
        2 * a * p1 - (11 * a + 1) * p2 + a,
        -2 * a,
    ]
    const_part = [
        p2 ** 2 * (a * p2 ** 2 - 2 * (a + 1) * p2 + a + 2 * p1),
        2 * p2 * (p2 * (2 * a * m - 1) + p1),
        2 * p2 * a * (3 * p2 - 1),
        4 * p2 * a,
        a,
        0.0,
    ]
    return rho_part, const_part


def r1_polynomial(params: RegimeParams) -> List[float]:
    """
    Numerator of dO/dx in the ridgeless regime, divided by the signal to noise ratio so that the noiseless case is
    the limit of vanishing 1/rho.
    :param params: Problem constants
    :return: Coefficients in ascending order
    """
    check_threshold(params.psi1, params.psi2)
    a, p1, p2 = params.alpha, params.psi1, params.psi2
    if p1 < p2:
        rho_part, const_part = _psi1_one(a, p2) if p1 == 1 else _psi1_below(a, p1, p2)
    else:
        rho_part, const_part = _psi1_above(a, p1, p2)
    k = params.inv_rho
    return [r + k * c for r, c in zip(rho_part, const_part)]


def _polynomial_at(coeffs: List[float], x: float) -> float:
    return sum(c * x ** i for i, c in enumerate(coeffs))


def r1_slope_denominator(x: float, params: RegimeParams) -> float:
    p1, p2 = params.psi1, params.psi2
    if p1 < p2:
        if p1 == 1:
            return (2 + x) ** 2 * (p2 - 1)
        return (p1 - (x + p1) ** 2) ** 2 * (p1 - p2)
    return (p2 - (x + p2) ** 2) ** 2 * (p1 - p2)


def r1_slope(x: float, params: RegimeParams) -> float:
    """
    dO/dx in the ridgeless regime.
    :param x: Value of chi in [xL, xR]
    :param params: Problem constants
    :return: Derivative of the objective, +-inf where the objective has a pole
    """
    num = params.f1 ** 2 * _polynomial_at(r1_polynomial(params), x)
    den = r1_slope_denominator(x, params)
    if den == 0:
        return nan if num == 0 else (inf if num > 0 else -inf)
    return num / den


def r1_boundary_slopes(params: RegimeParams) -> Tuple[float, float]:
    """
    :return: Tuple of dO/dx at xL and at xR
    """
    x_l, x_r = r1_interval(params.psi1, params.psi2)
    return r1_slope(x_l, params), r1_slope(x_r, params)


def r1_objective_at(x: float, params: RegimeParams) -> float:
    return combine(r1_terms(x, params.psi1, params.psi2), params).objective


def _require_few_features(params: RegimeParams):
    if not params.psi1 < params.psi2:
        raise InvalidParameters(f"The boundary formula needs psi1 < psi2, got {params.psi1}, {params.psi2}.")


def r1_boundary_objective(params: RegimeParams) -> float:
    """
    Objective at xL for psi1 < psi2, where the activation function has no linear part and the sensitivity vanishes.
    :param params: Problem constants
    :return: (1 - alpha) (psi2 (F1^2 + F_star^2) + psi1 tau^2) / (psi2 - psi1)
    """
    _require_few_features(params)
    p1, p2 = params.psi1, params.psi2
    return (1 - params.alpha) * (p2 * (params.f1 ** 2 + params.f_star ** 2) + p1 * params.tau ** 2) / (p2 - p1)


def r1_linear_error(params: RegimeParams) -> float:
    """
    Test error at xR for psi1 < psi2, i.e. of any linear activation function.
    :param params: Problem constants
    :return: (F_star^2 psi2 + F1^2 max(1 - psi1, 0) psi2 + psi1 tau^2) / (psi2 - psi1)
    """
    _require_few_features(params)
    p1, p2 = params.psi1, params.psi2
    return (params.f_star ** 2 * p2 + params.f1 ** 2 * max(1 - p1, 0.0) * p2 + p1 * params.tau ** 2) / (p2 - p1)


def _curvature_profile(params: RegimeParams) -> Callable[[float], float]:
    """
    Scaled second order behaviour of the objective used by the thresholds for psi1 > psi2.
    """
    p2 = params.psi2
    f1_sq, k = params.f1 ** 2, params.noise_sq
    m = p2 - 1

    def profile(x: float) -> float:
        den = ((x + p2) ** 2 - p2) ** 3
        num = (3 * x ** 2 * (k - f1_sq * m) - 2 * x ** 3 * f1_sq + 6 * x * k * p2
               + p2 * (f1_sq * m ** 2 + k * (3 * p2 + 1)))
        if den == 0:
            return inf
        return -2 * p2 * num / den

    return profile


def _betas_psi1_above(params: RegimeParams) -> Tuple[float, float, float]:
    p2 = params.psi2
    x_l, x_r = r1_interval(params.psi1, p2)
    profile = _curvature_profile(params)
    at_l = profile(x_l)
    at_r = profile(x_r)
    res = minimize_scalar(profile, bounds=(x_l, x_r), method='bounded', options={'xatol': 1e-12})
    lowest = min(float(res.fun), at_l)

    weight = 2 * params.alpha * params.f1 ** 2

    def beta(curvature: float) -> float:
        return p2 if isinf(curvature) else p2 + weight / curvature

    return beta(lowest), beta(at_l), beta(at_r)


def r1_thresholds(params: RegimeParams) -> R1Thresholds:
    """
    Thresholds of the ridgeless case distinction.
    :param params: Problem constants
    :return: R1Thresholds
    """
    check_threshold(params.psi1, params.psi2)
    p1, p2, alpha, k = params.psi1, params.psi2, params.alpha, params.inv_rho

    if p1 < p2:
        beta1 = (min(p1 - 4, -3 * p1) - 8 * sqrt(abs(1 - p1)) * max(1 / p1, p1 ** 1.5)
                 + 8 * max(1 / p1, p1 ** 2))
        beta2 = p1 * (p1 + 2) / (p1 + 1)
        beta3 = p1 + abs(1 - p1) * min(p1, 1 / p1)
        alpha_l = p2 / (p2 + 1 + k)
        alpha_c = p2 / (2 * p2 - p1 + max(0.0, 1 - p1) + k)
        alpha_r = p2 / (3 * p2 + 1 - 2 * min(1 + p1, 2 * p1) + k)
        return R1Thresholds(beta1=beta1, beta2=beta2, beta3=beta3, alpha_l=alpha_l, alpha_c=alpha_c,
                            alpha_r=alpha_r, a=nan, b=nan, e1=alpha < alpha_r, e2=alpha > alpha_r)

    beta1, beta2, beta3 = _betas_psi1_above(params)
    alpha_l = (2 * p1 - p2) / (2 * p1 - p2 + 1 + k)
    m2 = (p2 - 1) ** 2
    if p2 == 1:
        return R1Thresholds(beta1=beta1, beta2=beta2, beta3=beta3, alpha_l=alpha_l, alpha_c=-inf, alpha_r=nan,
                            a=1.0, b=1.0, e1=False, e2=True)

    alpha_c = (p1 - k * (p1 - p2) / abs(1 - p2)) / (max(0.0, 1 - p2) + 2 * p1 - p2 + k)
    alpha_r = ((2 * k * (p1 - p2) * max(1.0, p2) - m2 * p2)
               / (m2 * (2 * min(1.0, p2) - 2 * p1 + p2 - 1 - k)))
    a = inf if k == 0 else p2 + min(1.0, p2) * m2 / (2 * k)
    b = ((m2 * (2 * p2 + 1 + 2 * min(p2 - 1, 0.0)) + k * (2 * p2 - 1 + 2 * p2 * max(p2, 1.0) - p2 ** 2))
         / (2 * m2 + 2 * k * max(1.0, p2)))
    middle = b < p1 < a
    e1 = p1 < b or (alpha < alpha_r and middle)
    e2 = p1 > a or (alpha > alpha_r and middle)
    return R1Thresholds(beta1=beta1, beta2=beta2, beta3=beta3, alpha_l=alpha_l, alpha_c=alpha_c, alpha_r=alpha_r,
                        a=a, b=b, e1=e1, e2=e2)


def _check_ties(params: RegimeParams, th: R1Thresholds, tolerance: float):
    for name, value in (('alphaL', th.alpha_l), ('alphaC', th.alpha_c), ('alphaR', th.alpha_r)):
        if isfinite(value) and abs(params.alpha - value) <= tolerance:
            raise TieBreakAmbiguous(f"alpha = {params.alpha} coincides with {name} = {value}.")
    if params.psi1 > params.psi2:
        for name, value in (('A', th.a), ('B', th.b)):
            if isfinite(value) and abs(params.psi1 - value) <= tolerance:
                raise TieBreakAmbiguous(f"psi1 = {params.psi1} coincides with {name} = {value}.")


def _table_cell(params: RegimeParams, th: R1Thresholds) -> Tuple[Optional[int], int]:
    alpha = params.alpha
    if alpha < th.alpha_l:
        if th.e1:
            row = 0
        elif th.e2:
            row = 1 if alpha > th.alpha_c else 2
        else:
            row = None
    else:
        if th.e1:
            row = 3 if alpha > th.alpha_c else 4
        elif th.e2:
            row = 5
        else:
            row = None

    psi_bar = max(params.psi1, params.psi2)
    if psi_bar >= th.beta1:
        column = 0
    elif psi_bar > th.beta2:
        column = 1
    elif psi_bar > th.beta3:
        column = 2
    else:
        column = 3
    return row, column


def _resolve(entry: str, candidates: Dict[str, float], values: Dict[str, float]) -> Optional[str]:
    first, _, second = entry.partition('|')
    if first not in candidates:
        return None
    if second and second in candidates and values[second] < values[first]:
        return second
    return first


def _canonical_moments(x: float, x_l: float, x_r: float, psi: float) -> Moments:
    if x == x_r:
        return Moments.from_components(0.0, 1.0, 0.0)
    if x == x_l:
        return Moments.from_components(0.0, 0.0, 1.0)
    return Moments.from_components(0.0, sqrt(zeta_sq_from_chi(x, psi)), 1.0)


def solve_r1(params: RegimeParams, tie_tolerance: float = DEFAULT_TIE_TOLERANCE) -> Optimum:
    """
    Optimal activation function in the ridgeless regime.
    :param params: Problem constants, lambda is ignored
    :param tie_tolerance: Distance to a threshold below which the case distinction is considered ambiguous
    :return: Optimum
    """
    params.validate()
    check_threshold(params.psi1, params.psi2)
    th = r1_thresholds(params)
    _check_ties(params, th, tie_tolerance)

    x_l, x_r = r1_interval(params.psi1, params.psi2)
    roots = real_roots_in_interval(r1_polynomial(params), x_l, x_r)
    candidates = {'xL': x_l, 'xR': x_r}
    candidates.update({f'x{i + 1}': r for i, r in enumerate(roots)})
    values = {name: r1_objective_at(x, params) for name, x in candidates.items()}
    logging.debug(f"Ridgeless thresholds {th._asdict()}, candidates {candidates}, objectives {values}")

    row, column = _table_cell(params, th)
    entry = None if row is None else R1_TABLE[row][column]
    cell = f"{'no row' if row is None else ROW_LABELS[row]} / {COLUMN_LABELS[column]}"
    chosen = None if entry is None else _resolve(entry, candidates, values)

    best = min(values, key=values.get)
    if chosen is None:
        logging.warning(f"Case distinction gives no candidate for {cell} at {params.as_dict()}, "
                        f"using the best of {sorted(candidates)}.")
        chosen, branch = best, f"{cell}: {entry} -> candidate scan"
    else:
        branch = f"{cell}: {entry}"
        reference = values[chosen]
        if values[best] < reference - SAFEGUARD_TOLERANCE * max(1.0, abs(reference)):
            logging.warning(f"{best} improves on {chosen} selected by {cell} at {params.as_dict()}: "
                            f"{values[best]} < {reference}.")
            chosen, branch = best, f"{branch} -> candidate scan"

    x_opt = candidates[chosen]
    is_linear = abs(x_opt - x_r) <= LINEAR_TOLERANCE
    if is_linear:
        x_opt = x_r
    return Optimum(
        regime=Regime.R1,
        x_opt=x_opt,
        branch=f"{branch} = {chosen}",
        canonical_moments=_canonical_moments(x_opt, x_l, x_r, params.psi),
        objective=values[chosen],
        is_linear=is_linear,
    )

"""
Activation functions with prescribed Gaussian moments and minimal derivative norm.

Under sqrt(E sigma'(Z)^2) the minimizers are the two quadratics a x^2 + b x + c with a = +-mu_star / sqrt(2).
Under E|sigma'(Z)| the symmetric saturated linear function mu0 + b clip(x, -s, s) is a minimizer. Its saturation
point s solves a monotone scalar equation in mu1^2 / mu_star^2.
"""
import logging
from math import exp, inf, isinf, pi, sqrt

import numpy as np
from scipy.optimize import bisect
from scipy.special import erf as _erf, erfc

from src.activation.ActivationSpec import LinearActivation, QuadraticActivation, SaturatedLinearActivation
from src.activation.dataclasses import MU_STAR_TOLERANCE, Moments
from src.synthesis.dataclasses import NormKind, SynthesizedAF
from src.synthesis.exceptions import InvalidMoments, SolverDiverged

# Infimum of satlin_zeta_sq, approached for s -> 0
SATLIN_ZETA_SQ_MIN = 2 / (pi - 2)
S_START = 1.0
S_CAP = 40.0
ZETA_SQ_TOLERANCE = 1e-12


def erf(x: float) -> float:
    return float(_erf(x))


def _check_target(target: Moments):
    if target.mu_star_sq < -MU_STAR_TOLERANCE:
        raise InvalidMoments(f"mu2 = {target.mu2} is below mu0^2 + mu1^2, mu_star^2 = {target.mu_star_sq}.")


def synthesize_l2(target: Moments, sign: int = 1) -> SynthesizedAF:
    """
    Quadratic activation function with the target moments and minimal sqrt(E sigma'(Z)^2).
    :param target: Moments to be realized
    :param sign: Sign of the quadratic coefficient, both signs are minimizers
    :return: SynthesizedAF
    """
    _check_target(target)
    mu_star_sq = max(target.mu_star_sq, 0.0)
    norm = sqrt(target.mu1_sq + 2 * mu_star_sq)
    if mu_star_sq <= MU_STAR_TOLERANCE:
        return SynthesizedAF(af=LinearActivation(target.mu1, target.mu0), target=target, norm_kind=NormKind.TWO,
                             norm_value=norm)
    a = (1 if sign >= 0 else -1) * sqrt(mu_star_sq / 2)
    return SynthesizedAF(af=QuadraticActivation(a, target.mu1, target.mu0 - a), target=target,
                         norm_kind=NormKind.TWO, norm_value=norm)


def satlin_zeta_sq(s: float) -> float:
    """
    mu1^2 / mu_star^2 of x -> clip(x, -s, s).
    :param s: Saturation point
    :return: erf^2 / (erf (1 - erf) + s^2 erfc - 2 s phi(s)) with erf and erfc taken at s / sqrt(2)
    """
    if isinf(s):
        return inf
    if s <= 0:
        return SATLIN_ZETA_SQ_MIN
    r = s / sqrt(2)
    e, ec = erf(r), float(erfc(r))
    den = e * ec + s * s * ec - 2 * s * exp(-0.5 * s * s) / sqrt(2 * pi)
    if den <= 0:
        return inf
    return e * e / den


def find_saturation(zeta_sq: float) -> float:
    """
    Saturation point s with satlin_zeta_sq(s) = zeta_sq.
    :param zeta_sq: Target ratio mu1^2 / mu_star^2
    :return: s
    """
    if zeta_sq <= SATLIN_ZETA_SQ_MIN:
        raise SolverDiverged(f"zeta^2 = {zeta_sq} is not above the infimum {SATLIN_ZETA_SQ_MIN} of the family.")

    hi = S_START
    while satlin_zeta_sq(hi) < zeta_sq:
        hi *= 2
        if hi > S_CAP:
            raise SolverDiverged(f"No saturation point below {S_CAP} reaches zeta^2 = {zeta_sq}.")

    s = bisect(lambda t: satlin_zeta_sq(t) - zeta_sq, 0.0, hi, xtol=1e-15, rtol=4 * np.finfo(float).eps, maxiter=500)
    residual = abs(satlin_zeta_sq(s) - zeta_sq)
    if residual > ZETA_SQ_TOLERANCE * max(1.0, zeta_sq):
        logging.debug(f"Saturation point {s} leaves a residual of {residual} for zeta^2 = {zeta_sq}")
    return s


def synthesize_l1(target: Moments) -> SynthesizedAF:
    """
    Symmetric saturated linear activation function with the target moments and minimal E|sigma'(Z)|.
    :param target: Moments to be realized
    :return: SynthesizedAF
    """
    _check_target(target)
    norm = abs(target.mu1)
    if target.mu_star_sq <= MU_STAR_TOLERANCE:
        return SynthesizedAF(af=LinearActivation(target.mu1, target.mu0), target=target, norm_kind=NormKind.ONE,
                             norm_value=norm)
    s = find_saturation(target.mu1_sq / target.mu_star_sq)
    b = target.mu1 / erf(s / sqrt(2))
    logging.debug(f"Saturated linear function for {target}: s={s}, b={b}")
    return SynthesizedAF(af=SaturatedLinearActivation(target.mu0, b, s), target=target, norm_kind=NormKind.ONE,
                         norm_value=norm, s_param=s)

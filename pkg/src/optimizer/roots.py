"""
Real roots of low degree polynomials on an open interval.

The critical points of p split the interval into monotone pieces, so every simple root is bracketed by a sign change
on one piece. Critical points are found the same way on p', recursively. Roots of even multiplicity coincide with a
critical point and are accepted when p is small enough there.
"""
import logging
from typing import Callable, List, Sequence

import numpy as np
from numpy.polynomial import polynomial as P
from scipy.optimize import brentq

from src.optimizer.exceptions import DegenerateLeadingCoefficient, RootNotFound

ZERO_COEFFICIENT = 1e-300
MERGE_DISTANCE = 1e-9
DEFAULT_TOLERANCE = 1e-12


def _scale(coeffs: np.ndarray, lo: float, hi: float) -> float:
    r = max(1.0, abs(lo), abs(hi))
    return float(sum(abs(c) * r ** i for i, c in enumerate(coeffs)))


def _trim(coeffs: Sequence[float]) -> np.ndarray:
    c = np.asarray(coeffs, dtype=np.float64)
    if c.size == 0 or np.all(np.abs(c) <= ZERO_COEFFICIENT):
        raise DegenerateLeadingCoefficient(f"All coefficients of {list(coeffs)} vanish.")
    last = int(np.max(np.nonzero(np.abs(c) > ZERO_COEFFICIENT)))
    return c[:last + 1]


def _roots(c: np.ndarray, lo: float, hi: float, tol: float) -> List[float]:
    degree = len(c) - 1
    if degree == 0:
        return []
    if degree == 1:
        root = -c[0] / c[1]
        return [root] if lo < root < hi else []

    derivative = P.polyder(c)
    if np.all(np.abs(derivative) <= ZERO_COEFFICIENT):
        return []
    critical = _roots(_trim(derivative), lo, hi, tol)
    scale = _scale(c, lo, hi)
    found = []

    edges = [lo] + critical + [hi]
    values = [float(P.polyval(e, c)) for e in edges]
    for i in range(len(edges) - 1):
        a, b = edges[i], edges[i + 1]
        fa, fb = values[i], values[i + 1]
        if fa * fb < 0:
            found.append(brentq(lambda t: P.polyval(t, c), a, b, xtol=1e-15, rtol=4 * np.finfo(float).eps))
    for e, v in zip(edges[1:-1], values[1:-1]):
        if abs(v) <= tol * scale:
            found.append(e)
    return sorted(found)


def real_roots_in_interval(coeffs: Sequence[float], lo: float, hi: float,
                           tol: float = DEFAULT_TOLERANCE) -> List[float]:
    """
    All real roots of a polynomial strictly inside (lo, hi).
    :param coeffs: Coefficients in ascending order, constant first
    :param lo: Lower end of the interval
    :param hi: Upper end of the interval
    :param tol: Relative tolerance |p(root)| <= tol * scale(p) for roots of even multiplicity
    :return: Sorted roots, roots closer than 1e-9 merged
    """
    if not lo < hi:
        return []
    c = _trim(coeffs)
    roots = _roots(c, lo, hi, tol)

    merged = []
    for r in roots:
        if merged and r - merged[-1] <= MERGE_DISTANCE:
            continue
        merged.append(float(r))
    return merged


def unique_root(coeffs: Sequence[float], lo: float, hi: float, objective: Callable[[float], float],
                what: str) -> float:
    """
    Root of a stationarity polynomial that is known to have exactly one root in (lo, hi).
    :param coeffs: Coefficients in ascending order
    :param lo: Lower end of the interval
    :param hi: Upper end of the interval
    :param objective: Used to pick the best root if roundoff produces several
    :param what: Name of the problem for messages
    :return: Root
    """
    roots = real_roots_in_interval(coeffs, lo, hi)
    if not roots:
        raise RootNotFound(f"No stationary point of the {what} objective in ({lo}, {hi}), coefficients {list(coeffs)}.")
    if len(roots) > 1:
        logging.warning(f"Several stationary points {roots} of the {what} objective, taking the best.")
    return min(roots, key=objective)

"""
Gaussian moments and functional norms of activation functions.

Smooth functions are integrated with Gauss-Hermite quadrature for the probabilists' weight exp(-x^2/2).
Functions with kinks are integrated panel-wise with Gauss-Legendre rules on the window |x| <= 12, split at every kink,
so no node sits on a discontinuity of sigma'.
"""
import logging
from math import pi, sqrt
from typing import Tuple

import numpy as np
from scipy.special import roots_hermitenorm, roots_legendre

from src.activation.ActivationSpec import BaseActivation
from src.activation.dataclasses import Moments, zeta_sq_of
from src.activation.exceptions import NegativeMuStar, NonFiniteValue, QuadratureError

DEFAULT_NODES = 201
MIN_NODES = 21
QUADRATURE_WINDOW = 12.0
MAX_PANEL_WIDTH = 3.0

KINK_SHIFT = 1e-13
MU_STAR_FAILURE = -1e-8

_SQRT_2PI = sqrt(2 * pi)


def gauss_hermite_rule(nodes: int, kinks: Tuple[float, ...] = ()) -> Tuple[np.ndarray, np.ndarray]:
    """
    Nodes and weights for E g(Z), Z ~ N(0, 1). The weights sum up to one.
    :param nodes: Number of nodes
    :param kinks: Nodes coinciding with one of these points are shifted by a tiny amount
    :return: Tuple of nodes and weights
    """
    x, w = roots_hermitenorm(nodes)
    for k in kinks:
        x = np.where(np.abs(x - k) < KINK_SHIFT, x + KINK_SHIFT, x)
    return x, w / _SQRT_2PI


def piecewise_legendre_rule(nodes: int, kinks: Tuple[float, ...] = (),
                            window: float = QUADRATURE_WINDOW) -> Tuple[np.ndarray, np.ndarray]:
    """
    Composite Gauss-Legendre rule for E g(Z) with panel borders at every kink inside the window.
    The standard normal density is folded into the weights.
    :param nodes: Number of nodes per panel
    :param kinks: Break points
    :param window: Half width of the integration window
    :return: Tuple of nodes and weights
    """
    breaks = {-window, window}
    breaks.update(k for k in kinks if -window < k < window)
    breaks = sorted(breaks)

    # Subdivide long panels
    edges = [breaks[0]]
    for lo, hi in zip(breaks[:-1], breaks[1:]):
        n_sub = int(np.ceil((hi - lo) / MAX_PANEL_WIDTH))
        edges.extend(np.linspace(lo, hi, n_sub + 1)[1:])

    ref_x, ref_w = roots_legendre(nodes)
    xs, ws = [], []
    for lo, hi in zip(edges[:-1], edges[1:]):
        half = 0.5 * (hi - lo)
        mid = 0.5 * (hi + lo)
        xs.append(mid + half * ref_x)
        ws.append(half * ref_w)
    x = np.concatenate(xs)
    w = np.concatenate(ws) * np.exp(-0.5 * x * x) / _SQRT_2PI
    return x, w


def quadrature_rule(af: BaseActivation, nodes: int,
                    window: float = QUADRATURE_WINDOW) -> Tuple[np.ndarray, np.ndarray]:
    """
    Choose the rule for an activation function.
    :param af: Activation function
    :param nodes: Number of nodes (per panel for kinked functions)
    :param window: Half width of the integration window of kinked functions
    :return: Tuple of nodes and weights
    """
    if nodes < MIN_NODES:
        raise QuadratureError(f"At least {MIN_NODES} nodes are needed, got {nodes}.")
    if af.kinks:
        return piecewise_legendre_rule(nodes, af.kinks, window)
    return gauss_hermite_rule(nodes, af.kinks)


def _evaluate(func, x: np.ndarray, what: str, af: BaseActivation) -> np.ndarray:
    values = np.asarray(func(x), dtype=np.float64)
    if not np.all(np.isfinite(values)):
        bad = x[~np.isfinite(values)][0]
        raise NonFiniteValue(f"{what} of {af.notation} is not finite at x={bad}.")
    return values


def compute_moments(af: BaseActivation, nodes: int = DEFAULT_NODES, window: float = QUADRATURE_WINDOW) -> Moments:
    """
    Compute (E sigma(Z), E Z sigma(Z), E sigma(Z)^2, mu_star^2, zeta^2) for Z ~ N(0, 1).
    :param af: Activation function
    :param nodes: Number of quadrature nodes
    :return: Moments
    """
    x, w = quadrature_rule(af, nodes, window)
    s = _evaluate(af.value, x, 'Value', af)

    mu0 = float(np.dot(w, s))
    mu1 = float(np.dot(w, x * s))
    mu2 = float(np.dot(w, s * s))
    mu_star_sq = mu2 - mu0 * mu0 - mu1 * mu1

    if mu_star_sq < MU_STAR_FAILURE:
        raise NegativeMuStar(f"mu_star^2 = {mu_star_sq} for {af.notation}, the quadrature did not converge.")
    if mu_star_sq < 0:
        # Roundoff near linear functions
        mu_star_sq = 0.0

    logging.debug(f"Moments of {af.notation} with {len(x)} nodes: mu0={mu0}, mu1={mu1}, mu2={mu2}")
    return Moments(mu0=mu0, mu1=mu1, mu2=mu2, mu_star_sq=mu_star_sq, zeta_sq=zeta_sq_of(mu1 * mu1, mu_star_sq))


def functional_norms(af: BaseActivation, nodes: int = DEFAULT_NODES,
                     window: float = QUADRATURE_WINDOW) -> Tuple[float, float]:
    """
    Simplicity measures of an activation function.
    :param af: Activation function
    :param nodes: Number of quadrature nodes
    :return: Tuple of E|sigma'(Z)| and sqrt(E sigma'(Z)^2)
    """
    x, w = quadrature_rule(af, nodes, window)
    d = _evaluate(af.weak_derivative, x, 'Weak derivative', af)
    return float(np.dot(w, np.abs(d))), sqrt(float(np.dot(w, d * d)))


def max_linear_deviation(af: BaseActivation, nodes: int = DEFAULT_NODES) -> float:
    """
    Largest density weighted distance between sigma and its linear part mu0 + mu1 x over the quadrature nodes.
    Vanishes for functions that are linear almost surely.
    :param af: Activation function
    :param nodes: Number of quadrature nodes
    :return: max |sigma(x) - mu0 - mu1 x| * phi(x)
    """
    m = compute_moments(af, nodes)
    x, _ = quadrature_rule(af, nodes)
    s = _evaluate(af.value, x, 'Value', af)
    density = np.exp(-0.5 * x * x) / _SQRT_2PI
    return float(np.max(np.abs(s - m.mu0 - m.mu1 * x) * density))

"""
Brute force minimization of the regime objectives on a dense grid of the search variable.
"""
from typing import Tuple

import numpy as np

from src.asymptotics.dataclasses import Regime, RegimeParams
from src.asymptotics.regimes import r1_polynomials
from src.optimizer.exceptions import OptimizerError
from src.optimizer.overparameterized import r2_interval
from src.optimizer.ridgeless import r1_interval, r1_objective_at

MIN_GRID_POINTS = 1001
OPEN_END_MARGIN = 1e-6


def _weighted(params: RegimeParams, bias, variance, sens_signal, sens_noise, noise_sq: float) -> np.ndarray:
    f1_sq = params.f1 ** 2
    error = f1_sq * bias + noise_sq * variance + params.f_star ** 2
    sensitivity = f1_sq * sens_signal + noise_sq * sens_noise
    return (1 - params.alpha) * error + params.alpha * sensitivity


def _poly(coeffs, u: np.ndarray) -> np.ndarray:
    return sum(c * u ** i for i, c in enumerate(coeffs))


def r1_curve(x: np.ndarray, params: RegimeParams) -> np.ndarray:
    """
    Ridgeless objective on points strictly left of the pole of u = (x + psi) / (x + psi - 1), evaluated on the
    whole grid at once with the polynomials of the asymptotics module.
    """
    psi = min(params.psi1, params.psi2)
    u = (x + psi) / (x + psi - 1)
    p = r1_polynomials(x, params.psi1, params.psi2)
    e0, d0 = _poly(p.e0, u), _poly(p.d0, u)
    sens_signal = u * _poly(p.d1, u) / ((u - 1) * d0)
    sens_noise = u * _poly(p.d2, u) / d0
    return _weighted(params, _poly(p.e1, u) / e0, _poly(p.e2, u) / e0, sens_signal, sens_noise, params.noise_sq)


def r2_curve(x: np.ndarray, params: RegimeParams) -> np.ndarray:
    y2 = (x + 1) ** 2
    den = 4 * params.psi2 - y2
    return _weighted(params, params.psi2 * (x - 1) ** 2 / den, y2 / den, y2 * (params.psi2 - x) / den, y2 / den,
                     params.noise_sq)


def r3_curve(x: np.ndarray, params: RegimeParams) -> np.ndarray:
    """
    Large sample objective of linear activation functions.
    """
    den = 4 * params.psi1 - (x + 1) ** 2
    linear = params.psi1 * (x - 1) ** 2 / den
    zero = np.zeros_like(x)
    return _weighted(params, linear, zero, x + linear, zero, 0.0)


def grid_oracle(regime: Regime, params: RegimeParams, grid_points: int = 20001) -> Tuple[float, float]:
    """
    Grid argmin of the objective over the search interval of a regime. Open interval ends are approached to 1e-6.
    :param regime: R1, R2 or R3
    :param params: Problem constants
    :param grid_points: Number of grid points
    :return: Tuple of the best grid point and its objective
    """
    if grid_points < MIN_GRID_POINTS:
        raise OptimizerError(f"The grid needs at least {MIN_GRID_POINTS} points, got {grid_points}.")

    if regime is Regime.R1:
        lo, hi = r1_interval(params.psi1, params.psi2)
        x = np.linspace(lo, hi, grid_points)
        # The right end may be the pole of u
        values = np.append(r1_curve(x[:-1], params), r1_objective_at(hi, params))
    else:
        lo, hi = r2_interval(params.psi2 if regime is Regime.R2 else params.psi1)
        x = np.linspace(lo + OPEN_END_MARGIN, hi - OPEN_END_MARGIN, grid_points)
        values = r2_curve(x, params) if regime is Regime.R2 else r3_curve(x, params)

    best = int(np.nanargmin(values))
    return float(x[best]), float(values[best])

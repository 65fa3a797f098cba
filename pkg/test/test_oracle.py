import numpy as np
import pytest

from src.asymptotics.dataclasses import Regime, RegimeParams
from src.asymptotics.exceptions import InterpolationThreshold
from src.optimizer.exceptions import OptimizerError, TieBreakAmbiguous
from src.optimizer.large_sample import r3_objective_at, solve_r3
from src.optimizer.oracle import grid_oracle, r1_curve, r2_curve, r3_curve
from src.optimizer.overparameterized import r2_interval, r2_objective_at, solve_r2
from src.optimizer.ridgeless import r1_interval, r1_objective_at, r1_polynomial, r1_slope, \
    r1_slope_denominator, solve_r1

DRAWS = 200
FD_STEP = 1e-6


def _random_params(rng, regime):
    psi1 = rng.uniform(0.1, 5.0)
    psi2 = rng.uniform(0.1, 5.0)
    if regime is Regime.R1:
        while abs(psi1 - psi2) < 0.1:
            psi2 = rng.uniform(0.1, 5.0)
    return RegimeParams(psi1=psi1, psi2=psi2, lam=rng.uniform(0.01, 2.0), alpha=rng.uniform(0.05, 0.95),
                        f1=rng.uniform(0.5, 2.0), f_star=rng.uniform(0.0, 1.0), tau=rng.uniform(0.0, 1.0))


class TestCurves:
    @pytest.mark.parametrize("params", [
        RegimeParams(psi1=0.5, psi2=3.0, alpha=0.3, tau=1.0),
        RegimeParams(psi1=2.0, psi2=0.7, alpha=0.6, f_star=0.4),
        RegimeParams(psi1=1.5, psi2=4.0, alpha=0.1, f1=2.0, tau=0.3),
    ])
    def test_r1_curve(self, params):
        x_l, x_r = r1_interval(params.psi1, params.psi2)
        xs = np.linspace(x_l, x_r, 11)[:-1]
        np.testing.assert_allclose(r1_curve(xs, params), [r1_objective_at(x, params) for x in xs], rtol=1e-10)

    def test_r2_r3_curves(self):
        params = RegimeParams(psi1=1.7, psi2=2.5, lam=0.3, alpha=0.4, f_star=0.5, tau=0.8)
        xs = np.linspace(-0.9, 0.9, 7)
        np.testing.assert_allclose(r2_curve(xs, params), [r2_objective_at(x, params) for x in xs], rtol=1e-12)
        np.testing.assert_allclose(r3_curve(xs, params), [r3_objective_at(x, params) for x in xs], rtol=1e-12)


class TestGridOracle:
    def test_too_coarse(self):
        with pytest.raises(OptimizerError):
            grid_oracle(Regime.R2, RegimeParams(psi1=1.0, psi2=2.0), 100)

    def test_linear_end(self, noiseless_params):
        x, value = grid_oracle(Regime.R1, noiseless_params, 1001)
        assert x == pytest.approx(0, abs=1e-3)
        assert value == pytest.approx(0.6, abs=1e-12)

    def test_saturated_weight(self):
        """
        Close to alpha = 1 the sensitivity dominates and the grid search still returns a finite optimum.
        """
        params = RegimeParams(psi1=2.0, psi2=3.0, lam=0.1, alpha=0.999, tau=0.5)
        for regime in Regime:
            x, value = grid_oracle(regime, params)
            assert np.isfinite(x) and np.isfinite(value)


@pytest.mark.slow
@pytest.mark.timeout(120)
class TestOracleEquivalence:
    def test_ridgeless(self):
        rng = np.random.default_rng(2021)
        compared = 0
        for _ in range(DRAWS):
            params = _random_params(rng, Regime.R1)
            try:
                optimum = solve_r1(params)
            except (TieBreakAmbiguous, InterpolationThreshold):
                continue
            _, grid_value = grid_oracle(Regime.R1, params, 20001)
            assert optimum.objective == pytest.approx(grid_value, rel=1e-3, abs=1e-9), params

            x_l, x_r = r1_interval(params.psi1, params.psi2)
            x = optimum.x_opt
            if x_l < x < x_r:
                coeffs = r1_polynomial(params)
                scale = params.f1 ** 2 * sum(abs(c) * abs(x) ** i for i, c in enumerate(coeffs))
                scale /= abs(r1_slope_denominator(x, params))
                assert abs(r1_slope(x, params)) <= 1e-5 * max(1.0, scale), params
            compared += 1
        assert compared > DRAWS // 2

    def test_overparameterized(self):
        rng = np.random.default_rng(2022)
        for _ in range(DRAWS):
            params = _random_params(rng, Regime.R2)
            optimum = solve_r2(params)
            _, grid_value = grid_oracle(Regime.R2, params, 20001)
            assert optimum.objective == pytest.approx(grid_value, rel=1e-3, abs=1e-9), params
            x = optimum.x_opt
            lo, hi = r2_interval(params.psi2)
            if not lo + 1e-4 < x < hi - 1e-4:
                continue
            slope = (r2_objective_at(x + FD_STEP, params) - r2_objective_at(x - FD_STEP, params)) / (2 * FD_STEP)
            assert abs(slope) <= 1e-5 * max(1.0, abs(optimum.objective)), params

    def test_large_sample(self):
        rng = np.random.default_rng(2023)
        for _ in range(DRAWS):
            params = _random_params(rng, Regime.R3)
            optimum = solve_r3(params)
            _, grid_value = grid_oracle(Regime.R3, params, 20001)
            assert optimum.objective == pytest.approx(grid_value, rel=1e-3, abs=1e-9), params

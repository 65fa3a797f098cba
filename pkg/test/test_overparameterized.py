from math import inf, sqrt

import numpy as np
import pytest

from src.activation.dataclasses import Moments
from src.asymptotics.dataclasses import Regime, RegimeParams
from src.asymptotics.link import omega_from_moments, x_from_omega
from src.asymptotics.regimes import objective
from src.optimizer.overparameterized import r2_interval, r2_mu1_sq, r2_objective_at, r2_omega_range, \
    r2_optimal_omega_range, solve_r2

FD_STEP = 1e-6


def _params(psi2=2.0, lam=0.1, alpha=0.0, f1=1.0, f_star=0.0, tau=1.0):
    return RegimeParams(psi1=inf, psi2=psi2, lam=lam, alpha=alpha, f1=f1, f_star=f_star, tau=tau)


class TestSolveR2:
    @pytest.mark.parametrize("params", [
        _params(),
        _params(alpha=0.3, tau=0.5),
        _params(psi2=0.4, alpha=0.6, f_star=0.3),
        _params(psi2=1.0, alpha=0.2),
        _params(psi2=10.0, alpha=0.999, f1=3.0),
    ])
    def test_stationary(self, params):
        optimum = solve_r2(params)
        x = optimum.x_opt
        lo, hi = r2_interval(params.psi2)
        assert lo < x < hi
        slope = (r2_objective_at(x + FD_STEP, params) - r2_objective_at(x - FD_STEP, params)) / (2 * FD_STEP)
        assert abs(slope) <= 1e-6 * max(1.0, optimum.objective)
        assert not optimum.is_linear
        assert optimum.branch == 'unique root of the quartic'

    @pytest.mark.parametrize("lam", [0.0, 0.01, 1.0])
    def test_canonical_moments(self, lam):
        params = _params(lam=lam, alpha=0.25, f_star=0.2)
        optimum = solve_r2(params)
        m = optimum.canonical_moments
        assert m.mu_star_sq == pytest.approx(1)
        assert x_from_omega(omega_from_moments(m.mu1_sq, 1.0, params.psi2, lam)) == pytest.approx(optimum.x_opt,
                                                                                                  abs=1e-10)
        assert objective(Regime.R2, m, params).objective == pytest.approx(optimum.objective, rel=1e-9)

    def test_optimum_independent_of_regularization(self):
        """
        Any lambda reaches the optimal objective with an optimal AF.
        """
        values = [solve_r2(_params(psi2=10.0, lam=lam, f1=10.0, tau=sqrt(5))).objective
                  for lam in np.geomspace(1e-3, 1e2, 20)]
        np.testing.assert_allclose(values, values[0], rtol=1e-9)

    def test_caption_value(self):
        optimum = solve_r2(_params(psi2=10.0, tau=sqrt(10)))
        assert optimum.objective == pytest.approx(0.512, abs=1e-3)

    @pytest.mark.timeout(30)
    @pytest.mark.parametrize("psi2", [0.5, 2.0, 5.0, 10.0, 20.0])
    @pytest.mark.parametrize("tau_sq", [5.0, 10.0])
    def test_beats_tuned_relu(self, psi2, tau_sq, relu_moments):
        relu = relu_moments
        optimal = solve_r2(_params(psi2=psi2, tau=sqrt(tau_sq))).objective
        relu_best = min(objective(Regime.R2, relu, _params(psi2=psi2, lam=lam, tau=sqrt(tau_sq))).objective
                        for lam in np.geomspace(1e-3, 1e2, 200))
        assert optimal <= relu_best + 1e-12


@pytest.mark.parametrize("x", [-0.5, 0.0, 0.7])
@pytest.mark.parametrize("psi2,lam,mu_star_sq", [(2.0, 0.1, 1.0), (3.0, 0.0, 0.5), (1.5, 2.0, 0.2)])
def test_mu1_sq_places_link(x, psi2, lam, mu_star_sq):
    mu1_sq = r2_mu1_sq(x, psi2, lam, mu_star_sq)
    assert x_from_omega(omega_from_moments(mu1_sq, mu_star_sq, psi2, lam)) == pytest.approx(x, abs=1e-12)


@pytest.mark.parametrize("psi2", [0.3, 0.9, 1.0, 2.0, 10.0])
def test_omega_ranges(psi2, relu_moments):
    fixed_low, fixed_high = r2_omega_range(relu_moments.zeta_sq, psi2)
    free_low, free_high = r2_optimal_omega_range(psi2)
    assert fixed_high == free_high == 0
    assert free_low <= fixed_low < 0
    if psi2 >= 1:
        assert free_low == -inf


def test_linear_moments_end_of_range():
    lo, hi = r2_interval(0.3)
    assert (lo, hi) == pytest.approx((-1, -0.4))
    m = Moments.from_components(0.0, 1.0, 0.0)
    assert x_from_omega(omega_from_moments(m.mu1_sq, m.mu_star_sq, 0.3, 0.0)) == pytest.approx(hi, abs=1e-12)

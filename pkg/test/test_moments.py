from math import exp, pi, sqrt

import numpy as np
import pytest
from scipy.stats import norm

from src.activation.ActivationSpec import AffineActivation, LinearActivation, QuadraticActivation, ReluActivation, \
    SaturatedLinearActivation, ShiftedReluActivation, TabulatedActivation, TanhActivation
from src.activation.exceptions import NonFiniteValue, QuadratureError
from src.activation.moments import compute_moments, functional_norms, gauss_hermite_rule, max_linear_deviation, \
    piecewise_legendre_rule, quadrature_rule

SQRT_HALF = 1 / sqrt(2)


class TestQuadratureRules:
    @pytest.mark.parametrize("nodes", [21, 101, 201])
    def test_hermite_weights_sum_to_one(self, nodes):
        _, w = gauss_hermite_rule(nodes)
        assert float(np.sum(w)) == pytest.approx(1, abs=1e-12)

    @pytest.mark.parametrize("kinks", [(), (0.0,), (-0.3, 0.8), (-20.0, 20.0)])
    def test_legendre_weights_sum_to_one(self, kinks):
        _, w = piecewise_legendre_rule(51, kinks)
        assert float(np.sum(w)) == pytest.approx(1, abs=1e-12)

    def test_no_node_on_kink(self):
        """
        Panels are split at the kinks, so the kink is an edge and never a Gauss-Legendre node.
        """
        x, _ = piecewise_legendre_rule(51, (0.25,))
        assert np.min(np.abs(x - 0.25)) > 0

    def test_rule_selection(self):
        x_smooth, _ = quadrature_rule(TanhActivation(), 41)
        x_kinked, _ = quadrature_rule(ReluActivation(), 41)
        assert len(x_smooth) == 41
        # Several panels on the window
        assert len(x_kinked) > 41

    def test_too_few_nodes(self):
        with pytest.raises(QuadratureError):
            quadrature_rule(TanhActivation(), 5)


class TestComputeMoments:
    def test_linear(self):
        m = compute_moments(LinearActivation(1, 0))
        assert (m.mu0, m.mu1, m.mu2, m.mu_star_sq) == pytest.approx((0, 1, 1, 0), abs=1e-12)
        assert m.zeta_sq == float('inf')
        assert m.is_linear

    def test_relu(self, relu_moments):
        m = relu_moments
        assert m.mu0 == pytest.approx(0.3989423, abs=1e-7)
        assert m.mu1 == pytest.approx(0.5, abs=1e-12)
        assert m.mu2 == pytest.approx(0.5, abs=1e-12)
        assert m.mu_star_sq == pytest.approx(0.0908451, abs=1e-7)
        assert m.zeta_sq == pytest.approx(2.7519, abs=1e-4)
        assert not m.is_linear

    def test_quadratic(self):
        m = compute_moments(QuadraticActivation(SQRT_HALF, 1, -SQRT_HALF))
        assert (m.mu0, m.mu1, m.mu2, m.mu_star_sq, m.zeta_sq) == pytest.approx((0, 1, 2, 1, 1), abs=1e-12)

    @pytest.mark.parametrize("shift", [-1.5, 0.0, 0.3, 2.0])
    def test_shifted_relu_slope(self, shift):
        """
        Stein's identity E Z sigma(Z) = E sigma'(Z) = P(Z > shift)
        """
        m = compute_moments(ShiftedReluActivation(shift))
        assert m.mu1 == pytest.approx(norm.sf(shift), abs=1e-10)

    def test_tanh_is_odd(self):
        m = compute_moments(TanhActivation())
        norm1, _ = functional_norms(TanhActivation())
        assert m.mu0 == pytest.approx(0, abs=1e-14)
        # Monotone, so E|sigma'| = E sigma' = mu1
        assert m.mu1 == pytest.approx(norm1, abs=1e-10)

    def test_tabulated(self):
        """
        E Z sin(Z) = E cos(Z) = exp(-1/2) and E sin(Z)^2 = (1 - exp(-2)) / 2
        """
        m = compute_moments(TabulatedActivation(np.sin, np.cos, name='sin'))
        assert m.mu0 == pytest.approx(0, abs=1e-14)
        assert m.mu1 == pytest.approx(exp(-0.5), abs=1e-12)
        assert m.mu2 == pytest.approx((1 - exp(-2)) / 2, abs=1e-12)

    def test_affine_of_relu(self, relu_moments):
        m = compute_moments(AffineActivation(ReluActivation(), 2.0, 1.0))
        assert m.mu0 == pytest.approx(2 * relu_moments.mu0 + 1, abs=1e-12)
        assert m.mu1 == pytest.approx(1, abs=1e-12)
        assert m.mu_star_sq == pytest.approx(4 * relu_moments.mu_star_sq, abs=1e-12)

    def test_non_finite_value(self):
        af = TabulatedActivation(lambda x: np.where(x > 5, np.inf, 0.0), lambda x: np.zeros_like(x), kinks=(5.0,))
        with pytest.raises(NonFiniteValue):
            compute_moments(af)

    @pytest.mark.parametrize("window", [10.0, 12.0])
    def test_window_independence(self, window, relu_moments):
        m = compute_moments(ReluActivation(), window=window)
        assert m.mu2 == pytest.approx(relu_moments.mu2, abs=1e-12)

    def test_benchmark_relu(self, benchmark):
        m = benchmark(compute_moments, ReluActivation())
        assert m.mu1 == pytest.approx(0.5, abs=1e-12)


class TestFunctionalNorms:
    @pytest.mark.parametrize("slope,intercept", [(1, 0), (-2.5, 3), (0.1, -1)])
    def test_linear(self, slope, intercept):
        norm1, norm2 = functional_norms(LinearActivation(slope, intercept))
        assert norm1 == pytest.approx(abs(slope), abs=1e-12)
        assert norm2 == pytest.approx(abs(slope), abs=1e-12)

    def test_quadratic(self):
        _, norm2 = functional_norms(QuadraticActivation(SQRT_HALF, 1, -SQRT_HALF))
        assert norm2 ** 2 == pytest.approx(3, abs=1e-12)

    def test_relu(self):
        norm1, norm2 = functional_norms(ReluActivation())
        assert norm1 == pytest.approx(0.5, abs=1e-12)
        assert norm2 ** 2 == pytest.approx(0.5, abs=1e-12)

    @pytest.mark.parametrize("s", [0.3, 1.0, 2.5])
    def test_saturated_linear(self, s):
        """
        E|sigma'| = |b| P(|Z| < s)
        """
        norm1, _ = functional_norms(SaturatedLinearActivation(0.0, -1.5, s))
        assert norm1 == pytest.approx(1.5 * (2 * norm.cdf(s) - 1), abs=1e-12)


@pytest.mark.parametrize("af,linear", [
    (LinearActivation(2, 1), True),
    (SaturatedLinearActivation(0.0, 1.0, float('inf')), True),
    (ReluActivation(), False),
    (TanhActivation(), False),
])
def test_max_linear_deviation(af, linear):
    deviation = max_linear_deviation(af)
    if linear:
        assert deviation == pytest.approx(0, abs=1e-12)
    else:
        assert deviation > 1e-3


def test_relu_mean():
    assert compute_moments(ReluActivation()).mu0 == pytest.approx(1 / sqrt(2 * pi), abs=1e-13)

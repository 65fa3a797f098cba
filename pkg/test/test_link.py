from math import inf, sqrt

import pytest

from src.asymptotics.link import chi, chi_from_moments, negative_root, omega, omega_from_moments, omega_from_x, \
    x_from_omega, zeta_sq_from_chi


@pytest.mark.parametrize("a,b,c,expected", [
    (1, 0, -4, -2),
    (1, 3, 0, -3),
    (1, -3, 0, 0),
    (2, -1, -1, -0.5),
    # Linear limit
    (0, -2, -4, -2),
    (0, 1, -1, -inf),
    (0, 1, 0, 0),
])
def test_negative_root(a, b, c, expected):
    assert negative_root(a, b, c) == pytest.approx(expected, abs=1e-15)


class TestChi:
    @pytest.mark.parametrize("zeta_sq,psi,expected", [
        (1, 2, -sqrt(2)),
        (inf, 3, -2),
        (inf, 0.5, 0),
        (0, 0.5, -0.5),
        (0, 3, -3),
        (1e13, 3, -2),
    ])
    def test_values(self, zeta_sq, psi, expected):
        assert chi(zeta_sq, psi) == pytest.approx(expected, abs=1e-12)

    @pytest.mark.parametrize("psi", [0.3, 1.0, 2.0, 7.5])
    @pytest.mark.parametrize("zeta_sq", [1e-6, 0.2, 1, 5, 1e6])
    def test_range_and_inverse(self, zeta_sq, psi):
        x = chi(zeta_sq, psi)
        assert -psi <= x <= min(0.0, 1 - psi)
        assert zeta_sq_from_chi(x, psi) == pytest.approx(zeta_sq, rel=1e-6)

    def test_moment_form(self):
        assert chi_from_moments(1.0, 0.0, 3.0) == pytest.approx(-2, abs=1e-15)
        assert chi_from_moments(0.25, 0.0908451, 0.5) == pytest.approx(chi(0.25 / 0.0908451, 0.5), abs=1e-15)


class TestOmega:
    @pytest.mark.parametrize("zeta_sq,psi,lambda_bar,expected", [
        (0.7, 2.0, inf, 0),
        (1, 1, 0, -(sqrt(5) - 1) / 2),
        (inf, 2, 0, -inf),
        (inf, 0.5, 0, -1),
        (0, 2, 0.3, 0),
    ])
    def test_values(self, zeta_sq, psi, lambda_bar, expected):
        assert omega(zeta_sq, psi, lambda_bar) == pytest.approx(expected, abs=1e-12)

    @pytest.mark.parametrize("psi", [0.5, 1, 3])
    @pytest.mark.parametrize("lam", [0, 0.01, 1])
    def test_moment_form_matches(self, psi, lam):
        mu1_sq, mu_star_sq = 0.25, 0.09
        w = omega_from_moments(mu1_sq, mu_star_sq, psi, lam)
        assert w <= 0
        assert w == pytest.approx(omega(mu1_sq / mu_star_sq, psi, lam / mu_star_sq), abs=1e-12)

    def test_linear_with_regularization(self):
        """
        mu_star = 0 and lambda > 0 keep omega finite and strictly inside (-inf, 0).
        """
        w = omega_from_moments(1.0, 0.0, 3.0, 0.1)
        assert -inf < w < 0
        # Root of 0.3 w^2 + (2 - 0.3) w - 3 = 0
        assert 0.3 * w * w + 1.7 * w - 3 == pytest.approx(0, abs=1e-12)


@pytest.mark.parametrize("w,x", [(0, -1), (-1, 0), (-inf, 1), (-3, 0.5)])
def test_moebius(w, x):
    assert x_from_omega(w) == pytest.approx(x, abs=1e-15)
    assert omega_from_x(x) == pytest.approx(w, abs=1e-15)

import math

import pytest
from hypothesis import given, settings, strategies as st
from scipy import special

from stable_msu.errors import DomainError, PoleError
from stable_msu.specfun import (bessel_k, gamma_value, log_gamma, psi_chf,
                                whittaker_w_stable)

GAMMA_SIXTH = math.gamma(1.0 / 6.0)
GAMMA_THIRD = math.gamma(1.0 / 3.0)


class TestLogGamma:
    def test_at_one(self):
        ev = log_gamma(1.0)
        assert ev.value == pytest.approx(0.0, abs=1e-14)
        assert ev.sign == 1

    def test_at_half(self):
        ev = log_gamma(0.5)
        assert ev.value == pytest.approx(math.log(math.sqrt(math.pi)), rel=1e-13)
        assert ev.sign == 1

    def test_reflection_point(self):
        # Gamma(-0.6) = Gamma(0.4)/(-0.6), oracle via math.gamma
        ev = log_gamma(-0.6)
        assert ev.sign == -1
        assert math.exp(ev.value) == pytest.approx(math.gamma(0.4) / 0.6,
                                                   rel=1e-12)

    @pytest.mark.parametrize("x", [0.05, 0.31, 1.0, 2.5, 7.0, 33.3, 171.0,
                                   -0.2, -1.7, -4.3, -9.99])
    def test_against_stdlib(self, x):
        ev = log_gamma(x)
        assert ev.value == pytest.approx(math.lgamma(x), rel=1e-12)
        assert ev.sign == special.gammasgn(x)

    @pytest.mark.parametrize("x", [0.0, -1.0, -7.0])
    def test_poles(self, x):
        with pytest.raises(PoleError):
            log_gamma(x)

    @given(st.floats(min_value=0.01, max_value=0.99))
    @settings(max_examples=25, deadline=None)
    def test_reflection_sign_pattern(self, x):
        assert log_gamma(-x).sign == -1
        assert log_gamma(-1.0 - x).sign == 1

    def test_gamma_value(self):
        assert gamma_value(5.0) == pytest.approx(24.0, rel=1e-13)
        assert gamma_value(-0.6) == pytest.approx(-3.6969325729735636, rel=1e-10)


class TestBesselK:
    def test_half_order_closed_form(self):
        # K_{1/2}(x) = sqrt(pi/(2x)) e^{-x}
        ev = bessel_k(0.5, 1.0)
        assert ev.value == pytest.approx(math.sqrt(math.pi / 2.0) * math.exp(-1.0),
                                         rel=1e-10)

    @pytest.mark.parametrize("nu,x", [(1.0 / 3.0, 0.09), (1.0 / 3.0, 1.0),
                                      (1.0 / 3.0, 8.0), (0.0, 2.0), (2.7, 0.5)])
    def test_against_scipy(self, nu, x):
        ev = bessel_k(nu, x)
        ref = special.kv(nu, x)
        assert ev.value == pytest.approx(ref, rel=1e-9)
        assert abs(ev.value - ref) <= max(20.0 * ev.abs_error_estimate,
                                          1e-12 * ref)

    def test_ode_residual(self):
        # x^2 K'' + x K' - (x^2 + 1/9) K = 0, derivatives by central
        # differences on tight-tolerance quadrature values
        x, h = 1.0, 1e-3
        k = lambda t: bessel_k(1.0 / 3.0, t, rel_tol=1e-13).value
        km, k0, kp = k(x - h), k(x), k(x + h)
        d1 = (kp - km) / (2.0 * h)
        d2 = (kp - 2.0 * k0 + km) / (h * h)
        residual = x * x * d2 + x * d1 - (x * x + 1.0 / 9.0) * k0
        assert abs(residual) < 1e-6

    def test_turan_inequality(self):
        # (x^2 + 1/9) K^2 <= x^2 (K')^2 with K' = -(K_{2/3} + K_{4/3})/2
        x = 1.0
        k = bessel_k(1.0 / 3.0, x, rel_tol=1e-12).value
        kp = -0.5 * (bessel_k(2.0 / 3.0, x, rel_tol=1e-12).value
                     + bessel_k(4.0 / 3.0, x, rel_tol=1e-12).value)
        assert (x * x + 1.0 / 9.0) * k * k <= x * x * kp * kp

    def test_decreasing_in_x(self):
        vals = [bessel_k(1.0 / 3.0, x).value for x in (0.5, 1.0, 2.0, 4.0)]
        assert all(a > b for a, b in zip(vals, vals[1:]))

    def test_domain(self):
        with pytest.raises(DomainError):
            bessel_k(1.0 / 3.0, 0.0)
        with pytest.raises(DomainError):
            bessel_k(1.0 / 3.0, -1.0)


class TestPsi:
    def test_family_ordering_at_one(self):
        u1 = psi_chf(1 / 6, 1 / 3, 1.0).value
        u4 = psi_chf(1 / 6, 4 / 3, 1.0).value
        u7 = psi_chf(1 / 6, 7 / 3, 1.0).value
        assert u7 >= u4 >= u1 > 0.0

    def test_small_x_scaling_u4(self):
        # x^{1/3} Psi(1/6, 4/3, x) -> Gamma(1/3)/Gamma(1/6), O(x^{1/3}) rate
        x = 1e-8
        val = psi_chf(1 / 6, 4 / 3, x).value * x ** (1.0 / 3.0)
        assert val == pytest.approx(GAMMA_THIRD / GAMMA_SIXTH, rel=1e-2)

    def test_small_x_scaling_u7(self):
        x = 1e-8
        val = psi_chf(1 / 6, 7 / 3, x).value * x ** (4.0 / 3.0)
        assert val == pytest.approx(math.gamma(4.0 / 3.0) / GAMMA_SIXTH,
                                    rel=1e-2)

    def test_small_x_limit_u1(self):
        val = psi_chf(1 / 6, 1 / 3, 1e-8).value
        assert val == pytest.approx(math.gamma(2.0 / 3.0) / math.gamma(5.0 / 6.0),
                                    rel=1e-2)

    def test_decreasing_in_x_increasing_in_c(self):
        assert psi_chf(1 / 6, 4 / 3, 2.0).value < psi_chf(1 / 6, 4 / 3, 1.0).value
        assert psi_chf(1 / 6, 7 / 3, 1.0).value > psi_chf(1 / 6, 4 / 3, 1.0).value

    def test_contiguity_derivatives(self):
        # g = e^{-x} U4 has g' = -e^{-x} U7 and g'' = e^{-x} U10
        x, h = 0.8, 1e-3
        g = lambda t: math.exp(-t) * psi_chf(1 / 6, 4 / 3, t, rel_tol=1e-12).value
        d1 = (g(x + h) - g(x - h)) / (2.0 * h)
        d2 = (g(x + h) - 2.0 * g(x) + g(x - h)) / (h * h)
        pred1 = -math.exp(-x) * psi_chf(1 / 6, 7 / 3, x, rel_tol=1e-12).value
        pred2 = math.exp(-x) * psi_chf(1 / 6, 10 / 3, x, rel_tol=1e-12).value
        assert d1 == pytest.approx(pred1, rel=1e-5)
        assert d2 == pytest.approx(pred2, rel=1e-5)

    def test_domain(self):
        with pytest.raises(DomainError):
            psi_chf(0.0, 1.0, 1.0)
        with pytest.raises(DomainError):
            psi_chf(1 / 6, 4 / 3, -0.5)


class TestWhittaker:
    @pytest.mark.parametrize("x", [0.1, 1.0, 10.0])
    def test_positive(self, x):
        assert whittaker_w_stable(x).value > 0.0

    def test_monotone_decay(self):
        assert whittaker_w_stable(2.0).value < whittaker_w_stable(1.0).value

    def test_quadrature_stability(self):
        # halving the tolerance must not move the value beyond the estimate
        coarse = whittaker_w_stable(1.0, rel_tol=1e-8)
        fine = whittaker_w_stable(1.0, rel_tol=1e-13)
        assert abs(coarse.value - fine.value) <= max(
            20.0 * coarse.abs_error_estimate, 1e-13)

    def test_domain(self):
        with pytest.raises(DomainError):
            whittaker_w_stable(0.0)

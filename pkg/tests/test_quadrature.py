import math

import pytest

from stable_msu.quadrature import de_halfline, tanh_sinh


def test_finite_smooth():
    res = tanh_sinh(math.sin, 0.0, math.pi)
    assert res.value == pytest.approx(2.0, rel=1e-12)


def test_finite_endpoint_singularity():
    res = tanh_sinh(lambda x: 1.0 / math.sqrt(x), 0.0, 1.0)
    assert res.value == pytest.approx(2.0, rel=1e-10)


def test_halfline_exponential():
    res = de_halfline(math.exp if False else (lambda x: math.exp(-x)))
    assert res.value == pytest.approx(1.0, rel=1e-12)


def test_halfline_gamma_half():
    res = de_halfline(lambda x: math.exp(-x) / math.sqrt(x))
    assert res.value == pytest.approx(math.sqrt(math.pi), rel=1e-11)


def test_halfline_slow_decay():
    # integral of 1/(1+x)^2 over (0, inf) = 1
    res = de_halfline(lambda x: 1.0 / (1.0 + x) ** 2)
    assert res.value == pytest.approx(1.0, rel=1e-9)


def test_error_estimate_is_honest():
    res = tanh_sinh(lambda x: math.exp(x) * math.cos(x), 0.0, 2.0)
    exact = 0.5 * (math.exp(2.0) * (math.sin(2.0) + math.cos(2.0)) - 1.0)
    assert abs(res.value - exact) <= max(10.0 * res.error, 1e-12)


def test_bad_interval_raises():
    with pytest.raises(ValueError):
        tanh_sinh(math.sin, 1.0, 1.0)

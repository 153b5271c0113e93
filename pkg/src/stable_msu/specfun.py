"""Special-function kernels: log-gamma, Macdonald K_nu, Tricomi-type Psi.

All operations are pure functions returning a :class:`SpecEval` bundling
the value with a conservative absolute error estimate and the method
used.  The quadrature-backed kernels use the double-exponential rules
from :mod:`stable_msu.quadrature` at a default relative tolerance of
1e-10; their error estimates are the difference between the last two
refinement levels.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, PoleError
from .quadrature import de_halfline
from .util import log_cosh, sinpi

DEFAULT_REL_TOL = 1e-10

_METHODS = ("series", "quadrature", "recurrence", "closed_form")

# 9-term Lanczos approximation, g = 7; good to ~15 significant digits
# on the right half plane.
_LANCZOS_G = 7.0
_LANCZOS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_LN_SQRT_TWO_PI = 0.9189385332046727
_LN_PI = math.log(math.pi)


@dataclass(frozen=True)
class SpecEval:
    """A special-function value with an absolute error estimate.

    ``sign`` is only meaningful for :func:`log_gamma`, where the value is
    log|Gamma(x)| and the sign of Gamma(x) is reported separately; the
    strictly positive kernels always carry sign +1.
    """

    value: float
    abs_error_estimate: float
    method: str
    sign: int = 1

    def __post_init__(self) -> None:
        if self.method not in _METHODS:
            raise ValueError(f"unknown method {self.method!r}")
        if not (math.isfinite(self.abs_error_estimate)
                and self.abs_error_estimate >= 0.0):
            raise ValueError("abs_error_estimate must be finite and >= 0")


def _lanczos_log_gamma(x: float) -> float:
    # valid for x >= 0.5
    acc = _LANCZOS[0]
    for i in range(1, len(_LANCZOS)):
        acc += _LANCZOS[i] / (x - 1.0 + i)
    t = x + _LANCZOS_G - 0.5
    return _LN_SQRT_TWO_PI + (x - 0.5) * math.log(t) - t + math.log(acc)


def log_gamma(x: float) -> SpecEval:
    """log|Gamma(x)| together with the sign of Gamma(x).

    Negative arguments go through the reflection formula; nonpositive
    integers raise :class:`PoleError`.
    """
    if x <= 0.0 and x == math.floor(x):
        raise PoleError(f"Gamma pole at x = {x}")
    if x >= 0.5:
        value = _lanczos_log_gamma(x)
        return SpecEval(value, 5e-15 * (1.0 + abs(value)), "series", 1)
    # log|Gamma(x)| = log(pi) - log|sin(pi x)| - log Gamma(1 - x)
    s = sinpi(x)
    value = _LN_PI - math.log(abs(s)) - _lanczos_log_gamma(1.0 - x)
    sign = 1 if s > 0.0 else -1
    err = 5e-15 * (1.0 + abs(value)) + 2e-16 * (1.0 + abs(x)) / abs(s)
    return SpecEval(value, err, "series", sign)


def gamma_value(x: float) -> float:
    """Gamma(x) as a signed float (convenience wrapper over log_gamma)."""
    ev = log_gamma(x)
    return ev.sign * math.exp(ev.value)


_GAMMA_ONE_SIXTH = None


def _gamma_one_sixth() -> float:
    global _GAMMA_ONE_SIXTH
    if _GAMMA_ONE_SIXTH is None:
        _GAMMA_ONE_SIXTH = gamma_value(1.0 / 6.0)
    return _GAMMA_ONE_SIXTH


def bessel_k(nu: float, x: float, rel_tol: float = DEFAULT_REL_TOL) -> SpecEval:
    """Macdonald function K_nu(x), nu >= 0, x > 0.

    Evaluated from the cosh integral representation
    ``K_nu(x) = int_0^inf exp(-x cosh t) cosh(nu t) dt``
    by double-exponential quadrature.
    """
    if x <= 0.0:
        raise DomainError("bessel_k requires x > 0")
    if nu < 0.0:
        raise DomainError("bessel_k requires nu >= 0")

    def integrand(t: float) -> float:
        if t > 700.0:
            return 0.0
        e = x * math.cosh(t) - log_cosh(nu * t)
        if e > 745.0:
            return 0.0
        return math.exp(-e)

    res = de_halfline(integrand, rel_tol=rel_tol)
    return SpecEval(res.value, res.error, "quadrature")


def psi_chf(a: float, c: float, x: float,
            rel_tol: float = DEFAULT_REL_TOL) -> SpecEval:
    """Confluent hypergeometric kernel

    ``Psi(a, c, x) = Gamma(1/6)^-1 int_0^inf e^{-x s} s^{a-1} (1+s)^{c-a-1} ds``

    for a > 0, x > 0.  The normalizing prefactor is fixed at 1/Gamma(1/6):
    every consumer in this package calls it with a = 1/6, where this
    coincides with the conventional Tricomi normalization 1/Gamma(a).
    Strictly decreasing in x and strictly increasing in c.
    """
    if a <= 0.0:
        raise DomainError("psi_chf requires a > 0")
    if x <= 0.0:
        raise DomainError("psi_chf requires x > 0")
    am1 = a - 1.0
    cam1 = c - a - 1.0

    def integrand(s: float) -> float:
        e = -x * s + am1 * math.log(s) + cam1 * math.log1p(s)
        if e > 709.0 or e < -745.0:
            return 0.0 if e < 0 else math.inf
        return math.exp(e)

    res = de_halfline(integrand, rel_tol=rel_tol)
    pre = 1.0 / _gamma_one_sixth()
    return SpecEval(pre * res.value, pre * res.error, "quadrature")


def whittaker_w_stable(x: float, rel_tol: float = DEFAULT_REL_TOL) -> SpecEval:
    """The Whittaker kernel W_{1/2,1/6}(x) for x > 0.

    Reduced to the Psi kernel: ``W(x) = e^{-x/2} x^{2/3} Psi(1/6, 4/3, x)``.
    """
    if x <= 0.0:
        raise DomainError("whittaker_w_stable requires x > 0")
    psi = psi_chf(1.0 / 6.0, 4.0 / 3.0, x, rel_tol=rel_tol)
    factor = math.exp(-0.5 * x + (2.0 / 3.0) * math.log(x))
    return SpecEval(factor * psi.value, factor * psi.abs_error_estimate,
                    "quadrature")

"""Constructive representations of positive stable laws.

* exact sampling from the uniform-exponential decomposition of log Z;
* the product of p unit Gamma variables representing Z_{1/p}^{-1};
* the Beta x Gamma product representing Z_{p/n}^{-p} for n > 2p;
* Mellin transforms (fractional moments) of all of the above, which is
  how the product identities are verified;
* the quadrature kernels behind the Beta x Gamma log-concavity
  inequality and the Whittaker-side inequality for the 2/3 case.

Gamma and Beta variates use numpy's Generator (standard rejection
samplers, unit scale), matching the unit-scale density convention
Gamma(c): y^{c-1} e^{-y} / Gamma(c).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import numpy as np

from . import specfun
from .density import as_alpha
from .errors import DomainError, HypothesisError, PreconditionError
from .quadrature import de_halfline

_BETA = "beta"
_GAMMA = "gamma"


# ---------------------------------------------------------------------------
# factors and factor lists
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Factor:
    """One independent factor: Beta(a, b) or unit-scale Gamma(c)."""

    kind: str
    params: tuple[float, ...]

    def __post_init__(self) -> None:
        if self.kind not in (_BETA, _GAMMA):
            raise PreconditionError(f"unknown factor kind {self.kind!r}")
        n = 2 if self.kind == _BETA else 1
        if len(self.params) != n or any(p <= 0.0 for p in self.params):
            raise PreconditionError(f"bad parameters {self.params} for {self.kind}")

    @classmethod
    def beta(cls, a: float, b: float) -> "Factor":
        return cls(_BETA, (float(a), float(b)))

    @classmethod
    def gamma(cls, c: float) -> "Factor":
        return cls(_GAMMA, (float(c),))

    def mellin_lower_bound(self) -> float:
        # E[X^s] finite for s > -a (beta) resp. s > -c (gamma)
        return -self.params[0]

    def log_mellin(self, s: float) -> float:
        if self.kind == _BETA:
            a, b = self.params
            return (specfun.log_gamma(s + a).value
                    + specfun.log_gamma(a + b).value
                    - specfun.log_gamma(s + a + b).value
                    - specfun.log_gamma(a).value)
        c, = self.params
        return specfun.log_gamma(s + c).value - specfun.log_gamma(c).value

    def sample(self, rng: np.random.Generator, size=None) -> np.ndarray:
        if self.kind == _BETA:
            return rng.beta(self.params[0], self.params[1], size)
        return rng.gamma(self.params[0], 1.0, size)


@dataclass(frozen=True)
class FactorList:
    """A positive scale times an ordered independent product of factors."""

    scale: float
    factors: tuple[Factor, ...]
    represents: str = ""

    def __post_init__(self) -> None:
        if self.scale <= 0.0:
            raise PreconditionError("scale must be positive")
        if not self.factors:
            raise PreconditionError("factor list must be non-empty")

    def sample(self, rng: np.random.Generator, size=None) -> np.ndarray:
        out = np.full(size if size is not None else (), self.scale, dtype=float)
        for factor in self.factors:
            out = out * factor.sample(rng, size)
        return out


@dataclass(frozen=True)
class MellinProfile:
    """s -> fractional moment, with its open interval of validity."""

    evaluator: Callable[[float], float]
    valid_s: tuple[float, float]

    def __call__(self, s: float) -> float:
        lo, hi = self.valid_s
        if not (lo < s < hi):
            raise DomainError(f"s = {s} outside the validity interval ({lo}, {hi})")
        return self.evaluator(s)


# ---------------------------------------------------------------------------
# exact sampler
# ---------------------------------------------------------------------------

def kanter_b(alpha, u):
    """The factor b(u) = (sin(a u)/sin u)^a (sin((1-a)u)/sin u)^{1-a}
    on (0, pi); tends to a^a (1-a)^{1-a} at 0+ and diverges at pi-.

    Accepts a scalar or an ndarray for u.
    """
    a = as_alpha(alpha).value
    u_arr = np.asarray(u, dtype=float)
    if np.any(u_arr <= 0.0) or np.any(u_arr >= math.pi):
        raise DomainError("kanter_b requires u strictly inside (0, pi)")
    log_sin_u = np.log(np.sin(u_arr))
    val = np.exp(a * (np.log(np.sin(a * u_arr)) - log_sin_u)
                 + (1.0 - a) * (np.log(np.sin((1.0 - a) * u_arr)) - log_sin_u))
    return float(val) if np.isscalar(u) or u_arr.ndim == 0 else val


def sample_stable(alpha, source: np.random.Generator, size=None):
    """Exact draws of Z_alpha from
    log Z = (1/a) log b(U) + ((a-1)/a) log L,
    U uniform on (0, pi), L standard exponential.

    Returns a scalar for size=None, else an ndarray of that shape.
    """
    a = as_alpha(alpha).value
    scalar = size is None
    n = 1 if scalar else size
    u = source.uniform(0.0, math.pi, n)
    # endpoint draws are measure zero but would hit the log singularities
    bad = (u <= 0.0) | (u >= math.pi)
    while np.any(bad):
        u[bad] = source.uniform(0.0, math.pi, int(bad.sum()))
        bad = (u <= 0.0) | (u >= math.pi)
    ell = source.standard_exponential(n)
    z = np.exp(np.log(kanter_b(alpha, u)) / a
               + (a - 1.0) / a * np.log(ell))
    return float(z[0]) if scalar else z


# ---------------------------------------------------------------------------
# product representations
# ---------------------------------------------------------------------------

def williams_product(p: int) -> FactorList:
    """Z_{1/p}^{-1} as p^p times the product of Gamma(k/p), k = 1..p-1."""
    if p < 2:
        raise DomainError("williams_product requires p >= 2")
    factors = tuple(Factor.gamma(k / p) for k in range(1, p))
    return FactorList(float(p) ** p, factors, represents=f"Z_{{1/{p}}}^{{-1}}")


def lemma2_product(p: int, n: int) -> FactorList:
    """Z_{p/n}^{-p} as (n^n / p^p) times Beta/Gamma factors, for n > 2p.

    Factor pattern: Beta(2k/n, k/p - 2k/n) Gamma((2k-1)/n) for
    k = 1..p-1, then Gamma(m/n) for m = 2p-1 .. n-1.  All parameters are
    formed in exact rational arithmetic; each Beta second parameter is
    positive precisely because n > 2p.  The pattern is validated by the
    Mellin identity (see mellin_product), which is the authority.
    """
    if p < 2:
        raise PreconditionError("lemma2_product requires p >= 2")
    if n <= 2 * p:
        raise PreconditionError(f"lemma2_product requires n > 2p, got ({p}, {n})")
    factors: list[Factor] = []
    for k in range(1, p):
        a = Fraction(2 * k, n)
        b = Fraction(k, p) - Fraction(2 * k, n)
        factors.append(Factor.beta(float(a), float(b)))
        factors.append(Factor.gamma(float(Fraction(2 * k - 1, n))))
    for m in range(2 * p - 1, n):
        factors.append(Factor.gamma(float(Fraction(m, n))))
    scale = float(Fraction(n ** n, p ** p))
    return FactorList(scale, tuple(factors), represents=f"Z_{{{p}/{n}}}^{{-{p}}}")


def mellin_stable(alpha) -> MellinProfile:
    """Fractional moments E[Z^s] = Gamma(1 - s/a) / Gamma(1 - s), s < a."""
    alpha_obj = as_alpha(alpha)
    a = alpha_obj.value

    def moment(s: float) -> float:
        return math.exp(specfun.log_gamma(1.0 - s / a).value
                        - specfun.log_gamma(1.0 - s).value)

    return MellinProfile(moment, (-math.inf, a))


def mellin_product(fl: FactorList) -> MellinProfile:
    """Mellin transform of a FactorList: scale^s times the product of
    factor moments; valid for s above every factor's lower bound."""
    lo = max(f.mellin_lower_bound() for f in fl.factors)
    log_scale = math.log(fl.scale)

    def moment(s: float) -> float:
        acc = s * log_scale
        for f in fl.factors:
            acc += f.log_mellin(s)
        return math.exp(acc)

    return MellinProfile(moment, (lo, math.inf))


# ---------------------------------------------------------------------------
# Beta x Gamma log-concavity kernels
# ---------------------------------------------------------------------------

def lemma1_g(alpha: float, beta: float, c: float, shift: int, x: float,
             rel_tol: float = 1e-11) -> specfun.SpecEval:
    """g_{a,b,c+shift}(x) = e^{-x} int_0^inf e^{-x u} u^{b-1} (u+1)^{(c+shift)-(a+b)} du.

    At x = 0 the integral converges only when a > c + shift; for x > 0
    the exponential ensures convergence.
    """
    if beta <= 0.0:
        raise DomainError("lemma1_g requires beta > 0")
    if shift not in (-1, 0, 1):
        raise DomainError("shift must be one of -1, 0, +1")
    if x < 0.0:
        raise DomainError("lemma1_g requires x >= 0")
    ceff = c + shift
    if x == 0.0 and alpha <= ceff:
        raise DomainError("integral diverges at x = 0 unless alpha > c + shift")
    bm1 = beta - 1.0
    expo = ceff - (alpha + beta)

    def integrand(u: float) -> float:
        e = -x * u + bm1 * math.log(u) + expo * math.log1p(u)
        if e < -745.0:
            return 0.0
        return math.exp(e)

    res = de_halfline(integrand, rel_tol=rel_tol)
    scale = math.exp(-x)
    return specfun.SpecEval(scale * res.value, scale * res.error, "quadrature")


def lemma1_product_density(alpha: float, beta: float, c: float, x: float,
                           rel_tol: float = 1e-11) -> float:
    """Density of Beta(a, b) x Gamma(c) at x > 0:
    Gamma(a+b) x^{c-1} g_{a,b,c}(x) / (Gamma(a) Gamma(b) Gamma(c)).
    Reduces to the Gamma(a) density when a + b = c."""
    if x <= 0.0:
        raise DomainError("density requires x > 0")
    g = lemma1_g(alpha, beta, c, 0, x, rel_tol=rel_tol)
    log_norm = (specfun.log_gamma(alpha + beta).value
                - specfun.log_gamma(alpha).value
                - specfun.log_gamma(beta).value
                - specfun.log_gamma(c).value)
    return math.exp(log_norm + (c - 1.0) * math.log(x)) * g.value


def lemma1_inequality(alpha: float, beta: float, c: float, x: float,
                      rel_tol: float = 1e-11) -> float:
    """LHS - RHS of

    (x g_c(x) + (a+b-c) g_{c-1}(x)) (g_{c+1}(x) - g_c(x))
        >= (b - 1) (g_{c-1}(x))^2

    under the hypotheses b <= 1 and a + b >= c; nonnegative there, which
    is what makes Beta(a,b) x Gamma(c) multiplicative strongly unimodal.
    """
    if beta > 1.0:
        raise HypothesisError("requires beta <= 1")
    if alpha + beta < c:
        raise HypothesisError("requires alpha + beta >= c")
    g0 = lemma1_g(alpha, beta, c, 0, x, rel_tol).value
    gm = lemma1_g(alpha, beta, c, -1, x, rel_tol).value
    gp = lemma1_g(alpha, beta, c, 1, x, rel_tol).value
    lhs = (x * g0 + (alpha + beta - c) * gm) * (gp - g0)
    rhs = (beta - 1.0) * gm * gm
    return lhs - rhs


def whitt_margin(x: float, rel_tol: float = 1e-10) -> float:
    """LHS - RHS of the inequality
    (x U4 - U1/6)(U7 - U4) >= -5 U4^2 / 6
    with U_l(x) = Psi(1/6, l/3, x); its failure for small x certifies
    the 2/3 case is not MSU, while for x >= 1/6 the ordering
    U7 >= U4 >= U1 makes it hold."""
    if x <= 0.0:
        raise DomainError("whitt_margin requires x > 0")
    u1 = specfun.psi_chf(1.0 / 6.0, 1.0 / 3.0, x, rel_tol).value
    u4 = specfun.psi_chf(1.0 / 6.0, 4.0 / 3.0, x, rel_tol).value
    u7 = specfun.psi_chf(1.0 / 6.0, 7.0 / 3.0, x, rel_tol).value
    return (x * u4 - u1 / 6.0) * (u7 - u4) + 5.0 * u4 * u4 / 6.0

"""Small numeric helpers used across modules."""

from __future__ import annotations

import math


def sinpi(y: float) -> float:
    """sin(pi*y) with exact zeros at integer y.

    The argument is reduced with IEEE remainder (exact), so huge or
    nearly-integer arguments do not suffer the catastrophic phase loss
    of ``math.sin(math.pi * y)``.
    """
    r = math.remainder(y, 2.0)
    if r == 0.0 or abs(r) == 1.0:
        return 0.0
    return math.sin(math.pi * r)


def cospi(y: float) -> float:
    """cos(pi*y) with exact zeros at half-integer y."""
    return sinpi(y + 0.5)


def log_cosh(y: float) -> float:
    """log(cosh(y)) without overflow for large |y|."""
    ay = abs(y)
    if ay < 350.0:
        return math.log(math.cosh(ay))
    return ay + math.log1p(math.exp(-2.0 * ay)) - math.log(2.0)


def neumaier_add(total: float, comp: float, term: float) -> tuple[float, float]:
    """One step of Neumaier's compensated summation.

    Returns the updated (total, compensation) pair; the exact running sum
    is ``total + comp``.
    """
    new = total + term
    if abs(total) >= abs(term):
        comp += (total - new) + term
    else:
        comp += (term - new) + total
    return new, comp

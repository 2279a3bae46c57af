"""Exact non-negative integer helpers.

Python ints are unbounded, so they serve directly as the big-natural type.
Every function here validates its inputs and never touches floating point.
"""

import math

__all__ = ["ipow", "isqrt_floor", "ceil_div", "check_nat", "check_exponent"]


def check_nat(value, name="value"):
    if not isinstance(value, int) or isinstance(value, bool):
        raise TypeError(f"{name} must be an int, got {type(value).__name__}")
    if value < 0:
        raise ValueError(f"{name} must be non-negative, got {value}")
    return value


def check_exponent(k):
    if not isinstance(k, int) or isinstance(k, bool):
        raise TypeError(f"exponent must be an int, got {type(k).__name__}")
    if k < 2:
        raise ValueError(f"exponent must be >= 2, got {k}")
    return k


def ipow(base: int, exp: int) -> int:
    """Return ``base**exp`` exactly; ``ipow(0, 0) == 1``."""
    check_nat(base, "base")
    check_nat(exp, "exp")
    return base**exp


def isqrt_floor(n: int) -> int:
    """Largest ``r`` with ``r*r <= n``."""
    return math.isqrt(check_nat(n, "n"))


def ceil_div(num: int, den: int) -> int:
    check_nat(num, "num")
    check_nat(den, "den")
    if den == 0:
        raise ZeroDivisionError("ceil_div with zero denominator")
    return -(-num // den)

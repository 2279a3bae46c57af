"""Pruning bounds for slice pairs, each as an exact integer test.

Real-valued thresholds such as ``2**((k-1)/k)`` or ``k <= S*log 2`` are
rewritten as comparisons between integer powers, so every decision here is
exact and platform independent.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .numeric import ceil_div, check_exponent as _check_exponent, check_nat, isqrt_floor

__all__ = [
    "SlicePair",
    "BoundsProfile",
    "bounds_profile",
    "separation_floor",
    "neighbor_gap",
    "overlap_feasible",
    "overlap_min_sum",
    "max_overlap_shift",
    "exclusion_min_offset",
    "exclusion_ok",
    "combined_min_sum",
    "dominance_pruned",
    "dominance_k_max",
    "strength_holds",
]


@dataclass(frozen=True)
class SlicePair:
    """Two slice sums ``S`` and ``S + h``, stored by size.

    ``small_first`` records whether the original ``S`` was the smaller sum
    (that is, whether ``h >= 0``).
    """

    small_sum: int
    large_sum: int
    small_first: bool = True

    def __post_init__(self):
        check_nat(self.small_sum, "small_sum")
        check_nat(self.large_sum, "large_sum")
        if self.large_sum < self.small_sum:
            raise ValueError("large_sum must be >= small_sum")

    @property
    def shift(self) -> int:
        return self.large_sum - self.small_sum

    @classmethod
    def from_shift(cls, s: int, h: int) -> "SlicePair":
        """Build from ``a + b = s`` and ``c + d = s + h`` with ``h`` signed."""
        if s < 0 or s + h < 0:
            raise ValueError("slice sums must be non-negative")
        if h >= 0:
            return cls(s, s + h, True)
        return cls(s + h, s, False)


def _check_sum(s, name="S"):
    check_nat(s, name)
    if s < 2:
        raise ValueError(f"{name} must be >= 2, got {s}")


def separation_floor(s: int, k: int) -> int:
    """Lower bound ``k(k-1) * floor(s/2)**(k-2)`` on the gap between two
    distinct values of ``x**k + (s-x)**k`` on the slice of sum ``s``."""
    _check_sum(s)
    _check_exponent(k)
    return k * (k - 1) * (s // 2) ** (k - 2)


def neighbor_gap(s: int, k: int) -> int:
    """Exact gap between the two central values of the slice of sum ``s``.

    This is the smallest difference between consecutive slice values.
    """
    _check_sum(s)
    _check_exponent(k)
    n = s // 2
    if s % 2 == 0:
        return (n + 1) ** k + (n - 1) ** k - 2 * n**k
    return (n + 2) ** k - (n + 1) ** k + (n - 1) ** k - n**k


def overlap_feasible(pair: SlicePair, k: int) -> bool:
    """Whether the value ranges of the two slices intersect.

    Equivalent to ``S_max**k <= 2**(k-1) * S_min**k``; when false no real,
    let alone integer, solution lives on this pair.
    """
    _check_exponent(k)
    if pair.shift == 0:
        raise ValueError("overlap bound needs a non-zero shift")
    return pair.large_sum**k <= (pair.small_sum**k << (k - 1))


def _feasible(s_min, h, k):
    return (s_min + h) ** k <= (s_min**k << (k - 1))


def overlap_min_sum(k: int, h_abs: int) -> int:
    """Smallest ``S_min`` for which a pair with shift ``h_abs`` overlaps."""
    _check_exponent(k)
    check_nat(h_abs, "h_abs")
    if h_abs == 0:
        raise ValueError("overlap bound needs a non-zero shift")
    hi = 1
    while not _feasible(hi, h_abs, k):
        hi *= 2
    lo = hi // 2  # infeasible, or 0
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if _feasible(mid, h_abs, k):
            hi = mid
        else:
            lo = mid
    return hi


def max_overlap_shift(s_min: int, k: int) -> int:
    """Largest ``h >= 0`` with ``(s_min, s_min + h)`` overlapping."""
    _check_exponent(k)
    check_nat(s_min, "s_min")
    if s_min == 0:
        return 0
    hi = 1
    while _feasible(s_min, hi, k):
        hi *= 2
    lo = hi // 2
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if _feasible(s_min, mid, k):
            lo = mid
        else:
            hi = mid
    return lo


def exclusion_min_offset(s_min: int, h_abs: int, k: int) -> int:
    """Smallest ``t >= 0`` with ``t**2 * (k-1) >= 2 * s_min * h_abs``.

    On the smaller slice any solution pair ``(a, b)`` has ``|a - b| >= t``:
    pairs too close to the centre cannot reach the other slice's minimum.
    """
    _check_exponent(k)
    check_nat(s_min, "s_min")
    check_nat(h_abs, "h_abs")
    need = ceil_div(2 * s_min * h_abs, k - 1)
    t = isqrt_floor(need)
    if t * t < need:
        t += 1
    return t


def exclusion_ok(a: int, b: int, h_abs: int, k: int) -> bool:
    return (a - b) ** 2 * (k - 1) >= 2 * (a + b) * h_abs


def combined_min_sum(k: int, h_abs: int) -> int:
    """``ceil(2*h_abs / (k-1))``: slice-size floor from the exclusion zone."""
    _check_exponent(k)
    check_nat(h_abs, "h_abs")
    if h_abs == 0:
        raise ValueError("combined bound needs a non-zero shift")
    return ceil_div(2 * h_abs, k - 1)


@lru_cache(maxsize=65536)
def dominance_pruned(s_max: int, k: int) -> bool:
    """True when ``s_max**k > 2 * (s_max-1)**k``.

    Then the largest base of a solution cannot balance the other side, so
    no solution with non-zero shift has larger sum ``<= s_max``.
    """
    _check_exponent(k)
    check_nat(s_max, "s_max")
    if s_max < 2:
        return False
    return s_max**k > 2 * (s_max - 1) ** k


def dominance_k_max(s_max: int) -> Optional[int]:
    """Largest ``k`` with :func:`dominance_pruned` false, or None if unbounded.

    Returns 1 when every ``k >= 2`` is pruned.
    """
    check_nat(s_max, "s_max")
    if s_max < 2:
        return None
    if dominance_pruned(s_max, 2):
        return 1
    lo, hi = 2, 4
    while not dominance_pruned(s_max, hi):
        lo, hi = hi, hi * 2
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if dominance_pruned(s_max, mid):
            hi = mid
        else:
            lo = mid
    return lo


def strength_holds(k: int) -> bool:
    """Overlap floor beats the combined floor: ``2*(k+1)**k > 4**k``."""
    _check_exponent(k)
    return 2 * (k + 1) ** k > 1 << (2 * k)


@dataclass(frozen=True)
class BoundsProfile:
    exponent: int
    shift: int
    combined_min_sum: int
    overlap_min_sum: int

    def dominance_k_max(self, s_max: int) -> Optional[int]:
        return dominance_k_max(s_max)


def bounds_profile(k: int, h_abs: int) -> BoundsProfile:
    return BoundsProfile(k, h_abs, combined_min_sum(k, h_abs), overlap_min_sum(k, h_abs))

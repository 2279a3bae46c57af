"""Value sequences along a slice and their pairwise intersection."""

from dataclasses import dataclass

from . import kernels
from .bounds import exclusion_min_offset
from .numeric import check_exponent, check_nat, ipow

__all__ = [
    "MATERIALIZE_LIMIT",
    "Solution",
    "SliceSequence",
    "slice_values",
    "central_check",
    "intersect_slices",
    "scan_pair",
]

# Slices with more entries than this are streamed instead of stored.
MATERIALIZE_LIMIT = 1 << 20


@dataclass(frozen=True, order=True)
class Solution:
    """A nontrivial solution ``a**k + b**k == c**k + d**k``.

    Canonical form: ``a <= b``, ``c <= d`` and ``a + b <= c + d``; ties in
    the sum (which cannot occur for genuine solutions) order the pairs
    lexicographically.
    """

    k: int
    a: int
    b: int
    c: int
    d: int
    value: int

    @classmethod
    def from_pairs(cls, k, first, second, value=None):
        p = tuple(sorted(first))
        q = tuple(sorted(second))
        if (sum(p), p) > (sum(q), q):
            p, q = q, p
        if value is None:
            value = ipow(p[0], k) + ipow(p[1], k)
        return cls(k, p[0], p[1], q[0], q[1], value)

    @property
    def small_sum(self) -> int:
        return self.a + self.b

    @property
    def large_sum(self) -> int:
        return self.c + self.d

    @property
    def shift(self) -> int:
        return self.large_sum - self.small_sum

    def sort_key(self):
        return (self.small_sum, self.shift, self.value, self.a, self.c)

    def is_valid(self) -> bool:
        lhs = ipow(self.a, self.k) + ipow(self.b, self.k)
        rhs = ipow(self.c, self.k) + ipow(self.d, self.k)
        return lhs == rhs == self.value and (self.a, self.b) != (self.c, self.d)

    def as_dict(self):
        return {
            "k": self.k,
            "a": self.a,
            "b": self.b,
            "c": self.c,
            "d": self.d,
            "S": self.small_sum,
            "h": self.shift,
            "value": self.value,
        }


class SliceSequence:
    """Values ``x**k + (S-x)**k`` for ``x = 0 .. S//2``, strictly decreasing.

    Short slices keep their entries; long ones recompute on each pass.
    """

    def __init__(self, s: int, k: int, materialize_limit: int = MATERIALIZE_LIMIT):
        self.sum = check_nat(s, "S")
        self.exponent = check_exponent(k)
        self.entries = None
        if len(self) <= materialize_limit:
            self.entries = tuple(self._generate())

    def _generate(self):
        s, k = self.sum, self.exponent
        for x in range(s // 2 + 1):
            yield x, x**k + (s - x) ** k

    def __len__(self):
        return self.sum // 2 + 1

    def __iter__(self):
        if self.entries is not None:
            return iter(self.entries)
        return self._generate()

    def values(self):
        return [v for _, v in self]


def slice_values(s: int, k: int) -> SliceSequence:
    return SliceSequence(s, k)


def central_check(s: int, k: int):
    """Return ``(unique, min_gap)`` for the slice of sum ``s``.

    ``unique`` is False only if two pairs on the slice share a value;
    ``min_gap`` is the smallest consecutive difference, or None for a
    single-entry slice.
    """
    seq = slice_values(s, k)
    prev = None
    min_gap = None
    decreasing = True
    for _, v in seq:
        if prev is not None:
            gap = prev - v
            if gap <= 0:
                decreasing = False
            if min_gap is None or abs(gap) < min_gap:
                min_gap = abs(gap)
        prev = v
    if decreasing:
        return True, min_gap
    vals = seq.values()
    return len(set(vals)) == len(vals), min_gap


def scan_pair(s_min, h_abs, k, use_exclusion=True, powers=None):
    """Scan one slice pair.  Returns ``(solutions, visited, skipped)``.

    ``visited`` counts slice entries evaluated; ``skipped`` counts positions
    on the smaller slice removed by the exclusion zone.  Solutions come out
    in ascending value order.
    """
    n1 = s_min // 2
    x_stop = n1
    if use_exclusion and h_abs > 0 and s_min > 0:
        t = exclusion_min_offset(s_min, h_abs, k)
        x_stop = -1 if t > s_min else (s_min - t) // 2
    skipped = n1 - x_stop
    s_max = s_min + h_abs
    matches, visited = kernels.intersect(s_min, s_max, k, x_stop, powers)
    out = []
    for x, y in reversed(matches):
        sol = Solution.from_pairs(k, (x, s_min - x), (y, s_max - y))
        if not sol.is_valid():
            raise RuntimeError(f"kernel emitted a non-solution {sol}")
        out.append(sol)
    return out, visited, skipped


def intersect_slices(s_min: int, h_abs: int, k: int, use_exclusion: bool = True):
    """All solutions with ``a + b = s_min`` and ``c + d = s_min + h_abs``.

    One two-pointer pass over the two monotone value sequences.  The
    central slice (``h_abs == 0``) only has trivial coincidences and gives
    an empty list.
    """
    check_nat(s_min, "s_min")
    check_nat(h_abs, "h_abs")
    check_exponent(k)
    if h_abs == 0:
        return []
    return scan_pair(s_min, h_abs, k, use_exclusion)[0]

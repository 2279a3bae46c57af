"""Brute-force ground truth.

Enumerates every pair ``0 <= a <= b <= max_val``, groups pairs by their
exact power sum, and reports all coincidences.  None of the pruning
filters are used here, so this path can falsify them.
"""

from itertools import combinations, groupby

from .bounds import SlicePair, dominance_pruned, overlap_feasible
from .mdo import mdo_modulus
from .numeric import check_exponent, check_nat, ipow
from .slices import Solution

__all__ = [
    "DEFAULT_CAP",
    "OracleCapExceeded",
    "brute_force_solutions",
    "verify_theorems",
    "check_two_powers",
    "THEOREM_CHECKS",
]

DEFAULT_CAP = 200


class OracleCapExceeded(ValueError):
    pass


def _check_bound(max_val, cap):
    check_nat(max_val, "max_val")
    if max_val > cap:
        raise OracleCapExceeded(f"max_val {max_val} above oracle cap {cap}")


def _pair_values(k, max_val):
    powers = [ipow(x, k) for x in range(max_val + 1)]
    rows = [
        (powers[a] + powers[b], a, b)
        for a in range(max_val + 1)
        for b in range(a, max_val + 1)
    ]
    rows.sort()
    return rows


def brute_force_solutions(k: int, max_val: int, cap: int = DEFAULT_CAP) -> list[Solution]:
    """Every nontrivial solution with all variables in ``[0, max_val]``.

    Sorted by common value, then by the pairs.
    """
    check_exponent(k)
    _check_bound(max_val, cap)
    out = []
    for value, group in groupby(_pair_values(k, max_val), key=lambda r: r[0]):
        pairs = [(a, b) for _, a, b in group]
        for p, q in combinations(pairs, 2):
            out.append(Solution.from_pairs(k, p, q, value))
    out.sort(key=lambda s: (s.value, s.a, s.b, s.c, s.d))
    return out


def _check_mdo(sol):
    return sol.shift % mdo_modulus(sol.k) == 0


def _check_exclusion(sol):
    h = sol.shift
    if h == 0:
        return True
    return (sol.a - sol.b) ** 2 * (sol.k - 1) >= 2 * sol.small_sum * h


def _check_overlap(sol):
    if sol.shift == 0:
        return True
    return overlap_feasible(SlicePair(sol.small_sum, sol.large_sum), sol.k)


def _check_dominance(sol):
    return not dominance_pruned(sol.large_sum, sol.k)


def _check_central(sol):
    return sol.shift != 0


THEOREM_CHECKS = {
    "mdo_divides_shift": _check_mdo,
    "exclusion_zone": _check_exclusion,
    "overlap_bound": _check_overlap,
    "dominance_bound": _check_dominance,
    "central_uniqueness": _check_central,
}


def verify_theorems(k: int, max_val: int, cap: int = DEFAULT_CAP) -> dict:
    """Run every necessary condition against the oracle's solutions.

    Returns ``{"k", "max_val", "solutions", "passed", "checks"}`` where each
    entry of ``checks`` maps a check name to ``{"passed", "counterexample"}``;
    the counterexample is the first offending solution or None.
    """
    sols = brute_force_solutions(k, max_val, cap)
    checks = {}
    for name, check in THEOREM_CHECKS.items():
        bad = next((s for s in sols if not check(s)), None)
        checks[name] = {"passed": bad is None, "counterexample": bad}
    return {
        "k": k,
        "max_val": max_val,
        "solutions": len(sols),
        "passed": all(c["passed"] for c in checks.values()),
        "checks": checks,
    }


def check_two_powers(m: int, k: int, max_val: int, cap: int = DEFAULT_CAP) -> bool:
    """True iff no two distinct pairs agree in both the m-th and k-th power sums."""
    check_nat(m, "m")
    if m < 1:
        raise ValueError("m must be >= 1")
    if k <= m:
        raise ValueError("k must exceed m")
    _check_bound(max_val, cap)
    rows = sorted(
        (a**m + b**m, a**k + b**k)
        for a in range(max_val + 1)
        for b in range(a, max_val + 1)
    )
    return all(x != y for x, y in zip(rows, rows[1:]))

"""Search over slice pairs ``(S, S + h)`` with necessary-condition filters.

Filters run cheapest first: MDO divisibility, range overlap, dominance,
then the two-pointer scan restricted by the exclusion zone.  Every filter
is a proved necessary condition, so switching one off never changes the
solution set, only the amount of work.
"""

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Optional

from .bounds import dominance_pruned
from .mdo import mdo_modulus
from .numeric import check_exponent, check_nat
from .slices import central_check, scan_pair

__all__ = [
    "SearchConfig",
    "SearchStats",
    "SearchReport",
    "BudgetExceeded",
    "InconsistencyError",
    "run_search",
    "filter_breakdown",
    "thread_count",
]

_CHUNK = 64


class BudgetExceeded(RuntimeError):
    """Projected value evaluations passed the configured budget.

    ``report`` holds the partial results gathered before stopping.
    """

    def __init__(self, report):
        super().__init__(
            f"evaluation budget {report.config.budget} exhausted; "
            f"{report.stats.deferred} slice pairs left unscanned"
        )
        self.report = report


class InconsistencyError(RuntimeError):
    """A central slice produced a repeated value."""


@dataclass(frozen=True)
class SearchConfig:
    k: int
    max_small_sum: int
    shift_policy: str = "auto"  # "auto", "list" or "max"
    shifts: tuple = ()
    shift_max: int = 0
    use_mdo: bool = True
    use_overlap: bool = True
    use_dominance: bool = True
    use_exclusion: bool = True
    include_central: bool = False
    budget: Optional[int] = None

    def __post_init__(self):
        check_exponent(self.k)
        check_nat(self.max_small_sum, "max_small_sum")
        if self.shift_policy not in ("auto", "list", "max"):
            raise ValueError(f"unknown shift policy {self.shift_policy!r}")
        for h in self.shifts:
            check_nat(h, "shift")
        check_nat(self.shift_max, "shift_max")
        if self.budget is not None:
            check_nat(self.budget, "budget")

    def describe(self):
        d = asdict(self)
        d["shifts"] = list(self.shifts)
        return d


@dataclass
class SearchStats:
    enumerated: int = 0
    rejected_mdo: int = 0
    rejected_overlap: int = 0
    rejected_dominance: int = 0
    scanned: int = 0
    deferred: int = 0
    exclusion_skipped: int = 0
    evaluations: int = 0
    central_checked: int = 0

    def as_dict(self):
        return asdict(self)


@dataclass
class SearchReport:
    config: SearchConfig
    solutions: list = field(default_factory=list)
    stats: SearchStats = field(default_factory=SearchStats)
    complete: bool = True

    def as_dict(self):
        return {
            "config": self.config.describe(),
            "stats": self.stats.as_dict(),
            "complete": self.complete,
            "solutions": [s.as_dict() for s in self.solutions],
        }


def thread_count(threads=None):
    """Resolve a worker count; ``POWERSLICE_THREADS`` applies when None.

    0 means one worker per CPU.
    """
    if threads is None:
        threads = int(os.environ.get("POWERSLICE_THREADS", "1") or 1)
    if threads <= 0:
        threads = os.cpu_count() or 1
    return threads


class _PowerTable(list):
    """Lazily extended table of ``x**k``."""

    def __init__(self, k):
        super().__init__([0**k])
        self.k = k

    def upto(self, n):
        k = self.k
        for x in range(len(self), n + 1):
            self.append(x**k)
        return self


def _dominance_limit(k):
    """Largest ``s`` with ``dominance_pruned(s, k)``; pruning is ``2 <= s <= limit``."""
    lo, hi = 2, 4
    while dominance_pruned(hi, k):
        lo, hi = hi, hi * 2
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if dominance_pruned(mid, k):
            lo = mid
        else:
            hi = mid
    return lo


def _narrow(cands, lo=None, hi=None):
    """Keep shifts in ``[lo, hi]``; returns (kept, rejected_count)."""
    if isinstance(cands, range):
        start, stop = cands.start, cands.stop
        if lo is not None and lo > start:
            step = cands.step
            start += -(-(lo - start) // step) * step
        if hi is not None:
            stop = min(stop, hi + 1)
        kept = range(start, max(start, stop), cands.step)
    else:
        kept = [h for h in cands if (lo is None or h >= lo) and (hi is None or h <= hi)]
    return kept, len(cands) - len(kept)


def _classify(config, stats, powers):
    """Yield ``(S, surviving shifts)`` for S = 1..max_small_sum in order."""
    k = config.k
    modulus = mdo_modulus(k) if config.use_mdo else 1
    dom_limit = _dominance_limit(k) if config.use_dominance else None
    explicit = sorted(set(h for h in config.shifts if h >= 1))
    h_top = 0  # largest overlap-feasible shift for the current S
    for s in range(1, config.max_small_sum + 1):
        if config.shift_policy == "auto" or config.use_overlap:
            powers.upto(s + h_top + 1)
            threshold = powers[s] << (k - 1)
            while powers[s + h_top + 1] <= threshold:
                h_top += 1
                powers.upto(s + h_top + 1)
        if config.shift_policy == "auto":
            cands = range(1, h_top + 1)
        elif config.shift_policy == "max":
            cands = range(1, config.shift_max + 1)
        else:
            cands = explicit
        stats.enumerated += len(cands)
        if config.use_mdo:
            if isinstance(cands, range):
                kept = range(modulus, cands.stop, modulus)
            else:
                kept = [h for h in cands if h % modulus == 0]
            stats.rejected_mdo += len(cands) - len(kept)
            cands = kept
        if config.use_overlap:
            cands, dropped = _narrow(cands, hi=h_top)
            stats.rejected_overlap += dropped
        if config.use_dominance:
            cands, dropped = _narrow(cands, lo=dom_limit - s + 1)
            stats.rejected_dominance += dropped
        if len(cands):
            yield s, cands


def _projected_cost(s_min, h):
    return 2 * (s_min // 2 + 1 + (s_min + h) // 2 + 1)


def run_search(config: SearchConfig, threads=None) -> SearchReport:
    """Enumerate slice pairs, filter them, and scan the survivors.

    Work is counted in power evaluations, two per slice value.  If
    ``config.budget`` is set and the projected cost of the next pair would
    exceed it, scanning stops and :class:`BudgetExceeded` carries the
    partial report.  The report is identical for any thread count.
    """
    report = SearchReport(config)
    stats = report.stats
    powers = _PowerTable(config.k)
    k = config.k
    workers = thread_count(threads)
    pool = ThreadPoolExecutor(workers) if workers > 1 else None
    projected = 0
    exhausted = False
    batch = []

    def job(pair):
        s, h = pair
        return scan_pair(s, h, k, config.use_exclusion, powers)

    def flush():
        results = pool.map(job, batch) if pool else map(job, batch)
        for sols, visited, skipped in results:
            report.solutions.extend(sols)
            stats.evaluations += 2 * visited
            stats.exclusion_skipped += skipped
        stats.scanned += len(batch)
        batch.clear()

    try:
        for s, shifts in _classify(config, stats, powers):
            if exhausted:
                stats.deferred += len(shifts)
                continue
            for i, h in enumerate(shifts):
                cost = _projected_cost(s, h)
                if config.budget is not None and projected + cost > config.budget:
                    exhausted = True
                    stats.deferred += len(shifts) - i
                    break
                projected += cost
                batch.append((s, h))
            powers.upto(s + max(shifts))
            if len(batch) >= _CHUNK:
                flush()
        flush()
    finally:
        if pool:
            pool.shutdown()

    if config.include_central:
        for s in range(1, config.max_small_sum + 1):
            unique, _ = central_check(s, k)
            stats.central_checked += 1
            stats.evaluations += 2 * (s // 2 + 1)
            if not unique:
                raise InconsistencyError(f"repeated value on central slice S={s}, k={k}")

    report.solutions.sort(key=lambda sol: sol.sort_key())
    if exhausted:
        report.complete = False
        raise BudgetExceeded(report)
    return report


def filter_breakdown(config: SearchConfig) -> dict:
    """Fraction of enumerated slice pairs removed by each filter.

    Only the classification stage runs; the returned ``"scanned"`` entry is
    the share that would reach the slice scan.
    """
    stats = SearchStats()
    survivors = 0
    for _, shifts in _classify(config, stats, _PowerTable(config.k)):
        survivors += len(shifts)
    total = stats.enumerated
    if total == 0:
        zero = Fraction(0)
        return {"mdo": zero, "overlap": zero, "dominance": zero, "scanned": zero, "enumerated": 0}
    return {
        "mdo": Fraction(stats.rejected_mdo, total),
        "overlap": Fraction(stats.rejected_overlap, total),
        "dominance": Fraction(stats.rejected_dominance, total),
        "scanned": Fraction(survivors, total),
        "enumerated": total,
    }

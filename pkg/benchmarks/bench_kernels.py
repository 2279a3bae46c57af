"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import time

from powerslice import _pykernels, kernels
from powerslice.mdo import mdo_modulus
from powerslice.search import SearchConfig, run_search

try:
    from powerslice import _ckernels
except ImportError:
    _ckernels = None


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    return best


def intersect_sweep(mod, k, s_lo, s_hi, h):
    def go():
        for s in range(s_lo, s_hi):
            mod.intersect(s, s + h, k, s // 2)
    return go


def fermat_scan(mod, k):
    n = mdo_modulus(k)
    return lambda: mod.fermat_first_failure(k, n, n)


def full_search(use_compiled, k, max_sum):
    def go():
        saved = kernels._ck
        if not use_compiled:
            kernels._ck = None
        try:
            run_search(SearchConfig(k, max_sum), threads=1)
        finally:
            kernels._ck = saved
    return go


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    if _ckernels is None:
        print("compiled kernels not built; run `pip install -e . --no-build-isolation`")
        return
    cases = [
        ("intersect k=4, S=1000..1400, h=200", lambda m: intersect_sweep(m, 4, 1000, 1400, 200)),
        ("intersect k=3, S=5000..5100, h=1000", lambda m: intersect_sweep(m, 3, 5000, 5100, 1000)),
        ("fermat scan k=37 over M_37 residues", lambda m: fermat_scan(m, 37)),
        ("run_search k=4, max-sum 300", lambda m: full_search(m is _ckernels, 4, 300)),
        ("run_search k=3, max-sum 1500", lambda m: full_search(m is _ckernels, 3, 1500)),
    ]
    print(f"{'case':40s} {'python s':>10s} {'cython s':>10s} {'speedup':>8s}")
    for name, make in cases:
        py = best_of(make(_pykernels), args.repeat)
        cy = best_of(make(_ckernels), args.repeat)
        print(f"{name:40s} {py:10.4f} {cy:10.4f} {py / cy:8.1f}x")


if __name__ == "__main__":
    main()

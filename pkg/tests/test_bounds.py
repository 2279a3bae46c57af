from math import comb

import mpmath
import pytest
from hypothesis import given, strategies as st

from powerslice.bounds import (
    SlicePair,
    bounds_profile,
    combined_min_sum,
    dominance_k_max,
    dominance_pruned,
    exclusion_min_offset,
    max_overlap_shift,
    neighbor_gap,
    overlap_feasible,
    overlap_min_sum,
    separation_floor,
    strength_holds,
)
from powerslice.oracle import brute_force_solutions


def brute_min_gap(s, k):
    vals = sorted({x**k + (s - x) ** k for x in range(s + 1)})
    return min(b - a for a, b in zip(vals, vals[1:]))


@pytest.mark.parametrize("s,k,expected", [(10, 3, 30), (4, 2, 2), (13, 2, 2)])
def test_separation_floor(s, k, expected):
    assert separation_floor(s, k) == expected


def test_separation_examples_from_brute_force():
    assert brute_min_gap(10, 3) == 30
    assert brute_min_gap(4, 2) == 2


@pytest.mark.parametrize("s,k,expected", [(10, 3, 30), (5, 3, 30), (2, 2, 2)])
def test_neighbor_gap(s, k, expected):
    assert neighbor_gap(s, k) == expected
    assert brute_min_gap(s, k) == expected


def test_neighbor_gap_is_min_gap():
    for k in range(2, 8):
        for s in range(2, 120):
            assert neighbor_gap(s, k) == brute_min_gap(s, k), (s, k)


@given(st.integers(2, 3000), st.integers(2, 30))
def test_separation_consistency(s, k):
    gap = neighbor_gap(s, k)
    floor = separation_floor(s, k)
    assert gap >= floor
    # floor >= k(k-1) 3^(2-k) S^(k-2), scaled by 3^(k-2)
    assert 3 ** (k - 2) * floor >= k * (k - 1) * s ** (k - 2)


def test_separation_rejects_small():
    with pytest.raises(ValueError):
        separation_floor(1, 3)
    with pytest.raises(ValueError):
        neighbor_gap(1, 3)
    with pytest.raises(ValueError):
        separation_floor(5, 1)


@pytest.mark.parametrize(
    "s_min,s_max,k,expected",
    [(13, 19, 3, True), (10, 19, 3, False), (3046, 5776, 13, False), (3047, 5777, 13, True)],
)
def test_overlap_feasible(s_min, s_max, k, expected):
    assert overlap_feasible(SlicePair(s_min, s_max), k) is expected


def test_overlap_rejects_central():
    with pytest.raises(ValueError):
        overlap_feasible(SlicePair(5, 5), 3)
    with pytest.raises(ValueError):
        overlap_min_sum(3, 0)


def linear_overlap_min(k, h):
    s = 1
    while not overlap_feasible(SlicePair(s, s + h), k):
        s += 1
    return s


def test_overlap_min_sum_examples():
    assert overlap_min_sum(13, 2730) == 3047
    assert overlap_min_sum(2, 1) == 3
    v = overlap_min_sum(3, 6)
    assert v <= 13
    with mpmath.workdps(50):
        assert v == int(mpmath.ceil(6 / (mpmath.mpf(2) ** (mpmath.mpf(2) / 3) - 1)))


@given(st.integers(2, 25), st.integers(1, 400))
def test_overlap_min_sum_is_threshold(k, h):
    v = overlap_min_sum(k, h)
    assert v == linear_overlap_min(k, h)
    with mpmath.workdps(60):
        real = h / (mpmath.mpf(2) ** (mpmath.mpf(k - 1) / k) - 1)
        assert v == int(mpmath.ceil(real))


@given(st.integers(2, 20), st.integers(1, 300))
def test_overlap_monotone_in_small_sum(k, h):
    flags = [overlap_feasible(SlicePair(s, s + h), k) for s in range(1, 400)]
    assert flags == sorted(flags)


@given(st.integers(2, 20), st.integers(0, 2000))
def test_max_overlap_shift(k, s):
    h = max_overlap_shift(s, k)
    assert h == 0 or overlap_feasible(SlicePair(s, s + h), k)
    assert not overlap_feasible(SlicePair(s, s + h + 1), k) or s == 0


@pytest.mark.parametrize("s,h,k,expected", [(13, 6, 3, 9), (1, 1, 2, 2), (0, 5, 4, 0)])
def test_exclusion_min_offset(s, h, k, expected):
    assert exclusion_min_offset(s, h, k) == expected


@given(st.integers(0, 10**6), st.integers(0, 10**6), st.integers(2, 50))
def test_exclusion_offset_is_smallest(s, h, k):
    t = exclusion_min_offset(s, h, k)
    assert t * t * (k - 1) >= 2 * s * h
    assert t == 0 or (t - 1) ** 2 * (k - 1) < 2 * s * h


@pytest.mark.parametrize("k,h,expected", [(13, 2730, 455), (3, 6, 6), (5, 30, 15), (15, 6, 1)])
def test_combined_min_sum(k, h, expected):
    assert combined_min_sum(k, h) == expected


@pytest.mark.parametrize("s,k,expected", [(19, 13, True), (19, 12, False), (2, 2, True), (1, 5, False), (0, 5, False)])
def test_dominance_pruned(s, k, expected):
    assert dominance_pruned(s, k) is expected


@given(st.integers(2, 400), st.integers(2, 300))
def test_dominance_monotone_in_k(s, k):
    if dominance_pruned(s, k):
        assert dominance_pruned(s, k + 1)
        assert all(dominance_pruned(m, k) for m in range(2, s))


def test_dominance_k_max():
    assert dominance_k_max(19) == 12
    assert dominance_k_max(2) == 1
    assert dominance_k_max(1) is None
    for s in range(2, 120):
        km = dominance_k_max(s)
        assert all(not dominance_pruned(s, k) for k in range(2, km + 1))
        assert dominance_pruned(s, km + 1)


@pytest.mark.parametrize("k", [2, 13, 1000])
def test_strength_holds(k):
    assert strength_holds(k)


def test_strength_matches_real_inequality():
    with mpmath.workdps(60):
        for k in range(2, 200):
            ck = 1 / (mpmath.mpf(2) ** (mpmath.mpf(k - 1) / k) - 1)
            assert (ck > mpmath.mpf(2) / (k - 1)) == strength_holds(k)


@given(st.integers(2, 40), st.integers(1, 10**5))
def test_bound_ordering(k, h):
    prof = bounds_profile(k, h)
    assert prof.overlap_min_sum >= prof.combined_min_sum


def test_vmin_convexity():
    # 2^k * Vmin(S) = 2 * S^k
    for k in range(2, 15):
        v = [2 * s**k for s in range(0, 200)]
        for s in range(1, 199):
            assert v[s + 1] + v[s - 1] - 2 * v[s] > 0
            assert v[s + 1] > v[s]


def test_coefficient_inequality():
    for k in range(2, 61):
        for m in range(1, k // 2 + 1):
            lhs = 2**m * comb(k, 2 * m)
            rhs = comb(k, m) * (k - 1) ** m
            assert lhs <= rhs
            if m == 1:
                assert lhs == rhs


@pytest.mark.parametrize("k,bound", [(2, 60), (3, 80), (4, 160)])
def test_bounds_sound_on_oracle(k, bound):
    for sol in brute_force_solutions(k, bound):
        h = sol.shift
        assert (sol.a - sol.b) ** 2 * (k - 1) >= 2 * sol.small_sum * h
        assert sol.small_sum >= overlap_min_sum(k, h)
        assert sol.small_sum >= combined_min_sum(k, h)
        assert not dominance_pruned(sol.large_sum, k)

"""Exact search for equal sums of two like powers along linear slices."""

from .bounds import (
    BoundsProfile,
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
from .kernels import BACKEND
from .mdo import (
    MdoProfile,
    admissible_density,
    holds_fermat_identity,
    is_admissible_shift,
    mdo_modulus,
    mdo_primes,
    mdo_profile,
)
from .numeric import ceil_div, ipow, isqrt_floor
from .oracle import brute_force_solutions, check_two_powers, verify_theorems
from .search import SearchConfig, SearchReport, filter_breakdown, run_search
from .slices import Solution, central_check, intersect_slices, slice_values

__version__ = "0.1.0"

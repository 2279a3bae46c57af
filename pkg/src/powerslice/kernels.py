"""Backend selection for the hot loops.

The compiled extension is used when it is importable and the numbers fit in
machine words; everything else goes through the pure-Python twins.  Set
``POWERSLICE_PURE=1`` to force the pure-Python backend.
"""

import os

from . import _pykernels

_U64_LIMIT = 1 << 64
_MOD_LIMIT = 1 << 32

_ck = None
if os.environ.get("POWERSLICE_PURE", "") in ("", "0"):
    try:
        from . import _ckernels as _ck
    except ImportError:  # extension not built
        _ck = None

BACKEND = "cython" if _ck is not None else "python"


def fits_u64(s_large, k):
    return s_large**k < _U64_LIMIT


def intersect(s_small, s_large, k, x_stop, powers=None):
    if _ck is not None and fits_u64(s_large, k):
        return _ck.intersect(s_small, s_large, k, x_stop)
    return _pykernels.intersect(s_small, s_large, k, x_stop, powers)


def fermat_first_failure(k, n, limit):
    if _ck is not None and n < _MOD_LIMIT:
        return _ck.fermat_first_failure(k, n, limit)
    return _pykernels.fermat_first_failure(k, n, limit)

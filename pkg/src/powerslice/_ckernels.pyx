# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of ``_pykernels`` for values that fit in 64 bits."""

from libc.stdint cimport uint64_t
from libc.stdlib cimport malloc, free

U64_LIMIT = 1 << 64
MOD_LIMIT = 1 << 32


cdef inline uint64_t _pow(uint64_t x, long k) noexcept nogil:
    cdef uint64_t r = 1
    while k:
        if k & 1:
            r *= x
        k >>= 1
        if k:
            x *= x
    return r


cdef inline uint64_t _powmod(uint64_t x, long k, uint64_t n) noexcept nogil:
    cdef uint64_t r = 1 % n
    x %= n
    while k:
        if k & 1:
            r = r * x % n
        k >>= 1
        if k:
            x = x * x % n
    return r


def intersect(long s_small, long s_large, long k, long x_stop, powers=None):
    """Same contract as ``_pykernels.intersect``; requires s_large**k < 2**64.

    ``powers`` is accepted for signature parity and ignored.
    """
    if x_stop < 0:
        return [], 0
    if s_small < 0 or s_large < 0 or k < 0 or x_stop > s_small // 2:
        raise ValueError("bad slice arguments")
    if (<object>s_large) ** k >= U64_LIMIT:
        raise OverflowError("slice values exceed 64 bits")
    cdef long n2 = s_large // 2
    cdef long i = 0, j = 0, m = 0
    cdef long visited = 2
    cdef uint64_t a, b
    cdef long *buf = <long *> malloc(2 * (x_stop + 1) * sizeof(long))
    if buf == NULL:
        raise MemoryError()
    try:
        with nogil:
            a = _pow(s_small, k)
            b = _pow(s_large, k)
            while True:
                if a == b:
                    buf[2 * m] = i
                    buf[2 * m + 1] = j
                    m += 1
                    i += 1
                    j += 1
                    if i > x_stop or j > n2:
                        break
                    a = _pow(i, k) + _pow(s_small - i, k)
                    b = _pow(j, k) + _pow(s_large - j, k)
                    visited += 2
                elif a > b:
                    i += 1
                    if i > x_stop:
                        break
                    a = _pow(i, k) + _pow(s_small - i, k)
                    visited += 1
                else:
                    j += 1
                    if j > n2:
                        break
                    b = _pow(j, k) + _pow(s_large - j, k)
                    visited += 1
        return [(buf[2 * t], buf[2 * t + 1]) for t in range(m)], visited
    finally:
        free(buf)


def fermat_first_failure(long k, n, limit):
    """First residue x < limit with x**k != x (mod n), or -1.  Needs n < 2**32."""
    if n >= MOD_LIMIT or limit > n:
        raise OverflowError("modulus too large for the compiled scan")
    cdef uint64_t nn = n
    cdef uint64_t lim = limit
    cdef uint64_t x = 0
    cdef long found = -1
    with nogil:
        while x < lim:
            if _powmod(x, k, nn) != x:
                found = <long> x
                break
            x += 1
    return found

"""Modular divisibility obstruction for the shift between two slices.

For an exponent ``k`` the primes ``p`` with ``(p - 1) | (k - 1)`` satisfy
``x**k == x (mod p)`` for every integer ``x``.  Their product ``M_k`` must
therefore divide the shift ``h = (c + d) - (a + b)`` of any solution of
``a**k + b**k == c**k + d**k``.
"""

from dataclasses import dataclass
from fractions import Fraction

from . import kernels
from .numeric import check_exponent as _check_exponent, check_nat

__all__ = [
    "MdoProfile",
    "FermatScanTooLarge",
    "DEFAULT_RESIDUE_CAP",
    "mdo_primes",
    "mdo_modulus",
    "mdo_profile",
    "is_admissible_shift",
    "holds_fermat_identity",
    "admissible_density",
    "is_prime",
]

DEFAULT_RESIDUE_CAP = 10**7

# Deterministic Miller-Rabin witnesses, valid for n < 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_LIMIT = 3317044064679887385961981


class FermatScanTooLarge(ValueError):
    """Raised when a modulus is too large to certify by scanning residues."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    if n >= _MR_LIMIT:
        raise ValueError("primality test limited to n < 3.3e24")
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _factorize(n):
    factors = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def _divisors(n):
    divs = [1]
    for p, e in _factorize(n).items():
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return sorted(divs)


def mdo_primes(k: int) -> list[int]:
    """Primes ``p`` with ``(p - 1) | (k - 1)``, ascending.

    Found by testing ``d + 1`` for each divisor ``d`` of ``k - 1``.

    >>> mdo_primes(13)
    [2, 3, 5, 7, 13]
    """
    _check_exponent(k)
    return [d + 1 for d in _divisors(k - 1) if is_prime(d + 1)]


def mdo_modulus(k: int) -> int:
    modulus = 1
    for p in mdo_primes(k):
        modulus *= p
    return modulus


@dataclass(frozen=True)
class MdoProfile:
    exponent: int
    primes: tuple[int, ...]
    modulus: int

    @property
    def density(self) -> Fraction:
        return Fraction(1, self.modulus)


def mdo_profile(k: int) -> MdoProfile:
    primes = tuple(mdo_primes(k))
    modulus = 1
    for p in primes:
        modulus *= p
    return MdoProfile(k, primes, modulus)


def is_admissible_shift(k: int, h: int) -> bool:
    """True iff ``M_k`` divides ``h``.  ``h == 0`` counts as admissible."""
    return h % mdo_modulus(k) == 0


def holds_fermat_identity(k: int, n: int, cap: int = DEFAULT_RESIDUE_CAP) -> bool:
    """Check ``x**k == x (mod n)`` for every residue ``x`` in ``range(n)``.

    The scan is exhaustive.  At most ``cap`` residues are visited: a
    counterexample among them settles the answer, otherwise a modulus above
    the cap raises :class:`FermatScanTooLarge` instead of guessing.
    """
    _check_exponent(k)
    check_nat(n, "modulus")
    if n == 0:
        raise ValueError("modulus must be >= 1")
    limit = min(n, cap)
    if kernels.fermat_first_failure(k, n, limit) >= 0:
        return False
    if n > cap:
        raise FermatScanTooLarge(
            f"modulus {n} exceeds residue cap {cap} with no counterexample below it"
        )
    return True


def admissible_density(k: int) -> Fraction:
    return Fraction(1, mdo_modulus(k))

"""Exact Gaussian-integer arithmetic and primality.

A Gaussian integer a+bi is a Gaussian prime iff one of:

* a and b are both nonzero and a**2 + b**2 is a rational prime;
* a == 0 and |b| is a rational prime congruent to 3 mod 4;
* b == 0 and |a| is a rational prime congruent to 3 mod 4.

Zero and the units (1, -1, i, -i) are not prime.  Everything here is exact
integer arithmetic; no floating point is involved anywhere.

Python integers do not overflow, but results must stay portable to 64-bit
implementations, so every norm computation enforces a fixed supported width:
values whose norm exceeds ``NORM_LIMIT`` (2**62, leaving headroom for
squaring inside 64-bit) are rejected with :class:`OverflowError` instead of
being accepted silently.

All functions are pure and safe for concurrent callers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

#: Largest supported norm; inputs beyond it raise OverflowError.
NORM_LIMIT = 2**62

#: A norm value a**2 + b**2 (exact, non-negative).
Norm = int


@dataclass(frozen=True, slots=True, order=True)
class GaussInt:
    """Lattice point a + bi with exact integer coordinates.

    Ordering is plain (a, b) lexicographic; use :func:`sort_key` when a
    norm-major order is wanted.
    """

    a: int
    b: int

    def __str__(self) -> str:
        return f"({self.a},{self.b})"


def sort_key(z: GaussInt) -> tuple[int, int, int]:
    """Canonical (norm, a, b) ordering key used for all prime listings."""
    return (z.a * z.a + z.b * z.b, z.a, z.b)


def norm(z: GaussInt) -> Norm:
    """Exact squared modulus a**2 + b**2.

    Raises OverflowError when the value exceeds the supported width, naming
    the offending input.
    """
    n = z.a * z.a + z.b * z.b
    if n > NORM_LIMIT:
        raise OverflowError(f"norm of {z} is {n}, beyond the supported bound 2**62")
    return n


def distance_sq(z: GaussInt, w: GaussInt) -> int:
    """Exact squared Euclidean distance between two lattice points."""
    da = z.a - w.a
    db = z.b - w.b
    return da * da + db * db


# Deterministic Miller-Rabin witness tiers (Pomerance/Jaeschke/Sinclair).
# Each tuple gives a bound and a base set proven sufficient below it; the
# final set is exact for every n < 3.3 * 10**24, far beyond NORM_LIMIT.
_MR_TIERS: tuple[tuple[int, tuple[int, ...]], ...] = (
    (2047, (2,)),
    (1373653, (2, 3)),
    (9080191, (31, 73)),
    (25326001, (2, 3, 5)),
    (3215031751, (2, 3, 5, 7)),
    (4759123141, (2, 7, 61)),
    (1122004669633, (2, 13, 23, 1662803)),
    (2152302898747, (2, 3, 5, 7, 11)),
    (3474749660383, (2, 3, 5, 7, 11, 13)),
    (341550071728321, (2, 3, 5, 7, 11, 13, 17)),
    (3825123056546413051, (2, 3, 5, 7, 11, 13, 17, 19, 23)),
)
_MR_FULL = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_rational_prime(n: int) -> bool:
    """Deterministic primality over the rational integers.

    Uses trial division by small primes, then Miller-Rabin with fixed
    witness sets valid for the full supported width; no probabilistic error.
    """
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d = n - 1
    r = (d & -d).bit_length() - 1
    d >>= r
    bases: tuple[int, ...] = _MR_FULL
    for bound, tier in _MR_TIERS:
        if n < bound:
            bases = tier
            break
    for a in bases:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def is_gaussian_prime(z: GaussInt) -> bool:
    """Gaussian primality via the three-case norm characterization."""
    n = norm(z)
    if z.a and z.b:
        return is_rational_prime(n)
    p = abs(z.a) or abs(z.b)
    return p % 4 == 3 and is_rational_prime(p)


def gaussian_mul(z: GaussInt, w: GaussInt) -> GaussInt:
    """Exact Gaussian product (a1*a2 - b1*b2, a1*b2 + a2*b1).

    Rejects products whose norm would leave the supported width (the norm is
    multiplicative, so the check is exact without computing the product
    coordinates first).
    """
    if norm(z) * norm(w) > NORM_LIMIT:
        raise OverflowError(f"product of {z} and {w} exceeds the supported bound 2**62")
    return GaussInt(z.a * w.a - z.b * w.b, z.a * w.b + z.b * w.a)


def eightfold_orbit(z: GaussInt) -> set[GaussInt]:
    """The symmetry orbit {(+-a, +-b), (+-b, +-a)} with duplicates removed.

    Primality is constant on the orbit, so the first octant determines the
    whole plane.  The orbit size always divides 8.
    """
    if z.a == 0 and z.b == 0:
        raise ValueError("the zero point has no symmetry orbit")
    orbit = set()
    for x, y in ((z.a, z.b), (z.b, z.a)):
        for sx in (1, -1):
            for sy in (1, -1):
                orbit.add(GaussInt(sx * x, sy * y))
    return orbit


def reflect(z: GaussInt) -> GaussInt:
    """Mirror across the diagonal x = y: (a, b) -> (b, a)."""
    return GaussInt(z.b, z.a)


def is_gaussian_prime_bruteforce(z: GaussInt) -> bool:
    """Divisor-search primality oracle, independent of the norm cases.

    z is composite exactly when some Gaussian integer d with
    1 < norm(d) < norm(z) divides it.  Any factorization z = d*e has
    min(norm(d), norm(e))**2 <= norm(z), so scanning divisors with
    norm(d)**2 <= norm(z) is exhaustive.  Divisors come in associate
    quadruples and each quadruple has exactly one member with c >= 1,
    e >= 0, so only that quadrant is scanned.

    Intended as the test oracle; quadratic in the modulus, fine at desk
    scale only.
    """
    n = norm(z)
    if n <= 1:
        return False
    s = math.isqrt(n)  # divisor norm bound
    x, y = z.a, z.b
    cmax = math.isqrt(s)
    for c in range(1, cmax + 1):
        for e in range(0, math.isqrt(s - c * c) + 1):
            dn = c * c + e * e
            if dn < 2:
                continue
            # d = c + ei divides z iff z * conj(d) / norm(d) is integral.
            if (x * c + y * e) % dn == 0 and (y * c - x * e) % dn == 0:
                return False
    return True

"""Lattice counts, prime-density estimates, and the three-square predicate.

The Gauss circle problem counts lattice points in a disk: N(r) is roughly
pi * r**2, and Gauss's elementary bound |N(r) - pi r**2| <= 2 sqrt(2) pi r
is the one asserted by the test suite (sharper modern exponents are known,
down to r**(131/208), but only documented here).  Exact counts never pass
through floating point; real-valued estimates are ordinary 64-bit floats
with a 1e-9 relative comparison tolerance.

The density model treats a random integer near n as prime with probability
1/ln(n).  For a square of side r cornered at (a, b) that predicts about
2r(a + b + r)/ln(n1) primes, where n1 = (a+r)**2 + (b+r)**2 is the norm at
the far corner; the exact empirical count is always reported next to the
prediction so the quality of the model is data, not doctrine.  Note that
n1 - n2 = 2r(a + b + r) exactly, with n2 the norm at the near corner.

Clipping the far side of a search disk's forward quadrant to the boundary
ray leaves about 0.7 r**2 of considered area, so the per-point prime
probability there is modeled as 0.7/ln(n1).  The area error term of the
circle problem is kept separate rather than summed into the probability
(the two carry different units).

All functions are pure and safe for concurrent use.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import NORM_LIMIT, GaussInt, is_gaussian_prime
from .sieve import PrimeSet

#: Documented-only sharper circle-problem exponent (Huxley 2000); tests
#: assert Gauss's elementary bound, nothing stronger.
HUXLEY_EXPONENT = 131 / 208

#: Relative tolerance documented for comparing the float-valued outputs.
FLOAT_RTOL = 1e-9


@dataclass(frozen=True, slots=True)
class LatticeCount:
    """Exact disk lattice count with its area estimate and signed error."""

    radius: int
    exact: int
    estimate: float
    error: float


@dataclass(frozen=True, slots=True)
class DensityEstimate:
    """Model prediction vs exact count for the square [a, a+r] x [b, b+r]."""

    a: int
    b: int
    r: int
    n1: int
    n2: int
    predicted: float
    empirical: int


@dataclass(frozen=True, slots=True)
class AnnulusBand:
    band: int
    inner_radius: float
    outer_radius: float
    lattice: int
    primes: int
    density: float


def gauss_error_bound(radius: int) -> float:
    """Gauss's proved bound on |N(r) - pi r**2|."""
    return 2 * math.sqrt(2) * math.pi * radius


def lattice_count_disk(radius: int) -> LatticeCount:
    """Count integer points (x, y) with x**2 + y**2 <= radius**2, exactly.

    All four quadrants, axes and origin included; one isqrt per column.
    """
    if radius < 1:
        raise ValueError(f"radius must be a positive integer, got {radius}")
    if radius * radius > NORM_LIMIT:
        raise OverflowError(f"radius {radius} squared is beyond the supported bound 2**62")
    rr = radius * radius
    exact = sum(2 * math.isqrt(rr - x * x) + 1 for x in range(-radius, radius + 1))
    estimate = math.pi * rr
    return LatticeCount(radius, exact, estimate, exact - estimate)


def expected_primes_square(a: int, b: int, r: int) -> DensityEstimate:
    """Density-model prime count for a square vs the exact count.

    predicted = 2r(a + b + r)/ln(n1); empirical counts the first-quadrant
    Gaussian primes in the closed square via the primality predicate.
    """
    if a < 0 or b < 0:
        raise ValueError("square corner must lie in the first quadrant")
    if a == 0 and b == 0:
        raise ValueError("degenerate corner (0, 0): n2 = 0 has no logarithm")
    if r < 1:
        raise ValueError(f"side must be a positive integer, got {r}")
    n1 = (a + r) ** 2 + (b + r) ** 2
    n2 = a * a + b * b
    predicted = 2 * r * (a + b + r) / math.log(n1)
    empirical = sum(
        1
        for x in range(a, a + r + 1)
        for y in range(b, b + r + 1)
        if is_gaussian_prime(GaussInt(x, y))
    )
    return DensityEstimate(a, b, r, n1, n2, predicted, empirical)


def considered_area_probability(n1: int, radius: int) -> float:
    """Per-lattice-point prime probability 0.7/ln(n1) for the clipped region.

    The companion considered area is 0.7 * radius**2; radius is accepted so
    reports can print both sides together.
    """
    if n1 < 2:
        raise ValueError(f"n1 must be >= 2, got {n1}")
    if radius < 1:
        raise ValueError(f"radius must be a positive integer, got {radius}")
    return 0.7 / math.log(n1)


def considered_area(radius: int) -> float:
    """The clipped forward-quadrant search area, 0.7 * radius**2."""
    return 0.7 * radius * radius


def _band_index(n: int, norm_max: int, bands: int) -> int:
    """Band k (1-based) holding norm n: smallest k with n * bands**2 <= k**2 * norm_max."""
    t = n * bands * bands
    k = math.isqrt(t // norm_max)
    while k * k * norm_max < t:
        k += 1
    return max(1, k)


def annulus_density_profile(prime_set: PrimeSet, bands: int) -> list[AnnulusBand]:
    """Split moduli [0, sqrt(norm_max)] into equal annuli and profile each.

    Per band: exact first-octant lattice count (a >= b >= 0), the set's
    prime count, and their ratio (0 for empty bands).  Band membership is
    decided by exact integer comparison of squared radii.
    """
    if bands < 1:
        raise ValueError(f"bands must be >= 1, got {bands}")
    nmax = prime_set.norm_max
    lattice = [0] * (bands + 1)
    for a in range(0, math.isqrt(nmax) + 1):
        aa = a * a
        for b in range(0, min(a, math.isqrt(nmax - aa)) + 1):
            lattice[_band_index(aa + b * b, nmax, bands)] += 1
    primes = [0] * (bands + 1)
    for z in prime_set:
        primes[_band_index(z.a * z.a + z.b * z.b, nmax, bands)] += 1
    root = math.sqrt(nmax)
    return [
        AnnulusBand(
            band=k,
            inner_radius=(k - 1) * root / bands,
            outer_radius=k * root / bands,
            lattice=lattice[k],
            primes=primes[k],
            density=(primes[k] / lattice[k]) if lattice[k] else 0.0,
        )
        for k in range(1, bands + 1)
    ]


def profile_to_csv(bands: list[AnnulusBand]) -> str:
    rows = ["band,inner_radius,outer_radius,lattice,primes,density"]
    rows.extend(
        f"{b.band},{b.inner_radius:.6f},{b.outer_radius:.6f},{b.lattice},{b.primes},{b.density:.6f}"
        for b in bands
    )
    return "\n".join(rows) + "\n"


def three_square_eligible(n: int) -> bool:
    """True iff n is a sum of three integer squares.

    By Legendre's criterion that means n is not of the form 4**a (8b + 7):
    strip factors of four, then test the residue mod 8.
    """
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    while n % 4 == 0:
        n //= 4
    return n % 8 != 7

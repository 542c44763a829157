"""First-octant Gaussian prime enumeration up to a norm bound.

The sieve walks the horizontal lines y = b of the first octant (a >= b >= 1)
and keeps the points whose norm a**2 + b**2 is a rational prime; axis primes
(p, 0) with p = 3 mod 4 are appended only on request, since moat and walk
analyses usually exclude them.  Results are exact and complete: at small
scale they are verified against a pointwise primality filter.

Rational primality is answered by a plain Eratosthenes table when the bound
is small enough to sit comfortably in memory, and by the deterministic
Miller-Rabin test otherwise; both are exact, so the choice is invisible.

A PrimeSet is immutable after construction and safe for concurrent readers.
"""

from __future__ import annotations

import hashlib
import math
import os
from bisect import bisect_right
from dataclasses import dataclass
from pathlib import Path as FsPath
from typing import TYPE_CHECKING, Iterator

from .core import NORM_LIMIT, GaussInt, is_rational_prime, sort_key

if TYPE_CHECKING:  # pragma: no cover
    from .walker import Path

# Below this bound an Eratosthenes byte table (norm_max + 1 bytes) is cheaper
# than per-point Miller-Rabin.
_TABLE_CUTOFF = 10**7

CSV_HEADER = "a,b,norm"


@dataclass(frozen=True)
class PrimeSet:
    """Sorted, deduplicated first-octant Gaussian primes with norm <= norm_max.

    primes are ordered by (norm, a, b); every member has a >= b >= 0, and
    b == 0 only when include_axes is set.
    """

    norm_max: int
    include_axes: bool
    primes: tuple[GaussInt, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "_norms", tuple(z.a * z.a + z.b * z.b for z in self.primes))
        object.__setattr__(self, "_members", frozenset(self.primes))

    def __len__(self) -> int:
        return len(self.primes)

    def __iter__(self) -> Iterator[GaussInt]:
        return iter(self.primes)

    def __contains__(self, z: object) -> bool:
        return z in self._members  # type: ignore[attr-defined]


def _prime_test(norm_max: int):
    """Return an exact is-prime callable for values up to norm_max."""
    if norm_max <= _TABLE_CUTOFF:
        table = bytearray([1]) * (norm_max + 1)
        table[0:2] = b"\x00\x00"
        for i in range(2, math.isqrt(norm_max) + 1):
            if table[i]:
                table[i * i :: i] = bytes(len(range(i * i, norm_max + 1, i)))
        return table.__getitem__
    return is_rational_prime


def sieve_octant(norm_max: int, include_axes: bool = False) -> PrimeSet:
    """Enumerate every first-octant Gaussian prime with norm <= norm_max.

    Interior points a >= b >= 1 are kept when a**2 + b**2 is prime; with
    include_axes, (p, 0) is added for every rational prime p = 3 mod 4 with
    p**2 <= norm_max.
    """
    if norm_max < 2:
        raise ValueError(f"norm_max must be >= 2, got {norm_max}")
    if norm_max > NORM_LIMIT:
        raise OverflowError(f"norm_max {norm_max} beyond the supported bound 2**62")
    isp = _prime_test(norm_max)
    found = []
    # line by line in b; on line y = b the octant runs from a = b outward
    for b in range(1, math.isqrt(norm_max // 2) + 1):
        bb = b * b
        for a in range(b, math.isqrt(norm_max - bb) + 1):
            if isp(a * a + bb):
                found.append(GaussInt(a, b))
    if include_axes:
        for p in range(3, math.isqrt(norm_max) + 1, 4):
            if isp(p):
                found.append(GaussInt(p, 0))
    found.sort(key=sort_key)
    return PrimeSet(norm_max, include_axes, tuple(found))


def count_in_disk(prime_set: PrimeSet, radius_squared: int) -> int:
    """Exact count of set members with norm <= radius_squared."""
    if radius_squared > prime_set.norm_max:
        raise ValueError(
            f"radius_squared {radius_squared} exceeds the sieved range {prime_set.norm_max}"
        )
    return bisect_right(prime_set._norms, radius_squared)  # type: ignore[attr-defined]


def count_per_slice(paths: list["Path"]) -> list[tuple[int, int]]:
    """Member count per walk path, absorbed orphans included."""
    return [(p.index, len(p.members)) for p in paths]


# ---------------------------------------------------------------------------
# CSV interface: header "a,b,norm", one row per prime in set order, LF ends.


def format_csv(prime_set: PrimeSet) -> str:
    rows = [CSV_HEADER]
    rows.extend(f"{z.a},{z.b},{z.a * z.a + z.b * z.b}" for z in prime_set)
    return "\n".join(rows) + "\n"


def parse_csv(text: str) -> list[GaussInt]:
    """Parse the sieve CSV format, validating every row.

    Raises ValueError naming the first offending line or field.
    """
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines or lines[0] != CSV_HEADER:
        raise ValueError(f"line 1: expected header '{CSV_HEADER}'")
    out = []
    for i, line in enumerate(lines[1:], start=2):
        parts = line.split(",")
        if len(parts) != 3:
            raise ValueError(f"line {i}: expected 3 fields, got {len(parts)}")
        try:
            a, b, n = (int(p) for p in parts)
        except ValueError:
            raise ValueError(f"line {i}: non-integer field in '{line}'") from None
        if a * a + b * b != n:
            raise ValueError(f"line {i}: norm field {n} is not {a}**2 + {b}**2")
        out.append(GaussInt(a, b))
    return out


# ---------------------------------------------------------------------------
# Optional on-disk cache.  Files are keyed by (norm_max, include_axes) via
# the file name and carry one checksum line ahead of the standard CSV body;
# a load with a stale or truncated body fails loudly instead of returning
# wrong primes.


def cache_file(cache_dir: str | os.PathLike, norm_max: int, include_axes: bool) -> FsPath:
    suffix = "axes" if include_axes else "interior"
    return FsPath(cache_dir) / f"gprimes_{norm_max}_{suffix}.csv"


def save_cache(prime_set: PrimeSet, cache_dir: str | os.PathLike) -> FsPath:
    path = cache_file(cache_dir, prime_set.norm_max, prime_set.include_axes)
    path.parent.mkdir(parents=True, exist_ok=True)
    body = format_csv(prime_set)
    digest = hashlib.sha256(body.encode()).hexdigest()
    path.write_text(f"# sha256={digest}\n{body}", newline="\n")
    return path


def load_cache(
    cache_dir: str | os.PathLike, norm_max: int, include_axes: bool
) -> PrimeSet | None:
    """Reload a cached sieve, or None when no cache file exists."""
    path = cache_file(cache_dir, norm_max, include_axes)
    if not path.exists():
        return None
    text = path.read_text()
    head, _, body = text.partition("\n")
    if not head.startswith("# sha256="):
        raise ValueError(f"{path}: missing checksum line")
    if hashlib.sha256(body.encode()).hexdigest() != head.removeprefix("# sha256="):
        raise ValueError(f"{path}: checksum mismatch, cache is corrupt")
    return PrimeSet(norm_max, include_axes, tuple(parse_csv(body)))


def sieve_octant_cached(
    norm_max: int, include_axes: bool = False, cache_dir: str | os.PathLike | None = None
) -> PrimeSet:
    """sieve_octant with a transparent file cache when cache_dir is given."""
    if cache_dir is not None:
        cached = load_cache(cache_dir, norm_max, include_axes)
        if cached is not None:
            return cached
    result = sieve_octant(norm_max, include_axes)
    if cache_dir is not None:
        save_cache(result, cache_dir)
    return result

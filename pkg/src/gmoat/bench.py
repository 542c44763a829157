"""Candidate-check counters for the three search strategies.

"Time" is modeled as the number of primality checks issued (the unit cost
of classifying one lattice point), not wall-clock; the wall_ns field is
informational only and never asserted.  Counting one check per distinct
lattice point examined makes every counter deterministic and reproducible.

Methods:

* exhaustive: classify every first-quadrant interior point (x, y >= 1) with
  x**2 + y**2 <= norm_max.
* gww_filter: the filtered variant that treats points whose two coordinates
  are both rational primes as pre-screened, so they cost no check.  That is
  a cost model of the filter as described, not the historical algorithm:
  taken literally the filter would also drop genuine primes such as 2 + 3i,
  so classification stays exact here and only the counter is reduced.
* walker: the checks a path walk would issue, i.e. every distinct lattice
  point inside some search disk's forward region (bounded by the walk's
  ray, the disk, and the sieve range), including the final empty searches
  that ring against the horizon.  Points rescanned by ring expansions or
  later paths are memoized, hence counted once.

All three classifications must land on the identical prime set; run_bench
verifies that on every run and refuses to return a result built from a
diverging search.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from fractions import Fraction

from .core import GaussInt, is_rational_prime
from .sieve import PrimeSet, sieve_octant
from .walker import Path, walk_all

METHODS = ("exhaustive", "gww_filter", "walker")


@dataclass(frozen=True, slots=True)
class BenchResult:
    method: str
    norm_max: int
    checks: int
    wall_ns: int


def _fold_octant(x: int, y: int) -> GaussInt:
    return GaussInt(max(x, y), min(x, y))


def _quadrant_scan(norm_max: int, count_both_prime: bool) -> tuple[int, set[GaussInt]]:
    checks = 0
    found: set[GaussInt] = set()
    for x in range(1, math.isqrt(norm_max) + 1):
        xx = x * x
        x_prime = is_rational_prime(x)
        for y in range(1, math.isqrt(norm_max - xx) + 1):
            if count_both_prime or not (x_prime and is_rational_prime(y)):
                checks += 1
            if is_rational_prime(xx + y * y):
                found.add(_fold_octant(x, y))
    return checks, found


def _disk_region_points(
    center: GaussInt,
    radius: int,
    num: int,
    den: int,
    norm_max: int,
    scanned: set[GaussInt],
) -> None:
    rr = radius * radius
    for x in range(center.a, center.a + radius + 1):
        dx = x - center.a
        xx = x * x
        if xx > norm_max:
            break
        for y in range(center.b, center.b + radius + 1):
            if x == center.a and y == center.b:
                continue
            dy = y - center.b
            if dx * dx + dy * dy > rr:
                break
            if y * den < x * num and xx + y * y <= norm_max:
                scanned.add(GaussInt(x, y))


def _walker_scan(norm_max: int, c: float | Fraction) -> tuple[int, set[GaussInt], list[Path]]:
    prime_set = sieve_octant(norm_max, include_axes=False)
    paths = walk_all(prime_set, c)
    scanned: set[GaussInt] = set()
    for path in paths:
        num, den = path.bound.slope_num, path.bound.slope_den
        for disk in path.disks:
            _disk_region_points(disk.center, disk.radius, num, den, norm_max, scanned)
        if path.terminal_disk is not None:
            _disk_region_points(
                path.terminal_disk.center,
                path.terminal_disk.radius,
                num,
                den,
                norm_max,
                scanned,
            )
    found = {z for path in paths for z in path.members}
    return len(scanned), found, paths


def run_bench(method: str, norm_max: int, c: float | Fraction = 1) -> BenchResult:
    """Run one instrumented search and return its deterministic check count.

    Raises ValueError for an unknown method; RuntimeError if the method's
    classification failed to match the sieve (which would mean the search
    strategy changed the results).
    """
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}, expected one of {METHODS}")
    if norm_max < 2:
        raise ValueError(f"norm_max must be >= 2, got {norm_max}")
    t0 = time.perf_counter_ns()
    if method == "exhaustive":
        checks, found = _quadrant_scan(norm_max, count_both_prime=True)
    elif method == "gww_filter":
        checks, found = _quadrant_scan(norm_max, count_both_prime=False)
    else:
        checks, found, _ = _walker_scan(norm_max, c)
    wall_ns = time.perf_counter_ns() - t0
    reference = set(sieve_octant(norm_max, include_axes=False))
    if found != reference:
        raise RuntimeError(
            f"method {method} produced a different prime set than the sieve "
            f"({len(found)} vs {len(reference)} members)"
        )
    return BenchResult(method, norm_max, checks, wall_ns)


def results_to_csv(results: list[BenchResult]) -> str:
    rows = ["method,norm_max,checks,wall_ns"]
    rows.extend(f"{r.method},{r.norm_max},{r.checks},{r.wall_ns}" for r in results)
    return "\n".join(rows) + "\n"

"""Path construction over the first octant of the Gaussian primes.

The walk partitions an octant prime set into ordered paths.  Each path hugs
a boundary ray from below:

* path 1 starts at (1, 1), the only prime on the diagonal, and is bounded by
  the diagonal ray itself (slope 1);
* from each prime the walker searches its forward quadrant (a and b both
  non-decreasing) inside a disk whose radius is the Cramer gap estimate
  ceil(c * ln(norm)**2), expanding the disk ring by ring while it stays
  inside the sieve horizon, and steps to the nearest prime strictly below
  the bounding ray;
* when a path ends, the ray through its member of least slope becomes the
  bound for the next path, so fitted slopes strictly decrease;
* primes that no path ever selects are absorbed afterwards into the path
  holding their nearest member, which keeps the union of paths an exact
  partition of the set.

Every geometric comparison (distances, line sidedness, the sieve-horizon
stop rule) is exact integer arithmetic; the only floating point is the log
inside the Cramer radius, whose output is an integer radius.

All tie-breaks are total, so identical inputs always produce identical
paths.  walk_all is sequential by nature (each ray depends on the previous
path); the returned structures are not mutated afterwards and may be shared
across threads.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .core import GaussInt, distance_sq, norm, sort_key
from .sieve import PrimeSet


class LineFitError(ValueError):
    """A fitted ray failed to slope strictly below its predecessor."""


@dataclass(frozen=True, slots=True)
class BoundaryLine:
    """Origin ray with exact rational slope slope_num / slope_den.

    Line 0 is the diagonal x = y; later lines are fitted under successive
    paths with strictly decreasing slopes.  Membership tests use exact
    cross-multiplication, never floats.
    """

    index: int
    slope_num: int
    slope_den: int

    @property
    def slope(self) -> Fraction:
        return Fraction(self.slope_num, self.slope_den)

    def strictly_below(self, z: GaussInt) -> bool:
        return z.b * self.slope_den < z.a * self.slope_num

    def contains(self, z: GaussInt) -> bool:
        return z.b * self.slope_den == z.a * self.slope_num

    def perpendicular_key(self, z: GaussInt) -> int:
        """Monotone proxy for the perpendicular distance from z to the ray.

        Comparable between points of the same line only (the common factor
        1 / sqrt(num**2 + den**2) is dropped).
        """
        return abs(z.a * self.slope_num - z.b * self.slope_den)

    def intersects_disk(self, center: GaussInt, radius: int) -> bool:
        """Exact test: does the disk |z - center| <= radius touch the ray?"""
        lhs = self.perpendicular_key(center) ** 2
        rhs = radius * radius * (self.slope_num**2 + self.slope_den**2)
        return lhs <= rhs


#: The diagonal x = y bounding the first path.
LINE_0 = BoundaryLine(0, 1, 1)


@dataclass(frozen=True, slots=True)
class SearchDisk:
    """Audit record of one disk search.

    radius is the final outer radius in force when the search resolved,
    always (ring_count + 1) times the base Cramer radius; ring_count says
    how many ring expansions were needed beyond the base disk.
    intersects_bound records whether the disk touched the bounding ray (a
    measured diagnostic, never assumed).
    """

    center: GaussInt
    radius: int
    ring_count: int
    intersects_bound: bool


@dataclass(slots=True)
class Path:
    """One walk path: ordered members plus the search trace that chose them.

    members lists primes in selection order; absorbed orphans, if any, are
    appended at the end and repeated in orphans_absorbed.  disks[i] is the
    search that selected members[i + 1]; terminal_disk is the final empty
    search that ran against the sieve horizon.  bound is the ray the path
    was searched under; line is the ray fitted beneath the path (None when
    the fit would be degenerate).
    """

    index: int
    bound: BoundaryLine
    members: list[GaussInt] = field(default_factory=list)
    disks: list[SearchDisk] = field(default_factory=list)
    orphans_absorbed: list[GaussInt] = field(default_factory=list)
    line: BoundaryLine | None = None
    terminal_disk: SearchDisk | None = None

    def selected_members(self) -> list[GaussInt]:
        """Members chosen by disk searches, i.e. without absorbed orphans."""
        n = len(self.members) - len(self.orphans_absorbed)
        return self.members[:n]


@dataclass(frozen=True, slots=True)
class CoverageReport:
    missing: tuple[GaussInt, ...]
    duplicated: tuple[GaussInt, ...]
    orphan_count: int

    @property
    def is_partition(self) -> bool:
        return not self.missing and not self.duplicated


def cramer_radius(p_norm: int, c: float | Fraction = 1) -> int:
    """Search radius ceil(c * ln(p_norm)**2), never below 1.

    The Cramer model bounds the gap to the next prime by O(ln(p)**2); c
    scales that estimate and defaults to 1.
    """
    if p_norm < 2:
        raise ValueError(f"p_norm must be >= 2, got {p_norm}")
    return max(1, math.ceil(float(c) * math.log(p_norm) ** 2))


def candidate_region(
    center: GaussInt,
    radius: int,
    bound: BoundaryLine,
    prime_set: PrimeSet,
    visited: set[GaussInt],
) -> list[GaussInt]:
    """Unvisited set members in the forward search region of center.

    The region is the closed disk of the given radius around center,
    restricted to the forward quadrant (a >= center.a, b >= center.b;
    points behind or below were reachable earlier) and strictly below the
    bounding ray.  Returned in (norm, a, b) order; may be empty.
    """
    rr = radius * radius
    out = [
        q
        for q in prime_set
        if q.a >= center.a
        and q.b >= center.b
        and q != center
        and q not in visited
        and distance_sq(q, center) <= rr
        and bound.strictly_below(q)
    ]
    out.sort(key=sort_key)
    return out


def select_next(
    candidates: list[GaussInt], center: GaussInt, bound: BoundaryLine
) -> GaussInt | None:
    """Nearest candidate to center; None when there are none.

    Distance ties prefer the point nearer the bounding ray (the walk is
    meant to hug its line); remaining ties fall back to (a, b) order so the
    choice is total.
    """
    if not candidates:
        return None
    return min(
        candidates,
        key=lambda q: (distance_sq(q, center), bound.perpendicular_key(q), q),
    )


def _beyond_horizon(center_norm: int, radius: int, norm_max: int, base: int) -> bool:
    """Exact test for sqrt(center_norm) + radius > sqrt(norm_max) + base.

    Once true, a disk of this radius would reach past the sieve boundary by
    more than one base radius, so an empty search can only mean the set ran
    out, not that a prime was missed.
    """
    d = radius - base
    if d < 0:
        return False
    if norm_max <= d * d:
        return True
    rhs = norm_max + d * d - center_norm
    if rhs < 0:
        return True
    return 4 * d * d * norm_max > rhs * rhs


def build_path(
    start: GaussInt,
    bound: BoundaryLine,
    prime_set: PrimeSet,
    visited: set[GaussInt],
    c: float | Fraction = 1,
    index: int = 1,
) -> Path:
    """Walk one path from start under the bounding ray.

    visited is read, not mutated; the caller owns the master visited set.
    Each step searches the Cramer disk of the current prime, expanding it by
    one base radius at a time while the expansion stays within the sieve
    horizon; the path ends when the horizon is reached with no candidate.
    """
    if start not in prime_set:
        raise ValueError(f"start {start} is not in the prime set")
    seen = set(visited)
    path = Path(index=index, bound=bound)
    path.members.append(start)
    seen.add(start)
    current = start
    while True:
        base = cramer_radius(norm(current), c)
        radius = base
        rings = 0
        chosen = None
        while True:
            candidates = candidate_region(current, radius, bound, prime_set, seen)
            chosen = select_next(candidates, current, bound)
            if chosen is not None:
                break
            expanded = radius + base
            if _beyond_horizon(norm(current), expanded, prime_set.norm_max, base):
                break
            radius = expanded
            rings += 1
        disk = SearchDisk(
            center=current,
            radius=radius,
            ring_count=rings,
            intersects_bound=bound.intersects_disk(current, radius),
        )
        if chosen is None:
            path.terminal_disk = disk
            return path
        path.disks.append(disk)
        path.members.append(chosen)
        seen.add(chosen)
        current = chosen


def fit_line(path: Path, previous: BoundaryLine | None = None) -> BoundaryLine:
    """Ray from the origin through the path member of least slope.

    Every member then lies on or above the ray.  When previous is given the
    new slope must be strictly smaller; a path whose flattest member sits on
    the previous line cannot bound a further path, which is reported as
    LineFitError.
    """
    if not path.members:
        raise ValueError("cannot fit a line beneath an empty path")
    flattest = min(path.members, key=lambda z: Fraction(z.b, z.a))
    slope = Fraction(flattest.b, flattest.a)
    if previous is not None and slope >= Fraction(previous.slope_num, previous.slope_den):
        raise LineFitError(
            f"member {flattest} gives slope {slope}, not strictly below "
            f"{previous.slope_num}/{previous.slope_den}"
        )
    return BoundaryLine(path.index, slope.numerator, slope.denominator)


def _eligible_start(z: GaussInt, bound: BoundaryLine) -> bool:
    # Strictly below the bound; on the diagonal bound only, the diagonal
    # prime itself is admitted as the designated start.
    return bound.strictly_below(z) or (bound.index == 0 and z.a == z.b)


def walk_all(prime_set: PrimeSet, c: float | Fraction = 1) -> list[Path]:
    """Partition the whole set into paths, then absorb leftovers.

    Paths start at the smallest-norm unvisited prime below the last fitted
    ray and are built until no further path can start.  Whatever remains
    unvisited is appended to the path holding its nearest member (ties:
    earlier path, then smaller member), recorded in orphans_absorbed, so the
    union of path members is exactly the prime set.

    Axis primes have no defined walk region; sieve without them first.
    """
    if any(z.b == 0 for z in prime_set):
        raise ValueError("walk requires an interior octant set; sieve with include_axes=False")
    visited: set[GaussInt] = set()
    paths: list[Path] = []
    bound = LINE_0
    while len(visited) < len(prime_set):
        starts = [z for z in prime_set if z not in visited and _eligible_start(z, bound)]
        if not starts:
            break
        start = min(starts, key=sort_key)
        path = build_path(start, bound, prime_set, visited, c, index=len(paths) + 1)
        visited.update(path.members)
        paths.append(path)
        try:
            path.line = fit_line(path, bound)
        except LineFitError:
            break  # no ray can bound a further path
        bound = path.line
    _absorb_orphans(paths, prime_set, visited)
    return paths


def _absorb_orphans(
    paths: list[Path], prime_set: PrimeSet, visited: set[GaussInt]
) -> None:
    orphans = sorted((z for z in prime_set if z not in visited), key=sort_key)
    for orphan in orphans:
        best: tuple[int, int, GaussInt] | None = None
        for i, path in enumerate(paths):
            for member in path.members:
                key = (distance_sq(orphan, member), i, member)
                if best is None or key < best:
                    best = key
        if best is None:  # no paths at all: orphan founds a bare path
            paths.append(Path(index=1, bound=LINE_0))
            best = (0, 0, orphan)
        paths[best[1]].members.append(orphan)
        paths[best[1]].orphans_absorbed.append(orphan)
        visited.add(orphan)


def verify_coverage(paths: list[Path], prime_set: PrimeSet) -> CoverageReport:
    """Check that the paths partition the set exactly."""
    seen: dict[GaussInt, int] = {}
    for path in paths:
        for z in path.members:
            seen[z] = seen.get(z, 0) + 1
    missing = tuple(sorted((z for z in prime_set if z not in seen), key=sort_key))
    duplicated = tuple(sorted((z for z, k in seen.items() if k > 1), key=sort_key))
    orphan_count = sum(len(p.orphans_absorbed) for p in paths)
    return CoverageReport(missing, duplicated, orphan_count)


# ---------------------------------------------------------------------------
# JSON interface: an array of path objects in walk order.


def paths_to_json(paths: list[Path]) -> str:
    records = []
    for p in paths:
        records.append(
            {
                "index": p.index,
                "members": [[z.a, z.b] for z in p.members],
                "orphans": [[z.a, z.b] for z in p.orphans_absorbed],
                "line": (
                    {"num": p.line.slope_num, "den": p.line.slope_den}
                    if p.line is not None
                    else None
                ),
            }
        )
    # one path object per line
    body = ",\n".join("  " + json.dumps(r, separators=(",", ":")) for r in records)
    return "[\n" + body + "\n]\n" if records else "[]\n"


def parse_paths_json(text: str) -> list[dict]:
    """Parse and validate the walk JSON export.

    Returns the raw records with members/orphans as GaussInt lists; raises
    ValueError naming the first offending path or field.
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"not valid JSON: {exc}") from None
    if not isinstance(data, list):
        raise ValueError("top level: expected an array of path objects")
    out = []
    for i, rec in enumerate(data):
        if not isinstance(rec, dict):
            raise ValueError(f"path {i}: expected an object")
        for key in ("index", "members", "orphans"):
            if key not in rec:
                raise ValueError(f"path {i}: missing field '{key}'")
        for key in ("members", "orphans"):
            pts = rec[key]
            if not isinstance(pts, list) or not all(
                isinstance(p, list)
                and len(p) == 2
                and all(isinstance(v, int) and not isinstance(v, bool) for v in p)
                for p in pts
            ):
                raise ValueError(f"path {i}: field '{key}' must be a list of [a, b] pairs")
        line = rec.get("line")
        if line is not None and (
            not isinstance(line, dict)
            or not isinstance(line.get("num"), int)
            or not isinstance(line.get("den"), int)
        ):
            raise ValueError(f"path {i}: field 'line' must be null or {{num, den}}")
        out.append(
            {
                "index": rec["index"],
                "members": [GaussInt(p[0], p[1]) for p in rec["members"]],
                "orphans": [GaussInt(p[0], p[1]) for p in rec["orphans"]],
                "line": line,
            }
        )
    return out

"""Moat measurement: crossing distances, step-bounded components, bottlenecks.

A moat is a prime-free separation: with steps bounded in length, the primes
split into connected components, and the moat width between two components
is the least distance a walker would have to jump to cross.  Everything is
measured on exact squared integer distances; no two distinct distances can
ever compare equal through rounding because no floats are involved.

Walks nominally live on the first octant, but a literal octant walk can
forbid crossings the quadrant allows (a route may dip through the mirror
image across x = y).  The reflect flag, on by default, therefore mirrors the
set across the diagonal before walking; switch it off to reproduce
octant-only tables.

Union-find uses union by size with path compression; neighbor candidates
come from a grid of cells whose side matches the step bound, so edge
generation stays near-linear in the number of primes.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .core import GaussInt, distance_sq, reflect, sort_key
from .sieve import PrimeSet


@dataclass(frozen=True)
class MoatReport:
    """Separation found at a squared step bound.

    Components are linked internally by steps of squared length strictly
    below threshold_sq; width_sq is the exact minimum squared crossing
    distance between left and right (0 when nothing is separated).  right
    is the component of the smallest member, i.e. the origin side; left is
    everything cut off from it.
    """

    norm_max: int
    threshold_sq: int
    width_sq: int
    left: tuple[GaussInt, ...]
    right: tuple[GaussInt, ...]
    components: tuple[tuple[GaussInt, ...], ...]


@dataclass(frozen=True)
class ExploreResult:
    component: tuple[GaussInt, ...]
    farthest: GaussInt
    certified_bounded: bool


class UnionFind:
    """Union by size with path compression over a fixed element universe."""

    def __init__(self, elements: Iterable[GaussInt]):
        self.parent = {e: e for e in elements}
        self.size = {e: 1 for e in self.parent}

    def find(self, x: GaussInt) -> GaussInt:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: GaussInt, y: GaussInt) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return
        if self.size[rx] < self.size[ry]:
            rx, ry = ry, rx
        self.parent[ry] = rx
        self.size[rx] += self.size[ry]


def _universe(points: Iterable[GaussInt], reflected: bool) -> list[GaussInt]:
    pts = set(points)
    if reflected:
        pts |= {reflect(z) for z in pts}
    return sorted(pts, key=sort_key)


def _cell_side(threshold_sq: int) -> int:
    side = math.isqrt(threshold_sq)
    return side + 1 if side * side < threshold_sq else side


def _edges_within(points: Sequence[GaussInt], threshold_sq: int):
    """Yield point pairs at squared distance <= threshold_sq, each once.

    Points are hashed into grid cells of side equal to the step bound, so
    each point only scans its 3 x 3 cell neighborhood.
    """
    if threshold_sq < 1:
        return
    side = _cell_side(threshold_sq)
    cells: dict[tuple[int, int], list[GaussInt]] = {}
    for z in points:
        cells.setdefault((z.a // side, z.b // side), []).append(z)
    for (ca, cb), bucket in cells.items():
        for da in (-1, 0, 1):
            for db in (-1, 0, 1):
                other = cells.get((ca + da, cb + db))
                if other is None:
                    continue
                for z in bucket:
                    kz = sort_key(z)
                    for w in other:
                        if kz < sort_key(w) and distance_sq(z, w) <= threshold_sq:
                            yield z, w


def _grouped(points: Sequence[GaussInt], uf: UnionFind) -> list[list[GaussInt]]:
    comps: dict[GaussInt, list[GaussInt]] = {}
    for z in points:
        comps.setdefault(uf.find(z), []).append(z)
    out = [sorted(c, key=sort_key) for c in comps.values()]
    out.sort(key=lambda c: sort_key(c[0]))
    return out


def min_crossing_distance_sq(A: Sequence[GaussInt], B: Sequence[GaussInt]) -> int:
    """Exact minimum squared distance over all pairs of the two sets."""
    if not A or not B:
        raise ValueError("both sets must be non-empty")
    if set(A) & set(B):
        raise ValueError(f"sets overlap on {sorted(set(A) & set(B), key=sort_key)}")
    return min(distance_sq(p, q) for p in A for q in B)


def components_at_threshold(
    prime_set: Iterable[GaussInt], threshold_sq: int, reflect_octant: bool = True
) -> list[list[GaussInt]]:
    """Connected components joining primes at squared distance <= threshold_sq.

    Deterministic: components are ordered by their smallest member and each
    is sorted by (norm, a, b).
    """
    points = _universe(prime_set, reflect_octant)
    uf = UnionFind(points)
    for z, w in _edges_within(points, threshold_sq):
        uf.union(z, w)
    return _grouped(points, uf)


def _connects(
    points: Sequence[GaussInt],
    threshold_sq: int,
    source: GaussInt,
    targets: Sequence[GaussInt],
) -> bool:
    uf = UnionFind(points)
    for z, w in _edges_within(points, threshold_sq):
        uf.union(z, w)
    root = uf.find(source)
    return any(uf.find(t) == root for t in targets)


def bottleneck_width_sq(
    prime_set: Iterable[GaussInt],
    source: GaussInt,
    target_norm: int,
    reflect_octant: bool = True,
) -> int:
    """Smallest squared step bound that joins source to a prime of norm >= target_norm.

    This is the minimax squared edge over all routes (the value Kruskal
    reaches when edges are united in increasing order until the target side
    connects); it is located here by doubling and then bisecting the
    threshold, which gives the same value with near-linear work per probe.
    """
    points = _universe(prime_set, reflect_octant)
    if source not in set(points):
        raise ValueError(f"source {source} is not in the prime set")
    targets = [z for z in points if z.a * z.a + z.b * z.b >= target_norm]
    if not targets:
        raise ValueError(f"no path: no member has norm >= {target_norm}")
    if source.a * source.a + source.b * source.b >= target_norm:
        return 0
    hi = 1
    while not _connects(points, hi, source, targets):
        hi *= 2
    lo = hi // 2 + 1 if hi > 1 else 1
    while lo < hi:
        mid = (lo + hi) // 2
        if _connects(points, mid, source, targets):
            hi = mid
        else:
            lo = mid + 1
    return hi


def explore_component(
    prime_set: PrimeSet,
    step_sq: int,
    source: GaussInt,
    reflect_octant: bool = True,
) -> ExploreResult:
    """Breadth-first component of source under steps of squared length <= step_sq.

    farthest is the member of maximum norm (ties go to the smaller (a, b)
    pair).  certified_bounded is true exactly when every member's modulus
    plus the step length stays within the sieve radius, so no prime beyond
    the sieved horizon could possibly extend the component.
    """
    universe = set(_universe(prime_set, reflect_octant))
    if source not in universe:
        raise ValueError(f"source {source} is not in the prime set")
    offsets = [
        (dx, dy)
        for dx in range(-math.isqrt(step_sq), math.isqrt(step_sq) + 1)
        for dy in range(-math.isqrt(step_sq), math.isqrt(step_sq) + 1)
        if (dx or dy) and dx * dx + dy * dy <= step_sq
    ]
    seen = {source}
    frontier = [source]
    while frontier:
        nxt = []
        for z in frontier:
            for dx, dy in offsets:
                q = GaussInt(z.a + dx, z.b + dy)
                if q in universe and q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    component = tuple(sorted(seen, key=sort_key))
    farthest = max(component, key=lambda z: (z.a * z.a + z.b * z.b, (-z.a, -z.b)))
    m = max(z.a * z.a + z.b * z.b for z in component)
    slack = prime_set.norm_max - m - step_sq
    certified = slack >= 0 and 4 * m * step_sq <= slack * slack
    return ExploreResult(component, farthest, certified)


def moat_report(
    prime_set: Iterable[GaussInt],
    threshold_sq: int,
    norm_max: int | None = None,
    reflect_octant: bool = True,
) -> MoatReport:
    """Separation report at a squared step bound.

    Components are built from steps strictly shorter than the bound, so a
    crossing at exactly the bound length is what the report measures: a
    width-w moat blocks every step shorter than w and is crossed by w
    itself.  With a single component the report carries width_sq 0 and an
    empty left side.
    """
    if threshold_sq < 1:
        raise ValueError(f"threshold_sq must be >= 1, got {threshold_sq}")
    if norm_max is None:
        norm_max = getattr(prime_set, "norm_max", None)
    points = _universe(prime_set, reflect_octant)
    if not points:
        raise ValueError("empty prime set")
    if norm_max is None:
        norm_max = max(z.a * z.a + z.b * z.b for z in points)
    uf = UnionFind(points)
    for z, w in _edges_within(points, threshold_sq - 1):
        uf.union(z, w)
    comps = _grouped(points, uf)
    right = next(c for c in comps if c[0] == points[0])
    left = sorted((z for c in comps if c is not right for z in c), key=sort_key)
    width_sq = min_crossing_distance_sq(left, right) if left else 0
    return MoatReport(
        norm_max=norm_max,
        threshold_sq=threshold_sq,
        width_sq=width_sq,
        left=tuple(left),
        right=tuple(right),
        components=tuple(tuple(c) for c in comps),
    )


def moat_report_from_paths(
    path_records: list[dict], reflect_octant: bool = True
) -> MoatReport:
    """Path-partition moat: bound steps by the longest selected walk step.

    Given exported walk paths, the walkable step bound is taken to be the
    maximum squared distance between consecutive selected members (absorbed
    orphans are appendices, not walk steps); the separation that survives
    that bound is the moat between the paths' clusters.
    """
    members: list[GaussInt] = []
    max_step = 0
    for rec in path_records:
        members.extend(rec["members"])
        orphans = set(rec["orphans"])
        selected = [z for z in rec["members"] if z not in orphans]
        for p, q in zip(selected, selected[1:]):
            max_step = max(max_step, distance_sq(p, q))
    if not members:
        raise ValueError("paths contain no members")
    if max_step == 0:
        max_step = 1
    return moat_report(members, max_step, reflect_octant=reflect_octant)


def report_to_json(report: MoatReport) -> str:
    fields = {
        "norm_max": report.norm_max,
        "threshold_sq": report.threshold_sq,
        "width_sq": report.width_sq,
        "left": [[z.a, z.b] for z in report.left],
        "right": [[z.a, z.b] for z in report.right],
        "components": [[[z.a, z.b] for z in c] for c in report.components],
    }
    body = ",\n".join(
        f'  "{k}": {json.dumps(v, separators=(",", ":"))}' for k, v in fields.items()
    )
    return "{\n" + body + "\n}\n"


def parse_moat_json(text: str) -> dict:
    """Parse and validate the moat JSON report; ValueError names the fault."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"not valid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise ValueError("top level: expected a moat report object")
    for key in ("norm_max", "threshold_sq", "width_sq", "left", "right", "components"):
        if key not in data:
            raise ValueError(f"missing field '{key}'")
    def pts(name, raw):
        if not isinstance(raw, list) or not all(
            isinstance(p, list) and len(p) == 2 and all(isinstance(v, int) for v in p)
            for p in raw
        ):
            raise ValueError(f"field '{name}' must be a list of [a, b] pairs")
        return [GaussInt(p[0], p[1]) for p in raw]

    comps = data["components"]
    if not isinstance(comps, list):
        raise ValueError("field 'components' must be a list")
    return {
        "norm_max": data["norm_max"],
        "threshold_sq": data["threshold_sq"],
        "width_sq": data["width_sq"],
        "left": pts("left", data["left"]),
        "right": pts("right", data["right"]),
        "components": [pts(f"components[{i}]", c) for i, c in enumerate(comps)],
    }

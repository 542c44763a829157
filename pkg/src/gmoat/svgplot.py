"""SVG rendering of prime sets, walk paths, and moat reports.

SVG keeps the geometry exact and the output diffable: two renders of the
same report are byte-identical apart from the generator comment line, which
tests strip before comparing.  The coordinate system is mathematical (y
grows upward); the scale is 16 px per lattice unit at norm bound 100 and
shrinks proportionally (160 / sqrt(norm_max)) for larger bounds.
"""

from __future__ import annotations

import math

from .core import GaussInt

from . import __version__

GENERATOR_COMMENT_PREFIX = "<!-- generator:"

_MARGIN = 24.0
_PATH_COLORS = ("#1f77b4", "#ff7f0e", "#2ca02c", "#9467bd", "#8c564b", "#17becf")
_LEFT_FILL = "#d62728"
_RIGHT_FILL = "#1f77b4"
_DOT_FILL = "#333333"


def _fmt(v: float) -> str:
    return f"{v:.2f}"


class _Canvas:
    def __init__(self, extent: int, norm_max: int | None):
        self.extent = max(extent, 1)
        if norm_max is None:
            norm_max = self.extent * self.extent
        self.px = min(16.0, 160.0 / math.sqrt(max(norm_max, 1)))
        self.size = self.extent * self.px + 2 * _MARGIN
        self.dot_r = max(1.6, self.px * 0.22)
        self.parts: list[str] = []

    def x(self, v: float) -> float:
        return _MARGIN + v * self.px

    def y(self, v: float) -> float:
        return self.size - _MARGIN - v * self.px

    def line(self, x1, y1, x2, y2, stroke, width="1", dash=None) -> None:
        dash_attr = f' stroke-dasharray="{dash}"' if dash else ""
        self.parts.append(
            f'<line x1="{_fmt(self.x(x1))}" y1="{_fmt(self.y(y1))}" '
            f'x2="{_fmt(self.x(x2))}" y2="{_fmt(self.y(y2))}" '
            f'stroke="{stroke}" stroke-width="{width}"{dash_attr} />'
        )

    def polyline(self, pts: list[GaussInt], stroke: str) -> None:
        coords = " ".join(f"{_fmt(self.x(p.a))},{_fmt(self.y(p.b))}" for p in pts)
        self.parts.append(
            f'<polyline points="{coords}" fill="none" stroke="{stroke}" stroke-width="1.5" />'
        )

    def dot(self, p: GaussInt, fill: str) -> None:
        self.parts.append(
            f'<circle cx="{_fmt(self.x(p.a))}" cy="{_fmt(self.y(p.b))}" '
            f'r="{_fmt(self.dot_r)}" fill="{fill}" />'
        )

    def axes(self) -> None:
        self.line(0, 0, self.extent, 0, "#000000", width="1.5")
        self.line(0, 0, 0, self.extent, "#000000", width="1.5")

    def ray(self, num: int, den: int) -> None:
        # slope <= 1 rays leave the canvas through the right edge
        self.line(0, 0, self.extent, self.extent * num / den, "#999999", dash="4 3")

    def render(self) -> str:
        size = _fmt(self.size)
        head = [
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
            f'viewBox="0 0 {size} {size}">',
            f"{GENERATOR_COMMENT_PREFIX} gmoat {__version__} -->",
            f'<rect width="{size}" height="{size}" fill="#ffffff" />',
        ]
        return "\n".join(head + self.parts + ["</svg>"]) + "\n"


def _extent(points: list[GaussInt], norm_max: int | None) -> int:
    ext = max((max(p.a, p.b) for p in points), default=0)
    if norm_max is not None:
        ext = max(ext, math.isqrt(norm_max))
    return max(ext, 10)


def render_points(points: list[GaussInt], norm_max: int | None = None) -> str:
    """Prime dots over plain axes (the sieve picture)."""
    canvas = _Canvas(_extent(points, norm_max), norm_max)
    canvas.axes()
    for p in points:
        canvas.dot(p, _DOT_FILL)
    return canvas.render()


def render_walk(path_records: list[dict], norm_max: int | None = None) -> str:
    """Paths as polylines in selection order, with their boundary rays.

    Expects records shaped like the walk JSON export (see
    walker.parse_paths_json); the diagonal bound of the first path is drawn
    alongside every fitted ray.
    """
    members = [p for rec in path_records for p in rec["members"]]
    canvas = _Canvas(_extent(members, norm_max), norm_max)
    canvas.axes()
    canvas.ray(1, 1)
    for rec in path_records:
        line = rec.get("line")
        if line:
            canvas.ray(line["num"], line["den"])
    for i, rec in enumerate(path_records):
        if rec["members"]:
            canvas.polyline(rec["members"], _PATH_COLORS[i % len(_PATH_COLORS)])
    for p in members:
        canvas.dot(p, _DOT_FILL)
    return canvas.render()


def render_moat(report: dict, norm_max: int | None = None) -> str:
    """Left and right moat sides in two fills (the separation picture)."""
    left = report["left"]
    right = report["right"]
    if norm_max is None:
        norm_max = report.get("norm_max")
    canvas = _Canvas(_extent(left + right, norm_max), norm_max)
    canvas.axes()
    for p in right:
        canvas.dot(p, _RIGHT_FILL)
    for p in left:
        canvas.dot(p, _LEFT_FILL)
    return canvas.render()


def strip_generator_comment(svg: str) -> str:
    """Drop the version comment line so outputs can be compared byte-wise."""
    return "\n".join(
        line for line in svg.split("\n") if not line.startswith(GENERATOR_COMMENT_PREFIX)
    )

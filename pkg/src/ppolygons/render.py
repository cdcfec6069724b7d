"""Deterministic SVG drawings of p-polygons and galleries of them.

Vertex 0 sits at the top of the circle and indices increase clockwise on
screen, so the mirror pair ``k, p-k`` share a y coordinate and the axis through
vertex 0 is vertical. All coordinates are written with two decimals.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import (
    OrderLike,
    PolygonError,
    SymmetryClass,
    VertexCycle,
    align_axis,
    as_order,
    axis_count,
    canonical_key,
    mirror_key,
    symmetry_class,
)

SVG_HEADER = '<?xml version="1.0" encoding="UTF-8"?>\n'


class EmptyGallery(PolygonError):
    pass


@dataclass(frozen=True)
class RenderStyle:
    size: int = 200
    vertex_radius: float = 4.0
    stroke_width: float = 2.0
    show_labels: bool = False
    show_axis: bool = False
    margin: float = 20.0

    def __post_init__(self) -> None:
        for name in ("size", "vertex_radius", "stroke_width", "margin"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")
        if 2 * self.margin >= self.size:
            raise ValueError("margin leaves no room for the circle")


def _fmt(x: float) -> str:
    s = f"{x:.2f}"
    return "0.00" if s == "-0.00" else s


def layout(p: OrderLike, k: int, style: RenderStyle = RenderStyle()) -> tuple[float, float]:
    """Canvas position of vertex ``k`` (y grows downwards)."""
    n = as_order(p).p
    if not 0 <= k < n:
        raise ValueError(f"vertex {k} out of range for p={n}")
    c = style.size / 2
    r = c - style.margin
    # compute the right-hand member of each mirror pair and reflect it, so the
    # pair is exactly symmetric in floating point
    j = min(k, n - k)
    angle = 2 * math.pi * j / n
    dx = r * math.sin(angle)
    y = c - r * math.cos(angle)
    return (c - dx if k > n - k else c + dx), y


def _figure(cycle: VertexCycle, style: RenderStyle) -> list[str]:
    p = cycle.order.p
    if style.show_axis:
        cycle = align_axis(cycle)
    pts = {k: layout(p, k, style) for k in range(p)}
    out = []
    if style.show_axis and axis_count(cycle) > 0:
        c = _fmt(style.size / 2)
        out.append(
            f'<line class="axis" x1="{c}" y1="{_fmt(style.margin / 2)}" x2="{c}" '
            f'y2="{_fmt(style.size - style.margin / 2)}" stroke="#999" '
            f'stroke-width="1" stroke-dasharray="4 3"/>'
        )
    points = " ".join(f"{_fmt(pts[v][0])},{_fmt(pts[v][1])}" for v in cycle.vertices)
    out.append(
        f'<polygon class="edges" points="{points}" fill="none" stroke="#1f3a93" '
        f'stroke-width="{_fmt(style.stroke_width)}" stroke-linejoin="round"/>'
    )
    for k in range(p):
        x, y = pts[k]
        out.append(f'<circle class="vertex" cx="{_fmt(x)}" cy="{_fmt(y)}" '
                   f'r="{_fmt(style.vertex_radius)}" fill="#000"/>')
    if style.show_labels:
        c = style.size / 2
        for k in range(p):
            x, y = pts[k]
            # push the label outward along the radius
            lx = x + (x - c) * 0.12
            ly = y + (y - c) * 0.12 + 4
            out.append(f'<text class="label" x="{_fmt(lx)}" y="{_fmt(ly)}" '
                       f'font-size="11" text-anchor="middle">{k}</text>')
    return out


def _svg(width: float, height: float, body: list[str]) -> str:
    head = (f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
            f'width="{_fmt(width)}" height="{_fmt(height)}" '
            f'viewBox="0 0 {_fmt(width)} {_fmt(height)}">')
    return SVG_HEADER + "\n".join([head, *body, "</svg>"]) + "\n"


def polygon_svg(cycle: VertexCycle, style: RenderStyle = RenderStyle()) -> str:
    return _svg(style.size, style.size, _figure(cycle, style))


def pair_mirrors(cycles: list[VertexCycle]) -> list[tuple[VertexCycle, bool]]:
    """Reorder so every asymmetric cycle is followed by its mirror, if present.

    Returns ``(cycle, pairs_with_previous)`` tuples.
    """
    remaining = list(cycles)
    keys = [canonical_key(c) for c in remaining]
    out: list[tuple[VertexCycle, bool]] = []
    taken = [False] * len(remaining)
    for i, cyc in enumerate(remaining):
        if taken[i]:
            continue
        taken[i] = True
        out.append((cyc, False))
        if symmetry_class(cyc) is not SymmetryClass.ASYMMETRIC:
            continue
        target = mirror_key(cyc)
        for j in range(i + 1, len(remaining)):
            if not taken[j] and keys[j] == target:
                taken[j] = True
                out.append((remaining[j], True))
                break
    return out


def gallery(cycles: list[VertexCycle], style: RenderStyle = RenderStyle(),
            columns: int = 4) -> str:
    """Grid of figures, row-major; mirror pairs sit side by side."""
    if not cycles:
        raise EmptyGallery("cannot draw an empty gallery")
    if columns < 1:
        raise ValueError("columns must be positive")
    placed = pair_mirrors(cycles)
    rows = -(-len(placed) // columns)
    cols = min(columns, len(placed))
    s = style.size
    body = []
    for idx, (cyc, paired) in enumerate(placed):
        row, col = divmod(idx, columns)
        x, y = col * s, row * s
        if paired and col > 0:
            body.append(f'<line class="pair-separator" x1="{_fmt(x)}" y1="{_fmt(y + s * 0.35)}" '
                        f'x2="{_fmt(x)}" y2="{_fmt(y + s * 0.65)}" stroke="#000" '
                        f'stroke-width="0.75"/>')
        body.append(f'<g class="figure" transform="translate({_fmt(x)},{_fmt(y)})">')
        body.extend("  " + line for line in _figure(cyc, style))
        body.append("</g>")
    return _svg(cols * s, rows * s, body)


def figure_filename(p: int, kind: str, index: int) -> str:
    return f"p{p}_{kind}_{index}.svg"

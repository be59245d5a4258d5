"""Static SVG pictures of planar sets and their gaps.

The picture is an 800 x 800 viewport with a small margin; coordinates are
scaled to fit the drawn content and the y axis points up.  Rendered floats
are capped at twelve significant digits, which is far below the pixel at
this size, so equal inputs always produce identical documents.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence

from .errors import DomainError
from .groups import RationalSpace
from .planar import AxisGap, RectGap
from .sets import FiniteSet

SIZE = 800
MARGIN = 48
POINT_RADIUS = 4.0

_POINT_STYLE = 'fill="#1d4ed8"'
_RECT_STYLE = 'fill="none" stroke="#dc2626" stroke-width="2"'
_STRIP_FILL = {"x": "#f59e0b", "y": "#10b981"}


def _fmt(value: float) -> str:
    return f"{value:.12g}"


def render_planar_svg(E: FiniteSet,
                      rects: Sequence[RectGap] = (),
                      strips: Sequence[AxisGap] = ()) -> str:
    """An SVG document showing the points of a planar set, optionally with
    rectangular gaps outlined and axis gaps as translucent strips."""
    if not isinstance(E.ctx, RationalSpace) or E.ctx.dim != 2:
        raise DomainError("SVG rendering needs a two-dimensional rational set")
    xs = [p[0] for p in E.elements]
    ys = [p[1] for p in E.elements]
    for g in rects:
        xs.extend((g.a, g.b))
        ys.extend((g.c, g.d))
    xmin, xmax = min(xs), max(xs)
    ymin, ymax = min(ys), max(ys)
    span_x = xmax - xmin or Fraction(1)
    span_y = ymax - ymin or Fraction(1)
    inner = SIZE - 2 * MARGIN

    def X(v: Fraction) -> float:
        return MARGIN + float((v - xmin) / span_x) * inner

    def Y(v: Fraction) -> float:
        return SIZE - MARGIN - float((v - ymin) / span_y) * inner

    parts: List[str] = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" '
        f'viewBox="0 0 {SIZE} {SIZE}">',
        f'<rect width="{SIZE}" height="{SIZE}" fill="#ffffff"/>',
    ]
    for strip in strips:
        fill = _STRIP_FILL.get(strip.axis, "#6b7280")
        if strip.axis == "x":
            x0, x1 = X(strip.lo), X(strip.hi)
            parts.append(
                f'<rect x="{_fmt(x0)}" y="{MARGIN}" '
                f'width="{_fmt(x1 - x0)}" height="{inner}" '
                f'fill="{fill}" opacity="0.15"/>')
        else:
            y1, y0 = Y(strip.lo), Y(strip.hi)
            parts.append(
                f'<rect x="{MARGIN}" y="{_fmt(y0)}" '
                f'width="{inner}" height="{_fmt(y1 - y0)}" '
                f'fill="{fill}" opacity="0.15"/>')
    for g in rects:
        x0, x1 = X(g.a), X(g.b)
        y1, y0 = Y(g.c), Y(g.d)
        parts.append(
            f'<rect x="{_fmt(x0)}" y="{_fmt(y0)}" '
            f'width="{_fmt(x1 - x0)}" height="{_fmt(y1 - y0)}" {_RECT_STYLE}/>')
    for p in E.elements:
        parts.append(
            f'<circle cx="{_fmt(X(p[0]))}" cy="{_fmt(Y(p[1]))}" '
            f'r="{POINT_RADIUS}" {_POINT_STYLE}/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"

"""
SVG pictures of coloured drawings.

Vertices are filled circles in their colour class, each edge is tinted by
blending its endpoint colours (red + green gives yellow), and every
crossing gets a dot at its exact intersection point. Output is a pure
function of the input: coordinates are written from exact rationals at a
fixed number of decimals, so the same drawing always renders to the same
bytes.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple, Union

from errors import UnsupportedShape
from geometry_core import Drawing, count_crossings, crossing_point, fraction_to_decimal
from hull_color import ColoredDrawing, color_by_hulls

logger = logging.getLogger(__name__)

PLACES = 6

DEFAULT_PALETTE: Dict[str, Tuple[int, int, int]] = {
    "red": (255, 0, 0),
    "green": (0, 255, 0),
    "blue": (0, 0, 255),
    "white": (255, 255, 255),
    "plain": (170, 170, 170),
    "crossing": (255, 255, 255),
    "background": (0, 0, 0),
}

SVG_HEADER = """<?xml version="1.0" encoding="UTF-8" standalone="no"?>
<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">
  <rect x="0" y="0" width="{w}" height="{h}" fill="{bg}"/>
"""

SVG_FOOTER = """</svg>
"""


@dataclass(frozen=True)
class RenderSpec:
    """Canvas and palette settings. Palette entries override the defaults by name."""

    palette: Dict[str, Tuple[int, int, int]] = field(default_factory=dict)
    width: int = 800
    margin: int = 20
    vertex_radius: int = 6
    crossing_radius: int = 2
    show_crossings: bool = True

    def colour(self, name: str) -> Tuple[int, int, int]:
        return tuple(self.palette.get(name, DEFAULT_PALETTE[name]))  # type: ignore[return-value]


def _rgb(c: Tuple[int, int, int]) -> str:
    return f"rgb({c[0]},{c[1]},{c[2]})"


def _blend(a: Tuple[int, int, int], b: Tuple[int, int, int]) -> Tuple[int, int, int]:
    return (max(a[0], b[0]), max(a[1], b[1]), max(a[2], b[2]))


class _Canvas:
    """Maps drawing coordinates onto the canvas, y pointing up."""

    def __init__(self, d: Drawing, spec: RenderSpec) -> None:
        xs = [p.x for p in d.points]
        ys = [p.y for p in d.points]
        self.min_x, self.max_y = min(xs), max(ys)
        span = max(max(xs) - self.min_x, self.max_y - min(ys), 1)
        inner = spec.width - 2 * spec.margin
        self.scale = Fraction(inner, span)
        self.margin = spec.margin
        self.width = spec.width
        self.height = int(self.margin * 2 + self.scale * (self.max_y - min(ys)))

    def x(self, value: Union[int, Fraction]) -> str:
        return fraction_to_decimal(self.margin + self.scale * (value - self.min_x), PLACES)

    def y(self, value: Union[int, Fraction]) -> str:
        return fraction_to_decimal(self.margin + self.scale * (self.max_y - value), PLACES)


def _line(canvas: _Canvas, p, q, colour: Tuple[int, int, int]) -> str:
    return (
        f'  <line class="edge" x1="{canvas.x(p.x)}" y1="{canvas.y(p.y)}" '
        f'x2="{canvas.x(q.x)}" y2="{canvas.y(q.y)}" stroke="{_rgb(colour)}" stroke-width="1"/>\n'
    )


def _dot(canvas: _Canvas, x, y, radius: int, colour: Tuple[int, int, int], css: str) -> str:
    return (
        f'  <circle class="{css}" cx="{canvas.x(x)}" cy="{canvas.y(y)}" r="{radius}" '
        f'fill="{_rgb(colour)}"/>\n'
    )


def render_svg(subject: Union[Drawing, ColoredDrawing], spec: Optional[RenderSpec] = None) -> bytes:
    """
    Render a drawing as an SVG document.

    A plain Drawing is coloured by its peel layers when possible and drawn
    in the neutral colour otherwise.

    Args:
        subject: Drawing or ColoredDrawing
        spec: Canvas settings (defaults when None)

    Returns:
        UTF-8 SVG bytes
    """
    spec = spec or RenderSpec()
    if isinstance(subject, ColoredDrawing):
        d, colours = subject.drawing, subject.colour
    else:
        d = subject
        try:
            colours = color_by_hulls(d).colour
        except UnsupportedShape as e:
            logger.info("rendering uncoloured: %s", e)
            colours = None

    def vertex_colour(i: int) -> Tuple[int, int, int]:
        return spec.colour(colours[i].value) if colours else spec.colour("plain")

    canvas = _Canvas(d, spec)
    parts: List[str] = [
        SVG_HEADER.format(w=canvas.width, h=canvas.height, bg=_rgb(spec.colour("background")))
    ]
    pts = d.points
    for a, b in d.edges():
        parts.append(_line(canvas, pts[a], pts[b], _blend(vertex_colour(a), vertex_colour(b))))
    if spec.show_crossings:
        for c in count_crossings(d):
            x, y = crossing_point(d, c)
            parts.append(_dot(canvas, x, y, spec.crossing_radius, spec.colour("crossing"), "crossing"))
    for i, p in enumerate(pts):
        parts.append(_dot(canvas, p.x, p.y, spec.vertex_radius, vertex_colour(i), "vertex"))
    parts.append(SVG_FOOTER)
    return "".join(parts).encode("utf-8")

"""
Seeded random drawings with a prescribed hull structure.

Every generator is a rejection sampler: it constructs a candidate from
nested triangles (inner points are drawn by barycentric weights inside
the enclosing polygon, then rounded to the integer grid), checks general
position and the peel profile exactly, and retries until the budget is
spent. The same seed always yields the same drawing.
"""
from __future__ import annotations

import logging
import math
from enum import Enum
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np

from errors import GeneralPositionViolation, GenerationBudgetExceeded
from geometry_core import Drawing, Point, count_crossings, point_in_triangle
from hull_color import color_by_hulls, peel_hulls
from kite_config import ConfigurationClass, classify_configuration

logger = logging.getLogger(__name__)

DEFAULT_BOX = 10_000
RETRY_BUDGET = 100_000

Triangle = Tuple[Point, Point, Point]


class K10Shape(Enum):
    """K10 families: nested K9 plus a white vertex, or triangle-triangle-quadrilateral."""

    WHITE_IN_GREEN = "whiteInGreen"
    WHITE_IN_BLUE = "whiteInBlue"
    TRI_TRI_QUAD = "tri-tri-quad"

    @classmethod
    def from_string(cls, text: str) -> "K10Shape":
        """
        Raises:
            ValueError: If text names no shape
        """
        wanted = "".join(ch for ch in text.lower() if ch.isalnum())
        for member in cls:
            if wanted == "".join(ch for ch in member.value.lower() if ch.isalnum()):
                return member
        raise ValueError(f"Invalid K10 shape: {text}. Must be one of {[m.value for m in cls]}")

    def __str__(self) -> str:
        return self.value


def _rng(seed: int) -> np.random.Generator:
    return np.random.default_rng(seed)


def _area2(t: Sequence[Point]) -> int:
    a, b, c = t
    return abs((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x))


def _random_triangle(rng: np.random.Generator, box: int) -> Triangle:
    # reject slivers so nested sampling has room
    while True:
        xy = rng.integers(-box, box + 1, size=(3, 2))
        tri = tuple(Point(int(x), int(y)) for x, y in xy)
        if _area2(tri) >= box * box:
            return tri  # type: ignore[return-value]


def _point_in(rng: np.random.Generator, tri: Sequence[Point]) -> Point:
    w = rng.dirichlet((1.0, 1.0, 1.0))
    x = w[0] * tri[0].x + w[1] * tri[1].x + w[2] * tri[2].x
    y = w[0] * tri[0].y + w[1] * tri[1].y + w[2] * tri[2].y
    return Point(int(round(x)), int(round(y)))


def _shrunk(rng: np.random.Generator, tri: Sequence[Point], low: float, high: float) -> List[Tuple[float, float]]:
    s = rng.uniform(low, high)
    cx = sum(p.x for p in tri) / 3.0
    cy = sum(p.y for p in tri) / 3.0
    return [(cx + s * (p.x - cx), cy + s * (p.y - cy)) for p in tri]


def _point_in_float(rng: np.random.Generator, tri: Sequence[Tuple[float, float]]) -> Point:
    w = rng.dirichlet((1.0, 1.0, 1.0))
    x = sum(w[i] * tri[i][0] for i in range(3))
    y = sum(w[i] * tri[i][1] for i in range(3))
    return Point(int(round(x)), int(round(y)))


def _inside_all(points: Sequence[Point], tri: Sequence[Point]) -> bool:
    return all(point_in_triangle(p, *tri) for p in points)


def _sample(
    seed: int,
    what: str,
    build: Callable[[np.random.Generator], Optional[Drawing]],
    budget: int,
) -> Drawing:
    rng = _rng(seed)
    for attempt in range(1, budget + 1):
        try:
            d = build(rng)
        except GeneralPositionViolation:
            continue
        if d is not None:
            if attempt > 1:
                logger.debug("%s seed=%d accepted after %d attempts", what, seed, attempt)
            return d
    logger.warning("%s seed=%d: no instance within %d attempts", what, seed, budget)
    raise GenerationBudgetExceeded(f"{what}: no instance within {budget} attempts", attempts=budget)


def _nested_k9_points(rng: np.random.Generator, box: int) -> Optional[List[Point]]:
    red = _random_triangle(rng, box)
    green = [_point_in(rng, red) for _ in range(3)]
    if not _inside_all(green, red) or _area2(green) == 0:
        return None
    blue = [_point_in(rng, green) for _ in range(3)]
    if not _inside_all(blue, green):
        return None
    return list(red) + green + blue


def generate_nested_k9(seed: int, box: int = DEFAULT_BOX, budget: int = RETRY_BUDGET) -> Drawing:
    """
    Nested-triangle K9: red outer (0-2), green (3-5), blue innermost (6-8).

    Raises:
        GenerationBudgetExceeded: If no instance is found within budget
    """

    def build(rng: np.random.Generator) -> Optional[Drawing]:
        pts = _nested_k9_points(rng, box)
        if pts is None:
            return None
        d = Drawing(tuple(pts))
        return d if peel_hulls(d).profile == (3, 3, 3) else None

    return _sample(seed, "nested K9", build, budget)


def generate_nested_k6(
    seed: int,
    config_class: Optional[ConfigurationClass] = None,
    box: int = DEFAULT_BOX,
    budget: int = RETRY_BUDGET,
) -> Drawing:
    """
    Nested-triangle K6 (outer 0-2, inner 3-5), optionally of a given class.

    The inner triangle is sampled inside a randomly shrunken copy of the
    outer one.

    Raises:
        GenerationBudgetExceeded: If no instance is found within budget
    """

    def build(rng: np.random.Generator) -> Optional[Drawing]:
        outer = _random_triangle(rng, box)
        region = _shrunk(rng, outer, 0.2, 0.95)
        inner = [_point_in_float(rng, region) for _ in range(3)]
        if not _inside_all(inner, outer):
            return None
        d = Drawing(tuple(outer) + tuple(inner))
        if peel_hulls(d).profile != (3, 3):
            return None
        if config_class is not None:
            if classify_configuration(color_by_hulls(d)).config_class is not config_class:
                return None
        return d

    label = f"nested K6 ({config_class})" if config_class else "nested K6"
    return _sample(seed, label, build, budget)


def generate_k10_shape(
    seed: int,
    shape: K10Shape,
    box: int = DEFAULT_BOX,
    budget: int = RETRY_BUDGET,
) -> Drawing:
    """
    K10 of a given family. For the white families the white vertex is index 9.

    Raises:
        GenerationBudgetExceeded: If no instance is found within budget
    """
    shape = K10Shape.from_string(shape) if isinstance(shape, str) else shape

    def build(rng: np.random.Generator) -> Optional[Drawing]:
        if shape is K10Shape.TRI_TRI_QUAD:
            red = _random_triangle(rng, box)
            green = [_point_in(rng, red) for _ in range(3)]
            if not _inside_all(green, red) or _area2(green) == 0:
                return None
            quad = [_point_in(rng, green) for _ in range(4)]
            if not _inside_all(quad, green):
                return None
            d = Drawing(tuple(red) + tuple(green) + tuple(quad))
            return d if peel_hulls(d).profile == (3, 3, 4) else None

        pts = _nested_k9_points(rng, box)
        if pts is None:
            return None
        green, blue = pts[3:6], pts[6:9]
        if shape is K10Shape.WHITE_IN_BLUE:
            white = _point_in(rng, blue)
            if not point_in_triangle(white, *blue):
                return None
        else:
            white = _point_in(rng, green)
            if not point_in_triangle(white, *green) or point_in_triangle(white, *blue):
                return None
        d = Drawing(tuple(pts) + (white,))
        if peel_hulls(Drawing(tuple(pts))).profile != (3, 3, 3):
            return None
        return d

    return _sample(seed, f"K10 {shape}", build, budget)


def generate_peel_shape(
    seed: int,
    profile: Sequence[int],
    box: int = DEFAULT_BOX,
    budget: int = RETRY_BUDGET,
) -> Drawing:
    """
    Drawing whose peel profile is exactly `profile`, with a triangular hull.

    Interior points are drawn uniformly from the outer triangle and the
    candidate is kept only if it peels as requested, e.g. (3, 4, 2),
    (3, 6) or (3, 5, 1).

    Raises:
        ValueError: If the profile does not start with a triangle
        GenerationBudgetExceeded: If no instance is found within budget
    """
    wanted = tuple(profile)
    if not wanted or wanted[0] != 3:
        raise ValueError(f"profile must start with the outer triangle: {list(wanted)}")
    interior = sum(wanted) - 3

    def build(rng: np.random.Generator) -> Optional[Drawing]:
        outer = _random_triangle(rng, box)
        inner = [_point_in(rng, outer) for _ in range(interior)]
        if not _inside_all(inner, outer):
            return None
        d = Drawing(tuple(outer) + tuple(inner))
        return d if peel_hulls(d).profile == wanted else None

    return _sample(seed, f"peel {list(wanted)}", build, budget)


def generate_optimal_k9(seed: int, budget: int = RETRY_BUDGET) -> Drawing:
    """
    Nested-triangle K9 with exactly 36 crossings.

    Three clusters of three points sit near the corners of a large
    triangle, each cluster strung along a line towards the centre with
    its middle point nudged sideways. Red takes the outer point of each
    cluster (0-2), green the middle (3-5), blue the inner (6-8).

    Raises:
        GenerationBudgetExceeded: If no instance is found within budget
    """

    def build(rng: np.random.Generator) -> Optional[Drawing]:
        cx, cy = (int(v) for v in rng.integers(-500, 501, size=2))
        phase = rng.uniform(0.0, 2.0 * math.pi)
        red: List[Point] = []
        green: List[Point] = []
        blue: List[Point] = []
        for k in range(3):
            angle = phase + 2.0 * math.pi * k / 3.0 + rng.uniform(-0.14, 0.14)
            dist = rng.uniform(900.0, 1100.0)
            hx, hy = cx + dist * math.cos(angle), cy + dist * math.sin(angle)
            inward = angle + math.pi + rng.uniform(-0.087, 0.087)
            ux, uy = math.cos(inward), math.sin(inward)
            delta = rng.uniform(80.0, 120.0)
            bulge = rng.uniform(5.0, 15.0) * (1 if rng.random() < 0.5 else -1)
            red.append(Point(int(round(hx - delta * ux)), int(round(hy - delta * uy))))
            green.append(Point(int(round(hx - bulge * uy)), int(round(hy + bulge * ux))))
            blue.append(Point(int(round(hx + delta * ux)), int(round(hy + delta * uy))))
        d = Drawing(tuple(red + green + blue))
        if peel_hulls(d).profile != (3, 3, 3) or count_crossings(d).count != 36:
            return None
        return d

    return _sample(seed, "optimal K9", build, budget)

"""
Kites and configurations of nested-triangle K6 drawings.

A kite is the fan of three edges from one outer vertex o to the inner
triangle. Seen from o the inner vertices appear in clockwise order
l, m, r; the kite is concave when m lies inside triangle (l, o, r) and
convex otherwise. The three kite shapes of a K6 give its configuration
class, which in turn fixes how many non-concentric crossings it has.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from functools import cmp_to_key
from typing import List, Tuple

from errors import GeneralPositionViolation, NotConcave, UnsupportedShape
from geometry_core import (
    Edge,
    Orientation,
    Point,
    PointLike,
    as_point,
    find_collinear_triple,
    in_sector,
    orientation,
    point_in_convex_polygon,
    point_in_triangle,
    segments_cross,
)
from hull_color import ColoredDrawing, convex_hull_indices

logger = logging.getLogger(__name__)


class KiteShape(Enum):
    CONCAVE = "concave"
    CONVEX = "convex"

    @property
    def letter(self) -> str:
        return "C" if self is KiteShape.CONCAVE else "V"

    def __str__(self) -> str:
        return self.value


class ConfigurationClass(Enum):
    """
    Configuration of a nested-triangle K6, named by its kite shapes.

    - CCC: three concave kites
    - UNARY_CCV: two concave kites sharing their middle vertex
    - BINARY_CCV: two concave kites with different middle vertices
    - CVV: one concave kite
    - VVV: three convex kites
    """

    CCC = "CCC"
    UNARY_CCV = "unary-CCV"
    BINARY_CCV = "binary-CCV"
    CVV = "CVV"
    VVV = "VVV"

    @classmethod
    def from_string(cls, text: str) -> "ConfigurationClass":
        """
        Convert a class name to a ConfigurationClass.

        Accepts 'CCC', 'unary-CCV', 'UnaryCCV', 'binary_ccv' and so on.

        Raises:
            ValueError: If text names no class
        """
        wanted = _normalise(text)
        for member in cls:
            if wanted in (_normalise(member.value), _normalise(member.name)):
                return member
        raise ValueError(
            f"Invalid configuration class: {text}. "
            f"Must be one of {[m.value for m in cls]}"
        )

    @property
    def non_concentric_count(self) -> int:
        """Non-concentric crossings every K6 of this class has."""
        return _NON_CONCENTRIC[self]

    def __str__(self) -> str:
        return self.value

    def description(self) -> str:
        descriptions = {
            ConfigurationClass.CCC: "three concave kites (concentric triangles)",
            ConfigurationClass.UNARY_CCV: "two concave kites with a shared middle vertex",
            ConfigurationClass.BINARY_CCV: "two concave kites with distinct middle vertices",
            ConfigurationClass.CVV: "one concave kite, two convex",
            ConfigurationClass.VVV: "three convex kites",
        }
        return descriptions[self]


def _normalise(text: str) -> str:
    return "".join(ch for ch in text.lower() if ch.isalnum())


_NON_CONCENTRIC = {
    ConfigurationClass.CCC: 0,
    ConfigurationClass.UNARY_CCV: 1,
    ConfigurationClass.BINARY_CCV: 1,
    ConfigurationClass.CVV: 2,
    ConfigurationClass.VVV: 3,
}


@dataclass(frozen=True)
class Kite:
    """Fan from outer vertex `origin` to inner vertices left, middle, right."""

    origin: int
    left: int
    middle: int
    right: int
    shape: KiteShape
    acute: bool

    @property
    def is_concave(self) -> bool:
        return self.shape is KiteShape.CONCAVE

    @property
    def labels(self) -> Tuple[int, int, int]:
        return (self.left, self.middle, self.right)

    @property
    def edges(self) -> Tuple[Edge, Edge, Edge]:
        o = self.origin
        return tuple(tuple(sorted((o, i))) for i in self.labels)  # type: ignore[return-value]

    @property
    def middle_edge(self) -> Edge:
        return tuple(sorted((self.origin, self.middle)))  # type: ignore[return-value]


@dataclass(frozen=True)
class KiteConfiguration:
    kites: Tuple[Kite, Kite, Kite]
    config_class: ConfigurationClass
    distinct_concave_middles: int

    @property
    def shapes(self) -> str:
        return "".join(k.shape.letter for k in self.kites)


def nested_k6_layers(cd: ColoredDrawing) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """
    Outer and inner triangles of a nested K6.

    Raises:
        UnsupportedShape: If cd is not a K6 peeling as [3, 3]
    """
    if cd.drawing.n != 6 or cd.hulls.profile != (3, 3):
        raise UnsupportedShape(
            f"expected a nested-triangle K6, got peel {list(cd.hulls.profile)}",
            profile=cd.hulls.profile,
        )
    return cd.hulls.layers[0], cd.hulls.layers[1]


def extract_kite(cd: ColoredDrawing, origin: int) -> Kite:
    """
    Kite of a nested K6 at an outer vertex.

    Raises:
        UnsupportedShape: If cd is not a nested K6 or origin is not an outer vertex
    """
    outer, inner = nested_k6_layers(cd)
    if origin not in outer:
        raise UnsupportedShape(f"vertex {origin} is not on the outer triangle")
    pts = cd.drawing.points
    o = pts[origin]

    def clockwise_first(a: int, b: int) -> int:
        return -1 if orientation(o, pts[a], pts[b]) == Orientation.CLOCKWISE else 1

    left, middle, right = sorted(inner, key=cmp_to_key(clockwise_first))
    l, m, r = pts[left], pts[middle], pts[right]
    shape = KiteShape.CONCAVE if point_in_triangle(m, l, o, r) else KiteShape.CONVEX
    acute = (l.x - o.x) * (r.x - o.x) + (l.y - o.y) * (r.y - o.y) > 0
    if not acute:
        logger.info("kite at vertex %d has a non-acute angle l-o-r; kept", origin)
    return Kite(origin, left, middle, right, shape, acute)


def classify_configuration(cd: ColoredDrawing) -> KiteConfiguration:
    """
    Classify a nested K6 by its three kites.

    Raises:
        UnsupportedShape: If cd is not a nested K6
    """
    outer, _ = nested_k6_layers(cd)
    kites = tuple(extract_kite(cd, o) for o in outer)
    concave = [k for k in kites if k.is_concave]
    middles = len({k.middle for k in concave})
    if len(concave) == 3:
        cls = ConfigurationClass.CCC
    elif len(concave) == 2:
        cls = ConfigurationClass.UNARY_CCV if middles == 1 else ConfigurationClass.BINARY_CCV
    elif len(concave) == 1:
        cls = ConfigurationClass.CVV
    else:
        cls = ConfigurationClass.VVV
    return KiteConfiguration(kites, cls, middles)  # type: ignore[arg-type]


def containment_quadrilateral(cd: ColoredDrawing, kite: Kite) -> Tuple[int, int, int, int]:
    """
    Quadrilateral (o, l, o', r) of kite edges enclosing a concave kite's middle.

    o' is the first outer vertex, in counter-clockwise order, on the far
    side of line l-r from o.

    Raises:
        NotConcave: If the kite is convex
    """
    if not kite.is_concave:
        raise NotConcave(f"kite at vertex {kite.origin} is convex")
    outer, _ = nested_k6_layers(cd)
    pts = cd.drawing.points
    l, r = pts[kite.left], pts[kite.right]
    near_side = orientation(l, r, pts[kite.origin])
    for candidate in outer:
        if candidate != kite.origin and orientation(l, r, pts[candidate]) != near_side:
            return (kite.origin, kite.left, candidate, kite.right)
    raise UnsupportedShape(f"no outer vertex beyond line {kite.left}-{kite.right}")


def quadrilateral_contains(
    cd: ColoredDrawing, quad: Tuple[int, int, int, int], p: PointLike
) -> bool:
    """Strict containment in (o, l, o', r), split along the diagonal l-r."""
    pts = cd.drawing.points
    o, l, o2, r = (pts[i] for i in quad)
    q = as_point(p)
    return point_in_triangle(q, o, l, r) or point_in_triangle(q, o2, l, r)


def kite_edges(cd: ColoredDrawing) -> List[Edge]:
    """All nine outer-to-inner edges of a nested K6."""
    outer, inner = nested_k6_layers(cd)
    return sorted(tuple(sorted((o, i))) for o in outer for i in inner)  # type: ignore[misc]


def kite_region_contains(cd: ColoredDrawing, kite: Kite, p: PointLike) -> bool:
    """Strict containment in the convex hull of a kite's four vertices."""
    pts = cd.drawing.points
    corners = [kite.origin, *kite.labels]
    hull = convex_hull_indices(pts, corners)
    return point_in_convex_polygon(as_point(p), [pts[i] for i in hull])


def kite_lemma_region_contains(cd: ColoredDrawing, kite: Kite, p: PointLike) -> bool:
    """
    Region behind a concave kite's middle vertex: inside the sector at o
    spanned by l and r and inside the sector at m spanned by l and r.
    """
    pts = cd.drawing.points
    q = as_point(p)
    o, l, m, r = pts[kite.origin], pts[kite.left], pts[kite.middle], pts[kite.right]
    return in_sector(o, l, r, q) and in_sector(m, l, r, q)


def ccc_region_contains(cd: ColoredDrawing, config: KiteConfiguration, p: PointLike) -> bool:
    """Intersection of the three kite sectors (o; l, r) of a configuration."""
    pts = cd.drawing.points
    q = as_point(p)
    return all(in_sector(pts[k.origin], pts[k.left], pts[k.right], q) for k in config.kites)


def _check_general_position(cd: ColoredDrawing, extra: List[Point]) -> None:
    pts = list(cd.drawing.points) + extra
    bad = find_collinear_triple(pts)
    if bad is not None:
        raise GeneralPositionViolation(
            f"point set with query points is not in general position at {bad}",
            triple=bad,
            points=[pts[i].as_tuple() for i in bad],
        )


def free_zone_contains(cd: ColoredDrawing, p: PointLike) -> bool:
    """
    True iff p sees all three inner vertices past the kite edges.

    The middle edges of convex kites are removed first; every remaining
    kite edge blocks sightlines.

    Raises:
        UnsupportedShape: If cd is not a nested K6
        GeneralPositionViolation: If p is collinear with two drawing vertices
    """
    _, inner = nested_k6_layers(cd)
    q = as_point(p)
    _check_general_position(cd, [q])
    pts = cd.drawing.points
    config = classify_configuration(cd)
    blocking: List[Edge] = []
    for kite in config.kites:
        for edge in kite.edges:
            if kite.shape is KiteShape.CONVEX and edge == kite.middle_edge:
                continue
            blocking.append(edge)
    for i in inner:
        for a, b in blocking:
            if i in (a, b):
                continue
            if segments_cross(q, pts[i], pts[a], pts[b]):
                return False
    return True

"""
Exact geometry for rectilinear drawings of complete graphs.

Points carry integer coordinates bounded by 10^6, so every orientation
determinant is an exact Python integer and no predicate ever rounds.
A Drawing is an indexed general-position point set; its edge set is
implicitly the complete graph on those points.

Performance:
- count_crossings: O(m^2) over the m = C(n,2) edges (fine for n in the hundreds)
- vertex_crossing_count: O(n^3) per vertex; reference for the batched search scoring
"""
from __future__ import annotations

import logging
import math
import operator
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import combinations
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from errors import (
    CoordinateBoundError,
    DegenerateSegmentError,
    GeneralPositionViolation,
    IndexOutOfRange,
)

logger = logging.getLogger(__name__)

# |x|, |y| bound; keeps the orientation determinant inside 64 signed bits
COORDINATE_BOUND = 10**6

Edge = Tuple[int, int]
PointLike = Union["Point", Tuple[int, int], Sequence[int]]


@dataclass(frozen=True, order=True)
class Point:
    """Integer planar point. Ordering is lexicographic on (x, y)."""

    x: int
    y: int

    def __post_init__(self) -> None:
        for name in ("x", "y"):
            raw = getattr(self, name)
            if isinstance(raw, bool):
                raise CoordinateBoundError(f"coordinate {name}={raw!r} is not an integer")
            try:
                value = operator.index(raw)
            except TypeError:
                raise CoordinateBoundError(f"coordinate {name}={raw!r} is not an integer") from None
            if abs(value) > COORDINATE_BOUND:
                raise CoordinateBoundError(
                    f"coordinate {name}={value} exceeds the bound {COORDINATE_BOUND}"
                )
            object.__setattr__(self, name, int(value))

    def as_tuple(self) -> Tuple[int, int]:
        return (self.x, self.y)

    def __str__(self) -> str:
        return f"({self.x},{self.y})"


def as_point(p: PointLike) -> Point:
    """Coerce a Point or an (x, y) pair to a Point."""
    if isinstance(p, Point):
        return p
    x, y = p
    return Point(x, y)


class Orientation(Enum):
    """Sign of the determinant (q-p) x (r-p)."""

    CLOCKWISE = -1
    COLLINEAR = 0
    COUNTER_CLOCKWISE = 1

    def __str__(self) -> str:
        return self.name.lower()


def _det(p: Point, q: Point, r: Point) -> int:
    return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)


def orientation(p: Point, q: Point, r: Point) -> Orientation:
    """
    Exact orientation of the ordered triple (p, q, r).

    Args:
        p, q, r: Points

    Returns:
        COUNTER_CLOCKWISE for a left turn, CLOCKWISE for a right turn,
        COLLINEAR otherwise
    """
    d = _det(p, q, r)
    if d > 0:
        return Orientation.COUNTER_CLOCKWISE
    if d < 0:
        return Orientation.CLOCKWISE
    return Orientation.COLLINEAR


def _proper_cross(a1: Point, a2: Point, b1: Point, b2: Point) -> bool:
    # caller guarantees four distinct points in general position
    d1 = _det(a1, a2, b1)
    d2 = _det(a1, a2, b2)
    if (d1 > 0) == (d2 > 0):
        return False
    d3 = _det(b1, b2, a1)
    d4 = _det(b1, b2, a2)
    return (d3 > 0) != (d4 > 0)


def segments_cross(a1: Point, a2: Point, b1: Point, b2: Point) -> bool:
    """
    Test whether the open interiors of segments (a1,a2) and (b1,b2) meet.

    Segments sharing an endpoint never cross.

    Raises:
        DegenerateSegmentError: If either segment has zero length
        GeneralPositionViolation: If an endpoint is collinear with the other segment
    """
    if a1 == a2 or b1 == b2:
        raise DegenerateSegmentError("segment endpoints coincide")
    if a1 == b1 or a1 == b2 or a2 == b1 or a2 == b2:
        return False
    d1 = _det(a1, a2, b1)
    d2 = _det(a1, a2, b2)
    d3 = _det(b1, b2, a1)
    d4 = _det(b1, b2, a2)
    if d1 == 0 or d2 == 0 or d3 == 0 or d4 == 0:
        raise GeneralPositionViolation(
            "segment endpoints are collinear",
            points=[a1.as_tuple(), a2.as_tuple(), b1.as_tuple(), b2.as_tuple()],
        )
    return (d1 > 0) != (d2 > 0) and (d3 > 0) != (d4 > 0)


def point_in_triangle(p: Point, a: Point, b: Point, c: Point) -> bool:
    """True iff p lies strictly inside triangle abc (either orientation)."""
    d1 = _det(a, b, p)
    d2 = _det(b, c, p)
    d3 = _det(c, a, p)
    return (d1 > 0 and d2 > 0 and d3 > 0) or (d1 < 0 and d2 < 0 and d3 < 0)


def point_in_convex_polygon(p: Point, polygon: Sequence[Point]) -> bool:
    """
    True iff p lies strictly inside a convex polygon.

    Args:
        p: Query point
        polygon: Vertices in cyclic order (clockwise or counter-clockwise)
    """
    k = len(polygon)
    if k < 3:
        return False
    signs = set()
    for i in range(k):
        d = _det(polygon[i], polygon[(i + 1) % k], p)
        if d == 0:
            return False
        signs.add(d > 0)
        if len(signs) > 1:
            return False
    return True


def in_sector(apex: Point, a: Point, b: Point, p: Point) -> bool:
    """
    True iff p lies strictly inside the convex angular sector at apex
    bounded by the rays apex->a and apex->b.
    """
    side_a = orientation(apex, a, b)
    side_b = orientation(apex, b, a)
    return orientation(apex, a, p) == side_a and orientation(apex, b, p) == side_b


def is_convex_quadruple(a: Point, b: Point, c: Point, d: Point) -> bool:
    """
    True iff four general-position points are in convex position.

    Such a 4-subset contributes exactly one crossing (its two diagonals);
    a 4-subset with a triangular hull contributes none.
    """
    return not (
        point_in_triangle(a, b, c, d)
        or point_in_triangle(b, a, c, d)
        or point_in_triangle(c, a, b, d)
        or point_in_triangle(d, a, b, c)
    )


def find_collinear_triple(points: Sequence[PointLike]) -> Optional[Tuple[int, ...]]:
    """
    Locate the first general-position violation.

    Returns:
        Index pair of the first duplicate point, else the first collinear
        index triple, else None
    """
    pts = [as_point(p) for p in points]
    seen: Dict[Point, int] = {}
    for i, p in enumerate(pts):
        if p in seen:
            return (seen[p], i)
        seen[p] = i
    for i, j, k in combinations(range(len(pts)), 3):
        if _det(pts[i], pts[j], pts[k]) == 0:
            return (i, j, k)
    return None


def is_general_position(points: Sequence[PointLike]) -> bool:
    """True iff all points are distinct and no three are collinear."""
    return find_collinear_triple(points) is None


@dataclass(frozen=True)
class Drawing:
    """
    Rectilinear drawing of K_n: an indexed point set in general position.

    Raises:
        GeneralPositionViolation: On duplicate points or a collinear triple
    """

    points: Tuple[Point, ...]

    def __post_init__(self) -> None:
        pts = tuple(as_point(p) for p in self.points)
        object.__setattr__(self, "points", pts)
        if len(pts) < 3:
            raise ValueError(f"a drawing needs at least 3 points, got {len(pts)}")
        bad = find_collinear_triple(pts)
        if bad is not None:
            coords = [pts[i].as_tuple() for i in bad]
            if len(bad) == 2:
                message = f"vertices {bad[0]} and {bad[1]} coincide at {pts[bad[0]]}"
            else:
                shown = ", ".join(str(pts[i]) for i in bad)
                message = f"vertices {bad} are collinear: {shown}"
            raise GeneralPositionViolation(message, triple=bad, points=coords)

    @classmethod
    def from_coordinates(cls, coordinates: Iterable[Sequence[int]]) -> "Drawing":
        return cls(tuple(Point(int(x), int(y)) for x, y in coordinates))

    @property
    def n(self) -> int:
        return len(self.points)

    def __len__(self) -> int:
        return len(self.points)

    def __getitem__(self, index: int) -> Point:
        return self.points[index]

    def check_index(self, v: int) -> int:
        if not 0 <= v < self.n:
            raise IndexOutOfRange(f"vertex {v} out of range for n={self.n}")
        return v

    def edges(self) -> List[Edge]:
        return list(combinations(range(self.n), 2))

    def coordinates(self) -> List[Tuple[int, int]]:
        return [p.as_tuple() for p in self.points]


@dataclass(frozen=True, order=True)
class Crossing:
    """Pair of vertex-disjoint edges whose interiors meet, in canonical order."""

    edge_a: Edge
    edge_b: Edge

    def __post_init__(self) -> None:
        if self.edge_a[0] >= self.edge_a[1] or self.edge_b[0] >= self.edge_b[1]:
            raise ValueError(f"edges must be sorted pairs: {self.edge_a}, {self.edge_b}")
        if not self.edge_a < self.edge_b:
            raise ValueError(f"crossing not in canonical order: {self.edge_a} x {self.edge_b}")
        if set(self.edge_a) & set(self.edge_b):
            raise ValueError(f"edges {self.edge_a} and {self.edge_b} share a vertex")

    @classmethod
    def of(cls, e1: Sequence[int], e2: Sequence[int]) -> "Crossing":
        a = tuple(sorted(e1))
        b = tuple(sorted(e2))
        return cls(min(a, b), max(a, b))

    @property
    def vertices(self) -> Tuple[int, int, int, int]:
        return (*self.edge_a, *self.edge_b)

    def __str__(self) -> str:
        return f"{self.edge_a[0]}-{self.edge_a[1]} x {self.edge_b[0]}-{self.edge_b[1]}"


@dataclass(frozen=True)
class CrossingSet:
    """All crossings of one drawing, canonically ordered and duplicate-free."""

    crossings: Tuple[Crossing, ...]

    @property
    def count(self) -> int:
        return len(self.crossings)

    def __len__(self) -> int:
        return len(self.crossings)

    def __iter__(self) -> Iterator[Crossing]:
        return iter(self.crossings)

    def __contains__(self, item: object) -> bool:
        return item in self.crossings

    def involving(self, v: int) -> int:
        """Number of crossings with v as an endpoint of either edge."""
        return sum(1 for c in self.crossings if v in c.vertices)


def count_crossings(d: Drawing) -> CrossingSet:
    """
    Enumerate every crossing of a drawing by scanning vertex-disjoint edge pairs.

    Args:
        d: Drawing (general position is enforced at construction)

    Returns:
        CrossingSet in lexicographic (edge_a, edge_b) order
    """
    pts = d.points
    edges = d.edges()
    found: List[Crossing] = []
    for i, (a, b) in enumerate(edges):
        pa, pb = pts[a], pts[b]
        for c, e in edges[i + 1:]:
            if c == a or c == b or e == a or e == b:
                continue
            if _proper_cross(pa, pb, pts[c], pts[e]):
                found.append(Crossing((a, b), (c, e)))
    return CrossingSet(tuple(found))


def responsibility(d: Drawing, v: int) -> int:
    """
    Crossings on edges incident to vertex v.

    Raises:
        IndexOutOfRange: If v is not a vertex of d
    """
    d.check_index(v)
    return count_crossings(d).involving(v)


def vertex_crossing_count(points: Sequence[Point], v: int) -> int:
    """
    Responsibility of v computed from its convex 4-subsets.

    Each convex 4-subset containing v holds exactly one crossing with v
    as an endpoint, so this equals responsibility() without building the
    crossing set.
    """
    pv = points[v]
    others = [p for i, p in enumerate(points) if i != v]
    total = 0
    for a, b, c in combinations(others, 3):
        if is_convex_quadruple(pv, a, b, c):
            total += 1
    return total


def convex_quadruple_count(points: Sequence[Point]) -> int:
    """Crossing count of a general-position point list via its 4-subsets."""
    return sum(1 for q in combinations(points, 4) if is_convex_quadruple(*q))


def crossing_point(d: Drawing, crossing: Crossing) -> Tuple[Fraction, Fraction]:
    """Exact rational intersection point of a crossing's two edges."""
    p1, p2 = d.points[crossing.edge_a[0]], d.points[crossing.edge_a[1]]
    p3, p4 = d.points[crossing.edge_b[0]], d.points[crossing.edge_b[1]]
    denom = (p2.x - p1.x) * (p4.y - p3.y) - (p2.y - p1.y) * (p4.x - p3.x)
    numer = (p3.x - p1.x) * (p4.y - p3.y) - (p3.y - p1.y) * (p4.x - p3.x)
    t = Fraction(numer, denom)
    return (p1.x + t * (p2.x - p1.x), p1.y + t * (p2.y - p1.y))


def without_vertex(d: Drawing, v: int) -> Drawing:
    """Drawing with vertex v removed; later indices shift down by one."""
    d.check_index(v)
    return Drawing(d.points[:v] + d.points[v + 1:])


def relabel(d: Drawing, permutation: Sequence[int]) -> Drawing:
    """
    Reindex a drawing: vertex i of the result is vertex permutation[i] of d.

    Raises:
        ValueError: If permutation is not a permutation of range(n)
    """
    if sorted(permutation) != list(range(d.n)):
        raise ValueError(f"not a permutation of 0..{d.n - 1}: {list(permutation)}")
    return Drawing(tuple(d.points[i] for i in permutation))


def affine_image(
    d: Drawing,
    matrix: Tuple[Tuple[int, int], Tuple[int, int]],
    offset: Tuple[int, int] = (0, 0),
) -> Drawing:
    """
    Image of d under p -> A p + t for an integer matrix with positive determinant.

    Raises:
        ValueError: If det(A) <= 0
        CoordinateBoundError: If an image point leaves the coordinate bound
    """
    (a, b), (c, e) = matrix
    if a * e - b * c <= 0:
        raise ValueError("affine map must preserve orientation (det > 0)")
    tx, ty = offset
    return Drawing(
        tuple(Point(a * p.x + b * p.y + tx, c * p.x + e * p.y + ty) for p in d.points)
    )


def fraction_to_decimal(value: Fraction, places: int) -> str:
    """
    Render an exact rational with a fixed number of decimal places.

    Rounds half away from zero, so the output is platform independent.
    """
    value = Fraction(value)
    scale = 10**places
    magnitude = abs(value) * scale
    rounded = math.floor(magnitude + Fraction(1, 2))
    sign = "-" if value < 0 and rounded != 0 else ""
    whole, frac = divmod(rounded, scale)
    if places == 0:
        return f"{sign}{whole}"
    return f"{sign}{whole}.{frac:0{places}d}"

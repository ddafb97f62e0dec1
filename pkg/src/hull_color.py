"""
Hull peeling and the red/green/blue(/white) colouring of nested drawings.

Peeling repeatedly takes the convex hull of the vertices that remain.
When the layers are nested triangles the outer one is coloured red, the
second green and the third blue; a tenth vertex sitting inside that
structure is white. Crossings are then labelled by the colours of their
four endpoints, e.g. rb x gg for a red-blue edge crossing a green-green
edge.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from itertools import combinations_with_replacement
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from errors import UnsupportedShape
from geometry_core import (
    Crossing,
    CrossingSet,
    Drawing,
    Orientation,
    Point,
    count_crossings,
    orientation,
    point_in_convex_polygon,
    without_vertex,
)

logger = logging.getLogger(__name__)


class Colour(Enum):
    """Vertex colours, ranked red < green < blue < white for canonical labels."""

    RED = "red"
    GREEN = "green"
    BLUE = "blue"
    WHITE = "white"

    @classmethod
    def from_string(cls, text: str) -> "Colour":
        """
        Convert a colour name or its initial letter to a Colour.

        Raises:
            ValueError: If text names no colour
        """
        lowered = text.strip().lower()
        for colour in cls:
            if lowered in (colour.value, colour.letter):
                return colour
        raise ValueError(
            f"Invalid colour: {text}. Must be one of {[c.value for c in cls]}"
        )

    @property
    def letter(self) -> str:
        return self.value[0]

    @property
    def rank(self) -> int:
        return _RANK[self.letter]

    def __str__(self) -> str:
        return self.value


_RANK = {"r": 0, "g": 1, "b": 2, "w": 3}
_BY_LETTER = {c.letter: c for c in Colour}
LAYER_COLOURS = (Colour.RED, Colour.GREEN, Colour.BLUE)


def convex_hull_indices(points: Sequence[Point], indices: Iterable[int]) -> Tuple[int, ...]:
    """
    Convex hull of a subset of points by monotone chain.

    Returns:
        Hull vertex indices counter-clockwise, starting from the
        lexicographically least point
    """
    order = sorted(indices, key=lambda i: points[i])
    if len(order) <= 2:
        return tuple(order)

    def chain(seq: List[int]) -> List[int]:
        out: List[int] = []
        for i in seq:
            while (
                len(out) >= 2
                and orientation(points[out[-2]], points[out[-1]], points[i])
                != Orientation.COUNTER_CLOCKWISE
            ):
                out.pop()
            out.append(i)
        return out

    lower = chain(order)
    upper = chain(order[::-1])
    return tuple(lower[:-1] + upper[:-1])


@dataclass(frozen=True)
class HullDecomposition:
    """Peel layers; layer 0 is the convex hull, each list counter-clockwise."""

    layers: Tuple[Tuple[int, ...], ...]

    @property
    def profile(self) -> Tuple[int, ...]:
        return tuple(len(layer) for layer in self.layers)

    def layer_of(self, v: int) -> int:
        for depth, layer in enumerate(self.layers):
            if v in layer:
                return depth
        raise KeyError(v)

    def polygon(self, d: Drawing, depth: int) -> List[Point]:
        return [d.points[i] for i in self.layers[depth]]


def peel_hulls(d: Drawing) -> HullDecomposition:
    """Iterated convex hulls of a drawing until no vertices remain."""
    remaining = set(range(d.n))
    layers: List[Tuple[int, ...]] = []
    while remaining:
        hull = convex_hull_indices(d.points, remaining)
        layers.append(hull)
        remaining.difference_update(hull)
    return HullDecomposition(tuple(layers))


def is_nested_triangle_drawing(d: Drawing) -> bool:
    """True iff every peel layer is a triangle."""
    return all(size == 3 for size in peel_hulls(d).profile)


def _pair_key(pair: str) -> Tuple[int, int]:
    return (_RANK[pair[0]], -_RANK[pair[1]])


def _pair(c1: str, c2: str) -> str:
    return "".join(sorted((c1, c2), key=_RANK.__getitem__))


@dataclass(frozen=True)
class ColorLabel:
    """
    Colour class of a crossing, e.g. rb x rg.

    Letters inside a pair follow r < g < b < w; the two pairs are ordered
    so that the pair with the lower first colour comes first and, on a
    tie, the one with the higher second colour.
    """

    pair_a: str
    pair_b: str

    def __post_init__(self) -> None:
        for pair in (self.pair_a, self.pair_b):
            if len(pair) != 2 or any(ch not in _RANK for ch in pair) or pair != _pair(*pair):
                raise ValueError(f"invalid colour pair: {pair!r}")
        if _pair_key(self.pair_a) > _pair_key(self.pair_b):
            raise ValueError(f"label not canonical: {self.pair_a} x {self.pair_b}")

    @classmethod
    def from_pairs(cls, p: str, q: str) -> "ColorLabel":
        p = _pair(*p)
        q = _pair(*q)
        first, second = sorted((p, q), key=_pair_key)
        return cls(first, second)

    @classmethod
    def from_colours(cls, a1: Colour, a2: Colour, b1: Colour, b2: Colour) -> "ColorLabel":
        return cls.from_pairs(a1.letter + a2.letter, b1.letter + b2.letter)

    @classmethod
    def parse(cls, text: str) -> "ColorLabel":
        """Parse 'rb×gg', 'rbxgg' or 'rb*gg'."""
        compact = text.strip().lower().replace(" ", "")
        for sep in ("×", "*", "x"):
            if sep in compact:
                p, _, q = compact.partition(sep)
                return cls.from_pairs(p, q)
        raise ValueError(f"invalid colour label: {text!r}")

    @property
    def arity(self) -> int:
        """Number of distinct colours among the four endpoints."""
        return len(set(self.pair_a + self.pair_b))

    @property
    def colours(self) -> FrozenSet[Colour]:
        return frozenset(_BY_LETTER[ch] for ch in self.pair_a + self.pair_b)

    def sort_key(self) -> Tuple[Tuple[int, int], Tuple[int, int]]:
        return (_pair_key(self.pair_a), _pair_key(self.pair_b))

    def __str__(self) -> str:
        return f"{self.pair_a}×{self.pair_b}"


def all_labels(colours: Iterable[Colour]) -> List[ColorLabel]:
    """Every canonical label over a colour set, in canonical order."""
    letters = sorted({c.letter for c in colours}, key=_RANK.__getitem__)
    pairs = [a + b for a, b in combinations_with_replacement(letters, 2)]
    labels = {ColorLabel.from_pairs(p, q) for p, q in combinations_with_replacement(pairs, 2)}
    return sorted(labels, key=ColorLabel.sort_key)


@dataclass(frozen=True)
class ColoredDrawing:
    """A drawing with its peel layers and a colour per vertex."""

    drawing: Drawing
    hulls: HullDecomposition
    colour: Tuple[Colour, ...]
    white: Optional[int] = None

    def vertices_of(self, colour: Colour) -> Tuple[int, ...]:
        return tuple(i for i, c in enumerate(self.colour) if c is colour)

    @property
    def colours_present(self) -> List[Colour]:
        return sorted(set(self.colour), key=lambda c: c.rank)

    @cached_property
    def crossings(self) -> CrossingSet:
        return count_crossings(self.drawing)

    @cached_property
    def tally(self) -> Dict[ColorLabel, int]:
        return tally_by_label(self)

    def count(self, label: str) -> int:
        """Tally cell for a label written as text, e.g. 'rb×gg'."""
        return self.tally.get(ColorLabel.parse(label), 0)


def _assign(n: int, groups: Sequence[Tuple[Iterable[int], Colour]]) -> Tuple[Colour, ...]:
    colours: List[Optional[Colour]] = [None] * n
    for members, colour in groups:
        for v in members:
            colours[v] = colour
    assert all(c is not None for c in colours)
    return tuple(colours)  # type: ignore[arg-type]


def _colour_around_white(d: Drawing, hulls: HullDecomposition, white: int) -> ColoredDrawing:
    rest = [i for i in range(d.n) if i != white]
    sub = peel_hulls(without_vertex(d, white))
    if sub.profile != (3, 3, 3):
        raise UnsupportedShape(
            f"removing vertex {white} leaves peel {list(sub.profile)}, expected [3, 3, 3]",
            profile=hulls.profile,
        )
    groups = [([rest[j] for j in layer], colour) for layer, colour in zip(sub.layers, LAYER_COLOURS)]
    groups.append(([white], Colour.WHITE))
    return ColoredDrawing(d, hulls, _assign(d.n, groups), white=white)


def color_by_hulls(d: Drawing, white: Optional[int] = None) -> ColoredDrawing:
    """
    Colour a nested drawing by its peel layers.

    Supported profiles: [3,3] (red, green), [3,3,3] (red, green, blue),
    [3,3,4] (inner quadrilateral all blue) and, for n = 10, a nested K9
    plus one white vertex. The white vertex is the innermost extra vertex
    when the peel is [3,3,3,1]; otherwise the lowest-index vertex whose
    removal leaves a [3,3,3] peel.

    Args:
        d: Drawing to colour
        white: Explicit white vertex (n = 10 only)

    Raises:
        UnsupportedShape: For any other peel profile
    """
    hulls = peel_hulls(d)
    profile = hulls.profile
    if white is not None:
        d.check_index(white)
        return _colour_around_white(d, hulls, white)
    if profile in ((3, 3), (3, 3, 3), (3, 3, 4)):
        groups = list(zip(hulls.layers, LAYER_COLOURS))
        return ColoredDrawing(d, hulls, _assign(d.n, groups))
    if profile == (3, 3, 3, 1):
        return _colour_around_white(d, hulls, hulls.layers[3][0])
    if d.n == 10:
        for v in range(d.n):
            if peel_hulls(without_vertex(d, v)).profile == (3, 3, 3):
                logger.debug("white vertex identified structurally: %d", v)
                return _colour_around_white(d, hulls, v)
    raise UnsupportedShape(f"cannot colour peel profile {list(profile)}", profile=profile)


def label_crossing(c: Crossing, cd: ColoredDrawing) -> ColorLabel:
    """Canonical colour label of a crossing."""
    col = cd.colour
    return ColorLabel.from_colours(
        col[c.edge_a[0]], col[c.edge_a[1]], col[c.edge_b[0]], col[c.edge_b[1]]
    )


def tally_by_label(cd: ColoredDrawing) -> Dict[ColorLabel, int]:
    """Exhaustive histogram of crossing labels; absent classes map to 0."""
    tally = {label: 0 for label in all_labels(cd.colours_present)}
    for c in cd.crossings:
        tally[label_crossing(c, cd)] += 1
    return tally


def two_coloured_count(cd: ColoredDrawing, a: Colour, b: Colour) -> int:
    """Crossings whose four endpoints use exactly the colours a and b."""
    wanted = {a, b}
    return sum(n for label, n in cd.tally.items() if label.colours == wanted)


def white_crossings(cd: ColoredDrawing) -> int:
    """Crossings on edges incident to the white vertex (0 without one)."""
    if cd.white is None:
        return 0
    return cd.crossings.involving(cd.white)


def colour_polygon(cd: ColoredDrawing, colour: Colour) -> Tuple[int, ...]:
    """
    Vertices of one colour class as a convex polygon, counter-clockwise.

    Raises:
        UnsupportedShape: If the class has fewer than three vertices or is
            not in convex position
    """
    members = cd.vertices_of(colour)
    if len(members) < 3:
        raise UnsupportedShape(f"{colour} class has {len(members)} vertices, not a polygon")
    hull = convex_hull_indices(cd.drawing.points, members)
    if len(hull) != len(members):
        raise UnsupportedShape(f"{colour} vertices are not in convex position")
    return hull


def _sides(polygon: Sequence[int]) -> set:
    k = len(polygon)
    return {tuple(sorted((polygon[i], polygon[(i + 1) % k]))) for i in range(k)}


def _bridges(edge: Tuple[int, int], cd: ColoredDrawing, outer: Colour, inner: Colour) -> bool:
    ends = {cd.colour[edge[0]], cd.colour[edge[1]]}
    return ends == {outer, inner}


def _nested_polygons(
    cd: ColoredDrawing, outer: Colour, inner: Colour
) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    outer_poly = colour_polygon(cd, outer)
    inner_poly = colour_polygon(cd, inner)
    pts = cd.drawing.points
    ring = [pts[i] for i in outer_poly]
    if not all(point_in_convex_polygon(pts[i], ring) for i in inner_poly):
        raise UnsupportedShape(f"{inner} polygon is not nested inside the {outer} polygon")
    return outer_poly, inner_poly


def are_concentric(cd: ColoredDrawing, outer: Colour, inner: Colour) -> bool:
    """
    True iff no edge joining the two colour classes crosses a side of
    either polygon.

    Raises:
        UnsupportedShape: If the classes do not form nested convex polygons
    """
    outer_poly, inner_poly = _nested_polygons(cd, outer, inner)
    sides = _sides(outer_poly) | _sides(inner_poly)
    for c in cd.crossings:
        for e, f in ((c.edge_a, c.edge_b), (c.edge_b, c.edge_a)):
            if _bridges(e, cd, outer, inner) and f in sides:
                return False
    return True


def count_non_concentric_crossings(
    cd: ColoredDrawing,
    outer: Optional[Colour] = None,
    inner: Optional[Colour] = None,
) -> int:
    """
    Crossings between an inner-triangle side and an inner-to-outer edge.

    Defaults to the two outermost peel layers of cd.

    Raises:
        UnsupportedShape: If the two classes are not nested triangles
    """
    if outer is None or inner is None:
        if len(cd.hulls.layers) < 2:
            raise UnsupportedShape("need two nested layers", profile=cd.hulls.profile)
        outer = outer or cd.colour[cd.hulls.layers[0][0]]
        inner = inner or cd.colour[cd.hulls.layers[1][0]]
    if len(cd.vertices_of(outer)) != 3 or len(cd.vertices_of(inner)) != 3:
        raise UnsupportedShape(f"{outer} and {inner} classes must both be triangles")
    _, inner_poly = _nested_polygons(cd, outer, inner)
    inner_sides = _sides(inner_poly)
    total = 0
    for c in cd.crossings:
        if (c.edge_a in inner_sides and _bridges(c.edge_b, cd, outer, inner)) or (
            c.edge_b in inner_sides and _bridges(c.edge_a, cd, outer, inner)
        ):
            total += 1
    return total


def sub_drawing(cd: ColoredDrawing, colours: Iterable[Colour]) -> ColoredDrawing:
    """
    Restrict a coloured drawing to the vertices of some colours.

    Vertex colours are preserved, so the green-blue K6 of a nested K9
    stays green outside and blue inside.
    """
    keep = set(colours)
    index = [i for i, c in enumerate(cd.colour) if c in keep]
    d = Drawing(tuple(cd.drawing.points[i] for i in index))
    white = index.index(cd.white) if cd.white is not None and cd.white in index else None
    return ColoredDrawing(d, peel_hulls(d), tuple(cd.colour[i] for i in index), white=white)

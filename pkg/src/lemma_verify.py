"""
Instance checks for the counting and geometric lemmas about nested drawings.

Each rule is a predicate over one concrete drawing. A rule that does not
apply to the drawing's shape reports not-applicable instead of passing or
failing. Every report carries the exact counts the predicate read, so a
suite summary shows how close each instance came to its bound.

Suites regenerate their instances from (master seed, instance index), so
a run can be parallelised across processes and still merge into the same
ordered list of reports.
"""
from __future__ import annotations

import json
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Any, Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

import numpy as np
from tqdm import tqdm

from drawing_generators import (
    K10Shape,
    generate_k10_shape,
    generate_nested_k6,
    generate_nested_k9,
    generate_optimal_k9,
    generate_peel_shape,
)
from errors import HypothesisNotMet, UnknownRule, UnsupportedShape
from geometry_core import (
    CrossingSet,
    Drawing,
    Point,
    as_point,
    count_crossings,
    find_collinear_triple,
    point_in_triangle,
    segments_cross,
)
from hull_color import (
    ColoredDrawing,
    Colour,
    HullDecomposition,
    are_concentric,
    color_by_hulls,
    count_non_concentric_crossings,
    peel_hulls,
    sub_drawing,
    two_coloured_count,
    white_crossings,
)
from kite_config import (
    ConfigurationClass,
    Kite,
    ccc_region_contains,
    classify_configuration,
    containment_quadrilateral,
    extract_kite,
    kite_edges,
    kite_lemma_region_contains,
    kite_region_contains,
    nested_k6_layers,
    quadrilateral_contains,
)

logger = logging.getLogger(__name__)

REGION_NOTE = "region A read as an intersection of angular sectors"
EQUALITY_HELD = "equality held"
ABOVE_BOUND = "strictly above the bound"
WITNESS_ATTEMPTS = 2000


@dataclass
class CheckReport:
    """
    Outcome of one rule on one drawing.

    passed is None exactly when the rule is not applicable.
    """

    rule_id: str
    applicable: bool
    observed: Dict[str, int]
    required: str
    passed: Optional[bool]
    notes: List[str] = field(default_factory=list)
    seed: Optional[int] = None

    @property
    def status(self) -> str:
        if not self.applicable:
            return "n/a"
        return "pass" if self.passed else "fail"

    def to_line(self) -> str:
        """Tab-separated: rule, seed, status, observed counts in rule order."""
        seed = "-" if self.seed is None else str(self.seed)
        counts = ",".join(f"{k}={v}" for k, v in self.observed.items())
        return f"{self.rule_id}\t{seed}\t{self.status}\t{counts}"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "rule_id": self.rule_id,
            "seed": self.seed,
            "status": self.status,
            "observed": dict(self.observed),
            "required": self.required,
            "notes": list(self.notes),
        }


@dataclass
class _Subject:
    drawing: Drawing
    hulls: HullDecomposition
    crossings: CrossingSet
    coloured: Optional[ColoredDrawing]

    @property
    def profile(self) -> Tuple[int, ...]:
        return self.hulls.profile

    @property
    def total(self) -> int:
        return self.crossings.count


def _subject(item: Union[Drawing, ColoredDrawing]) -> _Subject:
    if isinstance(item, ColoredDrawing):
        return _Subject(item.drawing, item.hulls, item.crossings, item)
    try:
        cd: Optional[ColoredDrawing] = color_by_hulls(item)
    except UnsupportedShape:
        cd = None
    if cd is not None:
        return _Subject(item, cd.hulls, cd.crossings, cd)
    return _Subject(item, peel_hulls(item), count_crossings(item), None)


@dataclass(frozen=True)
class Rule:
    """One row of the rule table."""

    rule_id: str
    kind: str
    applies_to: str
    required: str
    anchor: str
    family: str
    check: Callable[..., CheckReport] = field(compare=False, repr=False)


class RuleTable:
    """Static, uniquely keyed list of rules."""

    def __init__(self, rules: Sequence[Rule]) -> None:
        ids = [r.rule_id for r in rules]
        duplicates = {i for i in ids if ids.count(i) > 1}
        if duplicates:
            raise ValueError(f"duplicate rule ids: {sorted(duplicates)}")
        self.rules: Tuple[Rule, ...] = tuple(rules)
        self._by_id = {r.rule_id: r for r in rules}

    def get(self, rule_id: str) -> Rule:
        try:
            return self._by_id[rule_id]
        except KeyError:
            raise UnknownRule(f"unknown rule: {rule_id}") from None

    def ids(self, kind: Optional[str] = None) -> List[str]:
        return [r.rule_id for r in self.rules if kind is None or r.kind == kind]

    def __contains__(self, rule_id: object) -> bool:
        return rule_id in self._by_id

    def __len__(self) -> int:
        return len(self.rules)


def _na(rule: Rule, reason: str) -> CheckReport:
    return CheckReport(rule.rule_id, False, {}, rule.required, None, [reason])


def _verdict(rule: Rule, observed: Dict[str, int], passed: bool, notes: Optional[List[str]] = None) -> CheckReport:
    return CheckReport(rule.rule_id, True, observed, rule.required, bool(passed), notes or [])


def _nested_k9(s: _Subject) -> Optional[ColoredDrawing]:
    if s.coloured is not None and s.profile == (3, 3, 3) and s.drawing.n == 9:
        return s.coloured
    return None


def _nested_k6(s: _Subject) -> Optional[ColoredDrawing]:
    if s.coloured is not None and s.profile == (3, 3) and s.drawing.n == 6:
        return s.coloured
    return None


# counting rules

def _k5_principle(rule: Rule, s: _Subject) -> CheckReport:
    hull = s.hulls.layers[0]
    n = s.drawing.n
    if len(hull) != 3 or n < 4:
        return _na(rule, f"hull is not a triangle with interior vertices (peel {list(s.profile)})")
    on_hull = set(hull)

    def spoke(edge: Tuple[int, int]) -> bool:
        return (edge[0] in on_hull) != (edge[1] in on_hull)

    observed = sum(1 for c in s.crossings if spoke(c.edge_a) and spoke(c.edge_b))
    expected = comb(n - 3, 2)
    return _verdict(rule, {"spoke_crossings": observed, "expected": expected}, observed == expected)


def _two_colour(rule: Rule, s: _Subject) -> CheckReport:
    cd = _nested_k9(s)
    if cd is None:
        return _na(rule, "not a nested-triangle K9")
    observed = {
        "rg": two_coloured_count(cd, Colour.RED, Colour.GREEN),
        "rb": two_coloured_count(cd, Colour.RED, Colour.BLUE),
        "gb": two_coloured_count(cd, Colour.GREEN, Colour.BLUE),
    }
    return _verdict(rule, observed, all(v >= 3 for v in observed.values()))


_PAIRS = (
    ("rg", Colour.RED, Colour.GREEN),
    ("rb", Colour.RED, Colour.BLUE),
    ("gb", Colour.GREEN, Colour.BLUE),
)


def _non_concentric_k6(rule: Rule, s: _Subject) -> CheckReport:
    k6 = _nested_k6(s)
    if k6 is not None:
        outer, inner = (k6.colour[layer[0]] for layer in k6.hulls.layers)
        if are_concentric(k6, outer, inner):
            return _na(rule, "triangles are concentric")
        observed = {"total": s.total, "non_concentric": count_non_concentric_crossings(k6)}
        return _verdict(rule, observed, s.total > 3)
    cd = _nested_k9(s)
    if cd is None:
        return _na(rule, "not a nested-triangle K6 or K9")
    observed: Dict[str, int] = {}
    passed = True
    for name, outer, inner in _PAIRS:
        if are_concentric(cd, outer, inner):
            continue
        total = two_coloured_count(cd, outer, inner)
        observed[f"total_{name}"] = total
        observed[f"non_concentric_{name}"] = count_non_concentric_crossings(cd, outer, inner)
        passed = passed and total > 3
    if not observed:
        return _na(rule, "every colour pair is concentric")
    return _verdict(rule, observed, passed)


def _configuration_law(rule: Rule, s: _Subject) -> CheckReport:
    k6 = _nested_k6(s)
    if k6 is None:
        return _na(rule, "not a nested-triangle K6")
    config = classify_configuration(k6)
    observed = {
        "non_concentric": count_non_concentric_crossings(k6),
        "class_count": config.config_class.non_concentric_count,
    }
    notes = [f"class={config.config_class}"]
    return _verdict(rule, observed, observed["non_concentric"] == observed["class_count"], notes)


def _rb_gg_nine(rule: Rule, s: _Subject) -> CheckReport:
    cd = _nested_k9(s)
    if cd is None:
        return _na(rule, "not a nested-triangle K9")
    observed = cd.count("rb×gg")
    return _verdict(rule, {"rb×gg": observed}, observed == 9)


def _rb_rg_nine(rule: Rule, s: _Subject) -> CheckReport:
    cd = _nested_k9(s)
    if cd is None:
        return _na(rule, "not a nested-triangle K9")
    observed = cd.count("rb×rg")
    notes = [EQUALITY_HELD if observed == 9 else ABOVE_BOUND]
    return _verdict(rule, {"rb×rg": observed}, observed >= 9, notes)


def _internal_nine(rule: Rule, s: _Subject) -> CheckReport:
    cd = _nested_k9(s)
    if cd is None:
        return _na(rule, "not a nested-triangle K9")
    observed = {"rb×gb": cd.count("rb×gb"), "gb×bb": cd.count("gb×bb")}
    observed["internal"] = observed["rb×gb"] + observed["gb×bb"]
    return _verdict(rule, observed, observed["internal"] >= 9)


def _k9_concentric_optimum(rule: Rule, s: _Subject) -> CheckReport:
    cd = _nested_k9(s)
    if cd is None:
        return _na(rule, "not a nested-triangle K9")
    if s.total != 36:
        return _na(rule, f"crossing count {s.total} is not 36")
    observed = {"rg×gg": cd.count("rg×gg"), "rb×bb": cd.count("rb×bb")}
    return _verdict(rule, observed, observed["rg×gg"] == 0 and observed["rb×bb"] == 0)


def _nine_max(rule: Rule, s: _Subject) -> CheckReport:
    cd = _nested_k9(s)
    if cd is None:
        return _na(rule, "not a nested-triangle K9")
    if s.total != 36:
        return _na(rule, f"crossing count {s.total} is not 36")
    observed = {"rb×gb": cd.count("rb×gb"), "gb×bb": cd.count("gb×bb")}
    observed["internal"] = observed["rb×gb"] + observed["gb×bb"]
    passed = observed["internal"] == 9 and observed["gb×bb"] <= 2 and observed["rb×gb"] <= 9
    return _verdict(rule, observed, passed)


def _white_position(cd: ColoredDrawing, colour: Colour) -> bool:
    pts = cd.drawing.points
    tri = [pts[i] for i in cd.vertices_of(colour)]
    return cd.white is not None and len(tri) == 3 and point_in_triangle(pts[cd.white], *tri)


def _white_in_green(rule: Rule, s: _Subject) -> CheckReport:
    cd = s.coloured
    if cd is None or cd.white is None or not _white_position(cd, Colour.GREEN):
        return _na(rule, "no white vertex inside the green triangle")
    observed = {label: cd.count(label) for label in ("rw×gb", "rb×bw", "gb×bw", "rg×gg")}
    observed["sum"] = sum(observed.values())
    return _verdict(rule, observed, observed["sum"] >= 6)


def _white_in_blue(rule: Rule, s: _Subject) -> CheckReport:
    cd = s.coloured
    if cd is None or cd.white is None or not _white_position(cd, Colour.BLUE):
        return _na(rule, "no white vertex inside the blue triangle")
    observed = {"white": white_crossings(cd), "rg×gg": cd.count("rg×gg"), "total": s.total}
    observed["white_plus_rg×gg"] = observed["white"] + observed["rg×gg"]
    passed = observed["white_plus_rg×gg"] >= 27 and s.total >= 63
    return _verdict(rule, observed, passed)


def _total_at_least(profile: Tuple[int, ...], bound: int) -> Callable[[Rule, _Subject], CheckReport]:
    def check(rule: Rule, s: _Subject) -> CheckReport:
        if s.profile != profile:
            return _na(rule, f"peel {list(s.profile)} is not {list(profile)}")
        return _verdict(rule, {"total": s.total}, s.total >= bound)

    return check


# geometric lemmas

def _witness_point(witnesses: Mapping[str, Any], key: str) -> Optional[Point]:
    value = witnesses.get(key)
    return None if value is None else as_point(value)


def _general_position_with(cd: ColoredDrawing, extra: List[Point]) -> bool:
    return find_collinear_triple(list(cd.drawing.points) + extra) is None


def _outside_outer(cd: ColoredDrawing, p: Point) -> bool:
    outer, _ = nested_k6_layers(cd)
    pts = cd.drawing.points
    return not point_in_triangle(p, *(pts[i] for i in outer))


def _barrier(rule: Rule, cd: ColoredDrawing, witnesses: Mapping[str, Any]) -> Union[CheckReport, str]:
    outer, inner = nested_k6_layers(cd)
    u, v = _witness_point(witnesses, "u"), _witness_point(witnesses, "v")
    w = witnesses.get("w")
    if u is None or v is None or w not in inner:
        return "witnesses need points u, v and an inner vertex w"
    if not (_outside_outer(cd, u) and _outside_outer(cd, v)):
        return "u and v must lie outside the outer triangle"
    if not _general_position_with(cd, [u, v]):
        return "witness points are not in general position"
    pts = cd.drawing.points
    sides = [(outer[i], outer[(i + 1) % 3]) for i in range(3)]
    side_u = [e for e in sides if segments_cross(u, pts[w], pts[e[0]], pts[e[1]])]
    side_v = [e for e in sides if segments_cross(v, pts[w], pts[e[0]], pts[e[1]])]
    if not any(a != b for a in side_u for b in side_v):
        return "(u,w) and (v,w) do not cross different outer edges"
    edges = [e for e in kite_edges(cd) if w not in e]
    from_u = sum(1 for a, b in edges if segments_cross(u, pts[w], pts[a], pts[b]))
    from_v = sum(1 for a, b in edges if segments_cross(v, pts[w], pts[a], pts[b]))
    return _verdict(rule, {"from_u": from_u, "from_v": from_v, "total": from_u + from_v}, from_u + from_v >= 2)


def _kite(rule: Rule, cd: ColoredDrawing, witnesses: Mapping[str, Any]) -> Union[CheckReport, str]:
    outer, _ = nested_k6_layers(cd)
    first, second = witnesses.get("first"), witnesses.get("second")
    p = _witness_point(witnesses, "p")
    if first not in outer or second not in outer or first == second or p is None:
        return "witnesses need two outer vertices 'first', 'second' and a point p"
    k1, k2 = extract_kite(cd, first), extract_kite(cd, second)
    if not (k1.is_concave and k2.is_concave) or k1.labels != k2.labels:
        return "kites are not identically labelled concave kites"
    pts = cd.drawing.points
    if point_in_triangle(pts[first], pts[k2.left], pts[second], pts[k2.right]):
        return "the second kite contains the first origin"
    if not _general_position_with(cd, [p]):
        return "witness point is not in general position"
    if not kite_lemma_region_contains(cd, k1, p):
        return "p is outside region A of the first kite"
    o1 = pts[first]
    hits_l = segments_cross(o1, p, pts[second], pts[k2.left])
    hits_r = segments_cross(o1, p, pts[second], pts[k2.right])
    observed = {"crosses_o2_l": int(hits_l), "crosses_o2_r": int(hits_r)}
    return _verdict(rule, observed, hits_l or hits_r, [REGION_NOTE])


def _ccc(rule: Rule, cd: ColoredDrawing, witnesses: Mapping[str, Any]) -> Union[CheckReport, str]:
    config = classify_configuration(cd)
    if config.config_class is not ConfigurationClass.CCC:
        return f"configuration is {config.config_class}, not CCC"
    u, v = _witness_point(witnesses, "u"), _witness_point(witnesses, "v")
    if u is None or v is None:
        return "witnesses need points u and v"
    if not _general_position_with(cd, [u, v]):
        return "witness points are not in general position"
    if any(kite_region_contains(cd, k, u) for k in config.kites):
        return "u lies inside a kite"
    if not ccc_region_contains(cd, config, v):
        return "v is outside region A"
    pts = cd.drawing.points
    hits = sum(1 for a, b in kite_edges(cd) if segments_cross(u, v, pts[a], pts[b]))
    return _verdict(rule, {"kite_edge_crossings": hits}, hits >= 2, [REGION_NOTE])


def _containment(rule: Rule, cd: ColoredDrawing, witnesses: Mapping[str, Any]) -> Union[CheckReport, str]:
    outer, _ = nested_k6_layers(cd)
    origin = witnesses.get("origin")
    v = _witness_point(witnesses, "v")
    if origin not in outer or v is None:
        return "witnesses need an outer vertex 'origin' and a point v"
    kite = extract_kite(cd, origin)
    if not kite.is_concave:
        return f"kite at {origin} is convex"
    if not _outside_outer(cd, v) or not _general_position_with(cd, [v]):
        return "v must lie outside the drawing in general position"
    quad = containment_quadrilateral(cd, kite)
    pts = cd.drawing.points
    m = pts[kite.middle]
    inside = quadrilateral_contains(cd, quad, m)
    sides = [(quad[i], quad[(i + 1) % 4]) for i in range(4)]
    hits = sum(1 for a, b in sides if segments_cross(v, m, pts[a], pts[b]))
    return _verdict(rule, {"middle_inside": int(inside), "side_crossings": hits}, inside and hits >= 1)


def _shared_labels(rule: Rule, cd: ColoredDrawing, witnesses: Mapping[str, Any]) -> Union[CheckReport, str]:
    config = classify_configuration(cd)
    if config.config_class is not ConfigurationClass.UNARY_CCV:
        return f"configuration is {config.config_class}, not unary CCV"
    concave = [k for k in config.kites if k.is_concave]
    labelings = {k.labels for k in concave}
    observed = {"concave_kites": len(concave), "distinct_labelings": len(labelings)}
    return _verdict(rule, observed, len(labelings) == 1)


RULE_TABLE = RuleTable(
    [
        Rule("k5_principle", "counting", "any drawing with a triangular hull",
             "hull-to-interior crossings == C(n-3,2)", "K5 principle", "nested_k9", _k5_principle),
        Rule("two_colour", "counting", "nested-triangle K9",
             "rg, rb, gb two-coloured crossings >= 3 each", "two-coloured minimum", "nested_k9", _two_colour),
        Rule("non_concentric_k6", "counting", "non-concentric nested K6 (or colour pair of a K9)",
             "total > 3", "non-concentric K6", "nested_k6", _non_concentric_k6),
        Rule("configuration_law", "counting", "nested-triangle K6",
             "non-concentric crossings == class count {0,1,1,2,3}", "configuration law",
             "nested_k6", _configuration_law),
        Rule("rb_gg_nine", "counting", "nested-triangle K9",
             "rb×gg == 9", "nine rb×gg crossings", "nested_k9", _rb_gg_nine),
        Rule("rb_rg_nine", "counting", "nested-triangle K9",
             "rb×rg >= 9", "nine rb×rg crossings", "nested_k9", _rb_rg_nine),
        Rule("internal_nine", "counting", "nested-triangle K9",
             "rb×gb + gb×bb >= 9", "nine internal crossings", "nested_k9", _internal_nine),
        Rule("k9_concentric_optimum", "counting", "nested-triangle K9 with 36 crossings",
             "rg×gg == 0 and rb×bb == 0", "optimal K9 is concentric", "optimal_k9", _k9_concentric_optimum),
        Rule("nine_max", "counting", "nested-triangle K9 with 36 crossings",
             "internal == 9, gb×bb <= 2, rb×gb <= 9", "at most two gb×bb", "optimal_k9", _nine_max),
        Rule("white_in_green", "counting", "nested K9 plus white vertex inside green",
             "rw×gb + rb×bw + gb×bw + rg×gg >= 6", "six crossings around white", "k10_white_green",
             _white_in_green),
        Rule("white_in_blue", "counting", "nested K9 plus white vertex inside blue",
             "white + rg×gg >= 27 and total >= 63", "white inside blue", "k10_white_blue", _white_in_blue),
        Rule("ttq_62", "counting", "K10 peeling as [3,3,4]",
             "total >= 62", "triangle-triangle-quadrilateral", "k10_ttq", _total_at_least((3, 3, 4), 62)),
        Rule("guilty_hull6", "counting", "K9 peeling as [3,6]",
             "total >= 42", "hexagonal second hull", "peel_3_6", _total_at_least((3, 6), 42)),
        Rule("guilty_hull5", "counting", "K9 peeling as [3,5,1]",
             "total >= 38", "pentagonal second hull", "peel_3_5_1", _total_at_least((3, 5, 1), 38)),
        Rule("quad_second_hull_38", "counting", "K9 peeling as [3,4,2]",
             "total >= 38", "quadrilateral second hull", "peel_3_4_2", _total_at_least((3, 4, 2), 38)),
        Rule("barrier", "geometric", "nested K6, u and v outside, inner w",
             "kite crossings of (u,w) and (v,w) >= 2", "barrier lemma", "barrier", _barrier),
        Rule("kite", "geometric", "two identically labelled concave kites, p in region A",
             "(o1,p) crosses (o2,l) or (o2,r)", "kite lemma", "kite", _kite),
        Rule("ccc", "geometric", "CCC K6, u outside all kites, v in region A",
             "(u,v) crosses >= 2 kite edges", "CCC lemma", "ccc", _ccc),
        Rule("containment", "geometric", "concave kite, v outside the drawing",
             "m inside (o,l,o',r) and (v,m) crosses a kite edge", "containment quadrilateral",
             "containment", _containment),
        Rule("shared_labels", "geometric", "unary CCV K6",
             "both concave kites have the same l, m, r", "shared labels", "shared_labels", _shared_labels),
    ]
)


def verify_counting(subject: Union[Drawing, ColoredDrawing], rule_id: str) -> CheckReport:
    """
    Evaluate one counting rule on a drawing.

    Args:
        subject: A Drawing (coloured by its peel when possible) or a ColoredDrawing
        rule_id: Counting rule identifier

    Raises:
        UnknownRule: If rule_id names no counting rule
    """
    rule = RULE_TABLE.get(rule_id)
    if rule.kind != "counting":
        raise UnknownRule(f"{rule_id} is not a counting rule")
    return rule.check(rule, _subject(subject))


def verify_geometric_lemma(
    cd: ColoredDrawing,
    lemma_id: str,
    witnesses: Optional[Mapping[str, Any]] = None,
    strict: bool = False,
) -> CheckReport:
    """
    Evaluate a geometric lemma on a nested K6 with explicit witnesses.

    Witness keys: barrier (u, v, w), kite (first, second, p), ccc (u, v),
    containment (origin, v), shared_labels (none).

    Args:
        strict: Raise HypothesisNotMet instead of reporting not-applicable

    Raises:
        UnknownRule: If lemma_id names no geometric rule
        HypothesisNotMet: In strict mode, when the witnesses miss the hypothesis
    """
    rule = RULE_TABLE.get(lemma_id)
    if rule.kind != "geometric":
        raise UnknownRule(f"{lemma_id} is not a geometric lemma")
    try:
        nested_k6_layers(cd)
    except UnsupportedShape as exc:
        outcome: Union[CheckReport, str] = str(exc)
    else:
        outcome = rule.check(rule, cd, witnesses or {})
    if isinstance(outcome, CheckReport):
        return outcome
    if strict:
        raise HypothesisNotMet(f"{lemma_id}: {outcome}")
    return _na(rule, outcome)


def verify_drawing(subject: Union[Drawing, ColoredDrawing], rule_ids: Iterable[str]) -> List[CheckReport]:
    """Run rules that need no witnesses (all counting rules and shared_labels) on one drawing."""
    s = _subject(subject)
    reports = []
    for rule_id in rule_ids:
        rule = RULE_TABLE.get(rule_id)
        if rule.kind == "counting":
            reports.append(rule.check(rule, s))
        elif rule_id == "shared_labels":
            cd = _nested_k6(s)
            reports.append(
                verify_geometric_lemma(cd, rule_id) if cd is not None else _na(rule, "not a nested-triangle K6")
            )
    return reports


# suites

def instance_seed(master_seed: int, index: int) -> int:
    """Seed of instance `index` in a suite, derived from the master seed."""
    return int(np.random.SeedSequence([master_seed, index]).generate_state(1)[0])


def _k6_any(seed: int, classes: Sequence[ConfigurationClass]) -> Drawing:
    pick = classes[int(np.random.default_rng([seed, 1]).integers(len(classes)))]
    return generate_nested_k6(seed, pick)


@lru_cache(maxsize=256)
def _instance(family: str, seed: int) -> Union[Drawing, ColoredDrawing]:
    if family == "nested_k9":
        return generate_nested_k9(seed)
    if family == "optimal_k9":
        return generate_optimal_k9(seed)
    if family in ("nested_k6", "barrier"):
        return _k6_any(seed, list(ConfigurationClass))
    if family in ("kite", "shared_labels"):
        return generate_nested_k6(seed, ConfigurationClass.UNARY_CCV)
    if family == "ccc":
        return generate_nested_k6(seed, ConfigurationClass.CCC)
    if family == "containment":
        concave = [c for c in ConfigurationClass if c is not ConfigurationClass.VVV]
        return _k6_any(seed, concave)
    if family == "k10_ttq":
        return generate_k10_shape(seed, K10Shape.TRI_TRI_QUAD)
    if family == "k10_white_blue":
        return color_by_hulls(generate_k10_shape(seed, K10Shape.WHITE_IN_BLUE), white=9)
    if family == "k10_white_green":
        return color_by_hulls(generate_k10_shape(seed, K10Shape.WHITE_IN_GREEN), white=9)
    if family.startswith("peel_"):
        return generate_peel_shape(seed, tuple(int(s) for s in family[5:].split("_")))
    raise ValueError(f"unknown instance family: {family}")


def _random_point(rng: np.random.Generator, span: int) -> Point:
    x, y = (int(v) for v in rng.integers(-span, span + 1, size=2))
    return Point(x, y)


def _span(cd: ColoredDrawing) -> int:
    return 2 * max(max(abs(p.x), abs(p.y)) for p in cd.drawing.points) + 10


def _sample_outside(rng: np.random.Generator, cd: ColoredDrawing, taken: List[Point]) -> Optional[Point]:
    span = _span(cd)
    for _ in range(WITNESS_ATTEMPTS):
        p = _random_point(rng, span)
        if _outside_outer(cd, p) and _general_position_with(cd, taken + [p]):
            return p
    return None


def _sample_where(
    rng: np.random.Generator, cd: ColoredDrawing, test: Callable[[Point], bool], taken: List[Point]
) -> Optional[Point]:
    span = _span(cd) // 2
    for _ in range(WITNESS_ATTEMPTS):
        p = _random_point(rng, span)
        if test(p) and _general_position_with(cd, taken + [p]):
            return p
    return None


def sample_witnesses(lemma_id: str, cd: ColoredDrawing, seed: int) -> Dict[str, Any]:
    """
    Draw witnesses meant to satisfy a lemma's hypothesis on cd.

    Sampling can come back empty-handed; the lemma then reports not-applicable.
    """
    rng = np.random.default_rng([seed, 2])
    outer, inner = nested_k6_layers(cd)
    if lemma_id == "barrier":
        w = inner[int(rng.integers(3))]
        u = _sample_outside(rng, cd, [])
        if u is None:
            return {}
        for _ in range(50):
            v = _sample_outside(rng, cd, [u])
            if v is None:
                break
            trial = verify_geometric_lemma(cd, "barrier", {"u": u, "v": v, "w": w})
            if trial.applicable:
                return {"u": u, "v": v, "w": w}
        return {"u": u, "w": w}
    if lemma_id == "kite":
        config = classify_configuration(cd)
        concave = [k for k in config.kites if k.is_concave]
        for first, second in ((concave[0], concave[1]), (concave[1], concave[0])):
            pts = cd.drawing.points
            if point_in_triangle(pts[first.origin], pts[second.left], pts[second.origin], pts[second.right]):
                continue
            p = _sample_where(rng, cd, lambda q: kite_lemma_region_contains(cd, first, q), [])
            return {"first": first.origin, "second": second.origin, "p": p}
        return {}
    if lemma_id == "ccc":
        config = classify_configuration(cd)
        u = _sample_outside(rng, cd, [])
        v = _sample_where(rng, cd, lambda q: ccc_region_contains(cd, config, q), [u] if u else [])
        return {"u": u, "v": v}
    if lemma_id == "containment":
        config = classify_configuration(cd)
        concave = [k for k in config.kites if k.is_concave]
        kite = concave[int(rng.integers(len(concave)))]
        return {"origin": kite.origin, "v": _sample_outside(rng, cd, [])}
    return {}


def evaluate_instance(rule_id: str, seed: int) -> CheckReport:
    """Generate the instance for (rule, seed) and evaluate the rule on it."""
    rule = RULE_TABLE.get(rule_id)
    subject = _instance(rule.family, seed)
    if rule.kind == "counting":
        report = rule.check(rule, _subject(subject))
    else:
        cd = subject if isinstance(subject, ColoredDrawing) else color_by_hulls(subject)
        report = verify_geometric_lemma(cd, rule_id, sample_witnesses(rule_id, cd, seed))
    report.seed = seed
    return report


def _evaluate_job(job: Tuple[str, int]) -> CheckReport:
    return evaluate_instance(*job)


@dataclass
class SuiteSummary:
    """Reports of a suite run, ordered by rule then instance index."""

    reports: List[CheckReport]
    master_seed: Optional[int] = None

    @property
    def failures(self) -> int:
        return sum(1 for r in self.reports if r.applicable and not r.passed)

    @property
    def passes(self) -> int:
        return sum(1 for r in self.reports if r.applicable and r.passed)

    @property
    def not_applicable(self) -> int:
        return sum(1 for r in self.reports if not r.applicable)

    def __len__(self) -> int:
        return len(self.reports)

    def by_rule(self) -> Dict[str, Dict[str, int]]:
        counts: Dict[str, Dict[str, int]] = {}
        for r in self.reports:
            bucket = counts.setdefault(r.rule_id, {"pass": 0, "fail": 0, "n/a": 0})
            bucket[r.status] += 1
        return counts

    def equality_rollup(self) -> Dict[str, Tuple[int, int]]:
        """
        For rules whose reports record whether their bound was met with
        equality: (instances where it was, applicable instances).
        """
        rollup: Dict[str, Tuple[int, int]] = {}
        for r in self.reports:
            if r.applicable and (EQUALITY_HELD in r.notes or ABOVE_BOUND in r.notes):
                held, total = rollup.get(r.rule_id, (0, 0))
                rollup[r.rule_id] = (held + (EQUALITY_HELD in r.notes), total + 1)
        return rollup

    def footer_lines(self) -> List[str]:
        """Equality rollup lines, then the failure count."""
        lines = [
            f"{rule_id} equality held: {held}/{total}"
            for rule_id, (held, total) in self.equality_rollup().items()
        ]
        lines.append(f"failures: {self.failures}")
        return lines

    def to_text(self) -> str:
        lines = [r.to_line() for r in self.reports]
        lines.extend(self.footer_lines())
        return "\n".join(lines) + "\n"

    def to_json_lines(self) -> str:
        return "".join(json.dumps(r.to_dict(), ensure_ascii=False) + "\n" for r in self.reports)


def run_suite(
    rule_ids: Sequence[str],
    n_instances: int,
    master_seed: int,
    workers: int = 1,
    progress: bool = False,
) -> SuiteSummary:
    """
    Evaluate rules over seeded instances.

    Args:
        rule_ids: Rules to run, in output order
        n_instances: Instances per rule
        master_seed: Seed all instance seeds are derived from
        workers: Process count (serial when <= 1); output order is unaffected
        progress: Show a progress bar

    Raises:
        UnknownRule: If any rule id is unknown
    """
    for rule_id in rule_ids:
        RULE_TABLE.get(rule_id)
    seeds = [instance_seed(master_seed, i) for i in range(n_instances)]
    jobs = [(rule_id, seed) for rule_id in rule_ids for seed in seeds]
    reports: List[CheckReport] = []
    with tqdm(total=len(jobs), desc="suite", unit="check", disable=not progress) as bar:
        if workers <= 1 or len(jobs) <= 1:
            for job in jobs:
                reports.append(_evaluate_job(job))
                bar.update(1)
        else:
            chunk = max(1, len(jobs) // (workers * 8))
            with ProcessPoolExecutor(max_workers=workers) as pool:
                for report in pool.map(_evaluate_job, jobs, chunksize=chunk):
                    reports.append(report)
                    bar.update(1)
    summary = SuiteSummary(reports, master_seed)
    for r in reports:
        if r.applicable and not r.passed:
            logger.error("rule %s failed on seed %s: %s", r.rule_id, r.seed, r.observed)
    logger.info(
        "suite: %d checks, %d pass, %d fail, %d n/a",
        len(reports), summary.passes, summary.failures, summary.not_applicable,
    )
    return summary

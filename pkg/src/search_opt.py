"""
Search for drawings of K_n with few crossings.

local_search runs independent restarts of a hill descent over integer
coordinates. One vertex moves at a time: a batch of candidate positions
(anywhere in the box, around the vertex, next to another vertex) is
scored with numpy and the best is kept only if it lowers the crossings on
that vertex's edges (equal counts are allowed when plateau moves are on).
A restart stops once it reaches the proven lower bound. Restart seeds are
spawned from the master seed, so serial and parallel runs return the
same result.

grid_exhaustive is the brute-force oracle: a depth-first walk over all
general-position n-subsets of a small grid with an orientation table
precomputed by numpy, pruned against the best count found so far.
"""
from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

import numpy as np
from tqdm import tqdm

import bounds
from errors import BudgetExceeded, DomainError, GenerationBudgetExceeded, InconsistencyError
from geometry_core import (
    COORDINATE_BOUND,
    Drawing,
    Point,
    convex_quadruple_count,
    count_crossings,
)

logger = logging.getLogger(__name__)

GRID_SUBSET_LIMIT = 10**8
START_ATTEMPTS = 10_000
CANDIDATES_PER_MOVE = 24
MOVE_REDRAWS = 20


@dataclass(frozen=True)
class SearchParams:
    """
    Local search settings. Coordinates range over 0..box_size-1 on both axes.

    Raises:
        ValueError: On out-of-range settings
    """

    n: int
    restarts: int = 20
    moves_per_restart: int = 2000
    box_size: int = 1000
    master_seed: int = 0
    perturb_radius: int = 50
    allow_plateau: bool = False

    def __post_init__(self) -> None:
        if self.n < 3:
            raise ValueError(f"n must be at least 3, got {self.n}")
        if self.restarts < 1 or self.moves_per_restart < 1:
            raise ValueError("restarts and moves_per_restart must be at least 1")
        if not 2 <= self.box_size <= COORDINATE_BOUND:
            raise ValueError(f"box_size must be in 2..{COORDINATE_BOUND}, got {self.box_size}")
        if self.perturb_radius < 1:
            raise ValueError(f"perturb_radius must be at least 1, got {self.perturb_radius}")
        if not 0 <= self.master_seed < 2**64:
            raise ValueError("master_seed must be a 64-bit unsigned integer")

    @classmethod
    def from_config(
        cls, n: int, search_cfg: Mapping[str, Any], master_seed: int = 0, **overrides: Any
    ) -> "SearchParams":
        """
        Settings for K_n from the 'search' config section.

        The per_n entry for n overlays the section defaults; overrides whose
        value is None are ignored.
        """
        per_n = (search_cfg.get("per_n") or {}).get(n, {})
        settings = {
            key: per_n.get(key, search_cfg[key])
            for key in ("restarts", "moves_per_restart", "box_size", "perturb_radius", "allow_plateau")
        }
        settings.update({k: v for k, v in overrides.items() if v is not None})
        return cls(n=n, master_seed=master_seed, **settings)


@dataclass(frozen=True)
class SeedTrace:
    """Everything needed to re-run a search, as 'key=value' text lines."""

    master_seed: int
    n: int
    restarts: int
    moves_per_restart: int
    box_size: int
    perturb_radius: int
    allow_plateau: bool
    best_restart: int
    restart_counts: Tuple[int, ...]

    @classmethod
    def from_params(cls, params: SearchParams, best_restart: int, counts: Sequence[int]) -> "SeedTrace":
        return cls(
            params.master_seed,
            params.n,
            params.restarts,
            params.moves_per_restart,
            params.box_size,
            params.perturb_radius,
            params.allow_plateau,
            best_restart,
            tuple(counts),
        )

    def params(self) -> SearchParams:
        return SearchParams(
            n=self.n,
            restarts=self.restarts,
            moves_per_restart=self.moves_per_restart,
            box_size=self.box_size,
            master_seed=self.master_seed,
            perturb_radius=self.perturb_radius,
            allow_plateau=self.allow_plateau,
        )

    def to_text(self) -> str:
        lines = [
            f"master_seed={self.master_seed}",
            f"n={self.n}",
            f"restarts={self.restarts}",
            f"moves_per_restart={self.moves_per_restart}",
            f"box_size={self.box_size}",
            f"perturb_radius={self.perturb_radius}",
            f"allow_plateau={str(self.allow_plateau).lower()}",
            f"best_restart={self.best_restart}",
            "restart_counts=" + ",".join(str(c) for c in self.restart_counts),
        ]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "SeedTrace":
        values: Dict[str, str] = {}
        for line in text.splitlines():
            if line.strip() and not line.startswith("#"):
                key, _, value = line.partition("=")
                values[key.strip()] = value.strip()
        counts = tuple(int(c) for c in values.get("restart_counts", "").split(",") if c)
        return cls(
            master_seed=int(values["master_seed"]),
            n=int(values["n"]),
            restarts=int(values["restarts"]),
            moves_per_restart=int(values["moves_per_restart"]),
            box_size=int(values["box_size"]),
            perturb_radius=int(values["perturb_radius"]),
            allow_plateau=values.get("allow_plateau", "false") == "true",
            best_restart=int(values.get("best_restart", "0")),
            restart_counts=counts,
        )


@dataclass(frozen=True)
class RestartOutcome:
    index: int
    count: int
    points: Tuple[Point, ...]
    accepted: int
    repairs: int
    trajectory: Tuple[int, ...] = field(repr=False)


@dataclass(frozen=True)
class SearchResult:
    best: Drawing
    count: int
    history: Tuple[int, ...]
    seed_trace: Optional[SeedTrace] = None
    trajectories: Tuple[Tuple[int, ...], ...] = field(default=(), repr=False)


def _keeps_general_position(points: Sequence[Point], v: int, candidate: Point) -> bool:
    others = [p for i, p in enumerate(points) if i != v]
    if candidate in others:
        return False
    for a, b in combinations(others, 2):
        if (b.x - a.x) * (candidate.y - a.y) - (b.y - a.y) * (candidate.x - a.x) == 0:
            return False
    return True


def _random_start(rng: np.random.Generator, n: int, low: int, high: int) -> List[Point]:
    points: List[Point] = []
    for _ in range(START_ATTEMPTS * n):
        if len(points) == n:
            break
        x, y = (int(v) for v in rng.integers(low, high + 1, size=2))
        candidate = Point(x, y)
        if _keeps_general_position(points + [candidate], len(points), candidate):
            points.append(candidate)
    if len(points) < n:
        raise GenerationBudgetExceeded(
            f"no general-position start for n={n} in [{low},{high}]^2", attempts=START_ATTEMPTS * n
        )
    return points


@lru_cache(maxsize=None)
def _index_tuples(m: int, size: int) -> Tuple[np.ndarray, ...]:
    rows = np.array(list(combinations(range(m), size)), dtype=np.intp).reshape(-1, size)
    return tuple(rows[:, i] for i in range(size))


def _orientation_tensor(xy: np.ndarray) -> np.ndarray:
    x = xy[:, 0].astype(np.int64)
    y = xy[:, 1].astype(np.int64)
    dx = x[None, :] - x[:, None]
    dy = y[None, :] - y[:, None]
    det = dx[:, :, None] * dy[:, None, :] - dy[:, :, None] * dx[:, None, :]
    return np.sign(det).astype(np.int8)


def _candidate_counts(
    xy: np.ndarray, v: int, candidates: np.ndarray, tensor: np.ndarray
) -> Tuple[np.ndarray, np.ndarray]:
    """
    Responsibility of vertex v placed at each candidate position.

    A 4-subset {c, a, b, d} is convex exactly when one of its three
    pairings of segments crosses; every orientation involved is either
    c against a pair of the other vertices or a triple already in tensor.

    Returns:
        (counts, valid) where valid marks candidates keeping general position
    """
    others = np.delete(np.arange(len(xy)), v)
    delta = xy[others][None, :, :] - candidates[:, None, :]
    dx, dy = delta[..., 0], delta[..., 1]
    oc = np.sign(dx[:, :, None] * dy[:, None, :] - dy[:, :, None] * dx[:, None, :])

    m = len(others)
    pi, pj = _index_tuples(m, 2)
    valid = (oc[:, pi, pj] != 0).all(axis=1)

    a, b, d = _index_tuples(m, 3)
    ga, gb, gd = others[a], others[b], others[d]
    oab, oad = oc[:, a, b], oc[:, a, d]
    oba, obd = oc[:, b, a], oc[:, b, d]
    oda, odb = oc[:, d, a], oc[:, d, b]
    ab_cd = (oab != tensor[ga, gb, gd]) & (oda != odb)
    ad_cb = (oad != tensor[ga, gd, gb]) & (oba != obd)
    bd_ca = (obd != tensor[gb, gd, ga]) & (oab != oad)
    return (ab_cd | ad_cb | bd_ca).sum(axis=1), valid


def _candidates(
    rng: np.random.Generator, xy: np.ndarray, v: int, radius: int, low: int, high: int
) -> np.ndarray:
    """Row 0 is v's current position, then box-wide, local and near-vertex positions."""
    k = CANDIDATES_PER_MOVE // 3
    spread = rng.integers(low, high + 1, size=(k, 2))
    scale = rng.integers(1, radius + 1, size=(k, 1))
    local = xy[v] + rng.integers(-scale, scale + 1, size=(k, 2))
    anchors = xy[rng.integers(len(xy), size=k)]
    near = anchors + rng.integers(-radius, radius + 1, size=(k, 2))
    return np.clip(np.vstack([xy[v][None, :], spread, local, near]), low, high)


def _descend(
    rng: np.random.Generator,
    points: List[Point],
    moves: int,
    radius: int,
    low: int,
    high: int,
    allow_plateau: bool,
    target: int = -1,
) -> Tuple[List[Point], int, List[int], int, int]:
    """
    Single-vertex descent. Each move draws a batch of candidate positions
    for one vertex and takes the best; a candidate breaking general
    position is dropped, and a batch with none left is re-drawn from the
    same stream (up to MOVE_REDRAWS times) without spending the move.
    Stops early once the count reaches target.
    """
    xy = np.array([p.as_tuple() for p in points], dtype=np.int64)
    tensor = _orientation_tensor(xy)
    total = convex_quadruple_count(points)
    trajectory = [total]
    accepted = repairs = 0
    n = len(points)
    for _ in range(moves):
        if total <= target:
            break
        v = int(rng.integers(n))
        for _ in range(MOVE_REDRAWS):
            candidates = _candidates(rng, xy, v, radius, low, high)
            counts, valid = _candidate_counts(xy, v, candidates, tensor)
            valid &= (candidates != xy[v]).any(axis=1)
            if valid.any():
                break
            repairs += 1
        else:
            continue
        best = int(np.argmin(np.where(valid, counts, np.iinfo(np.int64).max)))
        delta = int(counts[best] - counts[0])
        if delta < 0 or (allow_plateau and delta == 0):
            xy[v] = candidates[best]
            tensor = _orientation_tensor(xy)
            total += delta
            accepted += 1
            trajectory.append(total)
    return [Point(int(x), int(y)) for x, y in xy], total, trajectory, accepted, repairs


def _run_restart(params: SearchParams, index: int, seed: np.random.SeedSequence) -> RestartOutcome:
    rng = np.random.default_rng(seed)
    high = params.box_size - 1
    points = _random_start(rng, params.n, 0, high)
    points, total, trajectory, accepted, repairs = _descend(
        rng,
        points,
        params.moves_per_restart,
        params.perturb_radius,
        0,
        high,
        params.allow_plateau,
        target=bounds.lower_bound(params.n),
    )
    logger.debug(
        "restart %d: count=%d accepted=%d repairs=%d", index, total, accepted, repairs
    )
    return RestartOutcome(index, total, tuple(points), accepted, repairs, tuple(trajectory))


def _run_restart_job(job: Tuple[SearchParams, int, np.random.SeedSequence]) -> RestartOutcome:
    return _run_restart(*job)


def _check_lower_bound(n: int, count: int) -> None:
    floor = bounds.lower_bound(n)
    if count < floor:
        raise InconsistencyError(
            f"drawing of K{n} with {count} crossings undercuts the lower bound {floor}"
        )


def local_search(params: SearchParams, workers: int = 1, progress: bool = False) -> SearchResult:
    """
    Multi-restart hill descent for a low-crossing drawing of K_n.

    Args:
        params: Search settings
        workers: Process count for restarts (serial when <= 1)
        progress: Show a progress bar over restarts

    Returns:
        Best drawing across restarts, ties broken by the lexicographically
        smallest point list

    Raises:
        InconsistencyError: If the result undercuts a proven lower bound
    """
    children = np.random.SeedSequence(params.master_seed).spawn(params.restarts)
    jobs = [(params, i, child) for i, child in enumerate(children)]
    bar = tqdm(total=len(jobs), desc=f"K{params.n} restarts", unit="restart", disable=not progress)
    outcomes: List[RestartOutcome] = []
    if workers <= 1:
        for job in jobs:
            outcomes.append(_run_restart_job(job))
            bar.update(1)
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for outcome in pool.map(_run_restart_job, jobs):
                outcomes.append(outcome)
                bar.update(1)
    bar.close()

    winner = min(outcomes, key=lambda o: (o.count, o.points))
    best = Drawing(winner.points)
    count = count_crossings(best).count
    if count != winner.count:
        raise InconsistencyError(
            f"incremental count {winner.count} disagrees with full count {count}"
        )
    _check_lower_bound(params.n, count)
    history = tuple(o.count for o in outcomes)
    logger.info("K%d search: best %d over %d restarts", params.n, count, params.restarts)
    return SearchResult(
        best,
        count,
        history,
        SeedTrace.from_params(params, winner.index, history),
        tuple(o.trajectory for o in outcomes),
    )


def improve_drawing(d: Drawing, budget: int, seed: int) -> Drawing:
    """
    Hill descent from an existing drawing; never returns a worse one.

    Candidate positions come from the drawing's bounding square grown by
    half its extent on each side (clamped to the coordinate bound); local
    moves use a radius of an eighth of the extent.

    Args:
        d: Starting drawing
        budget: Number of attempted moves (0 returns d itself)
        seed: Seed for the move stream
    """
    if budget <= 0:
        return d
    xs = [p.x for p in d.points]
    ys = [p.y for p in d.points]
    extent = max(max(xs) - min(xs), max(ys) - min(ys), 2)
    low = max(-COORDINATE_BOUND, min(min(xs), min(ys)) - extent // 2)
    high = min(COORDINATE_BOUND, max(max(xs), max(ys)) + extent // 2)
    rng = np.random.default_rng(seed)
    points, total, _, accepted, _ = _descend(
        rng, list(d.points), budget, max(1, extent // 8), low, high, False,
        target=bounds.lower_bound(d.n),
    )
    if accepted == 0:
        return d
    logger.debug("improve_drawing: %d accepted moves, count now %d", accepted, total)
    return Drawing(tuple(points))


def orientation_table(coords: np.ndarray) -> List[List[List[int]]]:
    """Sign of det(q-p, r-p) for every ordered triple of grid points."""
    return _orientation_tensor(np.asarray(coords)).tolist()


def grid_exhaustive(n: int, grid_w: int, grid_h: int, limit: int = GRID_SUBSET_LIMIT) -> SearchResult:
    """
    Exact minimum crossing count over all general-position n-subsets of a grid.

    Grid points are (x, y) with 0 <= x < grid_w and 0 <= y < grid_h. The
    witness is the lexicographically first minimal subset.

    Raises:
        BudgetExceeded: If C(grid_w * grid_h, n) exceeds limit
        DomainError: If the grid holds no general-position n-subset
    """
    m = grid_w * grid_h
    subsets = comb(m, n)
    if subsets > limit:
        raise BudgetExceeded(
            f"C({m},{n}) = {subsets} subsets exceeds the limit {limit}", subsets=subsets, limit=limit
        )
    coords = np.array([(x, y) for x in range(grid_w) for y in range(grid_h)], dtype=np.int64)
    sign = orientation_table(coords)

    def inside(p: int, a: int, b: int, c: int) -> bool:
        s = sign[a][b][p]
        return s != 0 and s == sign[b][c][p] == sign[c][a][p]

    def convex(a: int, b: int, c: int, d: int) -> bool:
        return not (inside(a, b, c, d) or inside(b, a, c, d) or inside(c, a, b, d) or inside(d, a, b, c))

    best_count = [comb(n, 4) + 1]
    best_subset: List[Tuple[int, ...]] = []

    def walk(start: int, chosen: List[int], count: int) -> None:
        if len(chosen) == n:
            best_count[0] = count
            best_subset[:] = [tuple(chosen)]
            return
        for idx in range(start, m - (n - len(chosen)) + 1):
            if any(sign[a][b][idx] == 0 for a, b in combinations(chosen, 2)):
                continue
            added = sum(1 for a, b, c in combinations(chosen, 3) if convex(a, b, c, idx))
            if count + added >= best_count[0]:
                continue
            chosen.append(idx)
            walk(idx + 1, chosen, count + added)
            chosen.pop()
            if best_count[0] == 0:
                return

    walk(0, [], 0)
    if not best_subset:
        raise DomainError(f"no general-position {n}-subset on a {grid_w}x{grid_h} grid")
    best = Drawing(tuple(Point(int(coords[i][0]), int(coords[i][1])) for i in best_subset[0]))
    count = count_crossings(best).count
    _check_lower_bound(n, count)
    logger.info("grid %dx%d, n=%d: minimum %d", grid_w, grid_h, n, count)
    return SearchResult(best, count, (count,))

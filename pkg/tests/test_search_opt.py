"""
Tests for local search and the grid oracle
"""
import math
import time
from pathlib import Path

import numpy as np
import pytest

from bounds import KNOWN_VALUES, lower_bound
from errors import BudgetExceeded, DomainError, GenerationBudgetExceeded
from geometry_core import COORDINATE_BOUND, Drawing, Point, count_crossings, vertex_crossing_count
from rectcross import load_config
from search_opt import (
    SearchParams,
    SeedTrace,
    _candidate_counts,
    _candidates,
    _orientation_tensor,
    grid_exhaustive,
    improve_drawing,
    local_search,
    orientation_table,
)

SHIPPED_CONFIG = Path(__file__).parent.parent / "rectcross_config.yaml"


def small_params(n: int, /, **overrides) -> SearchParams:
    settings = dict(n=n, restarts=3, moves_per_restart=300, box_size=200, master_seed=11, perturb_radius=20)
    settings.update(overrides)
    return SearchParams(**settings)


def convex_heptagon(radius: int = 1000) -> Drawing:
    return Drawing.from_coordinates(
        [
            (round(radius * math.cos(2 * math.pi * k / 7)), round(radius * math.sin(2 * math.pi * k / 7)))
            for k in range(7)
        ]
    )


class TestSearchParams:
    """Test suite for SearchParams validation"""

    @pytest.mark.parametrize(
        "overrides",
        [
            {"n": 2},
            {"restarts": 0},
            {"moves_per_restart": 0},
            {"box_size": 1},
            {"box_size": COORDINATE_BOUND + 1},
            {"perturb_radius": 0},
            {"master_seed": -1},
        ],
    )
    def test_rejects(self, overrides):
        with pytest.raises(ValueError):
            small_params(5, **overrides)


class TestSeedTrace:
    """Test suite for the seed trace text format"""

    def test_text_round_trip(self):
        trace = SeedTrace.from_params(small_params(7, allow_plateau=True), 2, [12, 10, 9])
        assert SeedTrace.from_text(trace.to_text()) == trace

    def test_text_lines(self):
        text = SeedTrace.from_params(small_params(6), 0, [3, 4, 3]).to_text()
        assert "master_seed=11\n" in text
        assert "allow_plateau=false\n" in text
        assert text.endswith("restart_counts=3,4,3\n")

    def test_params_rebuilds_search_settings(self):
        params = small_params(8)
        assert SeedTrace.from_params(params, 0, [20]).params() == params


class TestLocalSearch:
    """Test suite for local_search"""

    @pytest.mark.parametrize("n", [3, 4, 5, 6])
    def test_result_is_consistent(self, n):
        result = local_search(small_params(n))
        assert result.best.n == n
        assert result.count == count_crossings(result.best).count
        assert result.count >= lower_bound(n)
        assert len(result.history) == 3
        assert result.count == min(result.history)

    def test_deterministic(self):
        first = local_search(small_params(6))
        second = local_search(small_params(6))
        assert first.best == second.best
        assert first.history == second.history

    def test_serial_matches_parallel(self):
        serial = local_search(small_params(5))
        parallel = local_search(small_params(5), workers=2)
        assert serial.best == parallel.best
        assert serial.history == parallel.history

    def test_trace_records_winner(self):
        result = local_search(small_params(5))
        trace = result.seed_trace
        assert trace.restart_counts == result.history
        assert trace.restart_counts[trace.best_restart] == result.count

    def test_coordinates_stay_in_box(self):
        result = local_search(small_params(6, box_size=50))
        assert all(0 <= p.x < 50 and 0 <= p.y < 50 for p in result.best.points)

    def test_no_room_for_start(self):
        with pytest.raises(GenerationBudgetExceeded):
            local_search(small_params(5, box_size=2, restarts=1))

    def test_restart_counts_never_increase(self):
        result = local_search(small_params(7, allow_plateau=True))
        assert len(result.trajectories) == 3
        for trajectory, final in zip(result.trajectories, result.history):
            assert all(later <= earlier for earlier, later in zip(trajectory, trajectory[1:]))
            assert trajectory[-1] == final

    def test_stops_at_the_lower_bound(self):
        result = local_search(small_params(4, moves_per_restart=5000, allow_plateau=True))
        assert result.count == 0
        assert all(t.count(0) <= 1 for t in result.trajectories)

    @pytest.mark.parametrize("n, side", [(4, 3), (5, 4), (6, 5)])
    def test_never_beats_the_grid_oracle(self, n, side):
        params = small_params(n, box_size=side, perturb_radius=2, restarts=4)
        assert local_search(params).count >= grid_exhaustive(n, side, side).count

    def test_params_from_shipped_config(self):
        search_cfg = load_config(str(SHIPPED_CONFIG))["search"]
        params = SearchParams.from_config(9, search_cfg, master_seed=4, restarts=2)
        assert params.restarts == 2
        assert params.allow_plateau
        assert params.master_seed == 4
        assert SearchParams.from_config(12, search_cfg).restarts == search_cfg["restarts"]


class TestKnownMinima:
    """Test suite for reaching the known minima with the shipped budgets"""

    def test_reaches_known_values_up_to_nine_within_a_minute(self):
        search_cfg = load_config(str(SHIPPED_CONFIG))["search"]
        started = time.perf_counter()
        found = {}
        for n in range(3, 10):
            result = local_search(SearchParams.from_config(n, search_cfg, master_seed=0))
            assert result.count == count_crossings(result.best).count
            found[n] = result.count
        elapsed = time.perf_counter() - started
        assert found == {n: KNOWN_VALUES[n] for n in range(3, 10)}
        assert elapsed < 60, f"took {elapsed:.1f}s"


class TestCandidateCounts:
    """Test suite for the vectorised move scoring"""

    def test_matches_vertex_crossing_count(self, k8_peel_341):
        xy = np.array(k8_peel_341.coordinates(), dtype=np.int64)
        tensor = _orientation_tensor(xy)
        rng = np.random.default_rng(5)
        low, high = int(xy.min()), int(xy.max())
        for v in range(k8_peel_341.n):
            candidates = _candidates(rng, xy, v, 40, low, high)
            counts, valid = _candidate_counts(xy, v, candidates, tensor)
            assert valid[0]
            assert counts[0] == vertex_crossing_count(k8_peel_341.points, v)
            for row, count, ok in zip(candidates, counts, valid):
                if ok:
                    points = list(k8_peel_341.points)
                    points[v] = Point(int(row[0]), int(row[1]))
                    assert count == vertex_crossing_count(points, v)

    def test_collinear_candidates_are_invalid(self, k4_convex):
        xy = np.array(k4_convex.coordinates(), dtype=np.int64)
        a, b = xy[1], xy[2]
        on_line = np.array([xy[0], 2 * b - a, a], dtype=np.int64)
        _, valid = _candidate_counts(xy, 0, on_line, _orientation_tensor(xy))
        assert valid.tolist() == [True, False, False]


class TestImproveDrawing:
    """Test suite for improve_drawing"""

    def test_zero_budget_returns_input(self, k8_peel_341):
        assert improve_drawing(k8_peel_341, 0, seed=1) is k8_peel_341

    def test_never_worse(self, k8_peel_341):
        improved = improve_drawing(k8_peel_341, 400, seed=3)
        assert count_crossings(improved).count <= 32

    def test_optimal_stays_optimal(self, k9_nested):
        assert count_crossings(improve_drawing(k9_nested, 200, seed=0)).count == 36

    @pytest.mark.parametrize("seed", range(5))
    def test_leaves_convex_position(self, seed):
        heptagon = convex_heptagon()
        assert count_crossings(heptagon).count == 35
        assert count_crossings(improve_drawing(heptagon, 2000, seed)).count < 35


class TestGridExhaustive:
    """Test suite for the grid oracle"""

    @pytest.mark.parametrize("n, w, h, expected", [(4, 3, 3, 0), (5, 4, 4, 1), (6, 5, 5, 3)])
    def test_known_minima(self, n, w, h, expected):
        result = grid_exhaustive(n, w, h)
        assert result.count == expected
        assert count_crossings(result.best).count == expected
        assert all(0 <= p.x < w and 0 <= p.y < h for p in result.best.points)

    def test_deterministic_witness(self):
        assert grid_exhaustive(5, 4, 4).best == grid_exhaustive(5, 4, 4).best

    def test_budget(self):
        with pytest.raises(BudgetExceeded) as info:
            grid_exhaustive(6, 10, 10, limit=1000)
        assert info.value.subsets > info.value.limit == 1000

    def test_no_general_position_subset(self):
        with pytest.raises(DomainError):
            grid_exhaustive(3, 1, 5)

    def test_orientation_table(self):
        coords = np.array([(0, 0), (1, 0), (0, 1), (2, 0)])
        sign = orientation_table(coords)
        assert sign[0][1][2] == 1
        assert sign[0][2][1] == -1
        assert sign[0][1][3] == 0

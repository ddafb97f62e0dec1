"""Pytest configuration and fixtures."""
import sys
from pathlib import Path

import pytest

# Add src directory to Python path for imports
src_path = Path(__file__).parent.parent / "src"
sys.path.insert(0, str(src_path))

# Also add project root so scripts/ can be located
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

CORPUS_DIR = project_root / "data" / "corpus"


def _load(name: str):
    from drawing_io import read_drawing

    return read_drawing(CORPUS_DIR / name)


@pytest.fixture
def corpus_dir() -> Path:
    return CORPUS_DIR


@pytest.fixture
def k4_convex():
    """Convex quadrilateral: one crossing."""
    return _load("k4_convex.pts")


@pytest.fixture
def k4_triangle():
    """Triangle with one interior point: no crossings."""
    return _load("k4_triangle.pts")


@pytest.fixture
def k6_ccc():
    """Nested K6 with three concave kites (concentric triangles), 3 crossings."""
    return _load("k6_ccc.pts")


@pytest.fixture
def k6_vvv():
    """Nested K6 with three convex kites, 6 crossings."""
    return _load("k6_vvv.pts")


@pytest.fixture
def k9_nested():
    """Clustered nested-triangle K9 with 36 crossings, every colour pair CCC."""
    return _load("k9_nested.pts")


@pytest.fixture
def k8_peel_341():
    """K8 peeling as [3, 4, 1], 32 crossings."""
    return _load("k8_3_4_1.pts")


@pytest.fixture
def k10_white_blue():
    """Clustered K9 plus vertex 9 inside the blue triangle, 64 crossings."""
    return _load("k10_white_blue.pts")


@pytest.fixture
def k10_white_green():
    """Clustered K9 plus vertex 9 between the green and blue triangles, 64 crossings."""
    return _load("k10_white_green.pts")


@pytest.fixture
def k10_ttq():
    """K10 peeling as [3, 3, 4], 75 crossings."""
    return _load("k10_ttq.pts")

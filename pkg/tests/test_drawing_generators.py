"""
Tests for the seeded drawing generators
"""
import pytest

from errors import GenerationBudgetExceeded
from drawing_generators import (
    K10Shape,
    generate_k10_shape,
    generate_nested_k6,
    generate_nested_k9,
    generate_optimal_k9,
    generate_peel_shape,
)
from geometry_core import count_crossings, point_in_triangle
from hull_color import Colour, color_by_hulls, peel_hulls
from kite_config import ConfigurationClass, classify_configuration


class TestK10Shape:
    """Test suite for K10Shape enum"""

    @pytest.mark.parametrize(
        "text, expected",
        [
            ("whiteInGreen", K10Shape.WHITE_IN_GREEN),
            ("white-in-blue", K10Shape.WHITE_IN_BLUE),
            ("TRI_TRI_QUAD", K10Shape.TRI_TRI_QUAD),
        ],
    )
    def test_from_string(self, text, expected):
        assert K10Shape.from_string(text) is expected

    def test_from_string_invalid(self):
        with pytest.raises(ValueError, match="Invalid K10 shape"):
            K10Shape.from_string("square")


class TestNested:
    """Test suite for nested-triangle generators"""

    @pytest.mark.parametrize("seed", [0, 1, 17])
    def test_nested_k9_profile(self, seed):
        d = generate_nested_k9(seed)
        hulls = peel_hulls(d)
        assert hulls.profile == (3, 3, 3)
        assert set(hulls.layers[0]) == {0, 1, 2}
        assert set(hulls.layers[2]) == {6, 7, 8}

    def test_same_seed_same_drawing(self):
        assert generate_nested_k9(5) == generate_nested_k9(5)
        assert generate_nested_k6(5) == generate_nested_k6(5)

    def test_different_seeds_differ(self):
        assert generate_nested_k9(1) != generate_nested_k9(2)

    @pytest.mark.parametrize("config_class", [ConfigurationClass.CCC, ConfigurationClass.VVV])
    def test_nested_k6_of_class(self, config_class):
        d = generate_nested_k6(3, config_class)
        assert peel_hulls(d).profile == (3, 3)
        assert classify_configuration(color_by_hulls(d)).config_class is config_class

    def test_optimal_k9(self):
        d = generate_optimal_k9(0)
        assert peel_hulls(d).profile == (3, 3, 3)
        assert count_crossings(d).count == 36


class TestK10:
    """Test suite for the K10 families"""

    def test_tri_tri_quad(self):
        d = generate_k10_shape(2, K10Shape.TRI_TRI_QUAD)
        assert peel_hulls(d).profile == (3, 3, 4)

    def test_white_in_blue(self):
        d = generate_k10_shape(4, "whiteInBlue")
        cd = color_by_hulls(d)
        assert cd.white == 9
        assert cd.colour[9] is Colour.WHITE

    def test_white_in_green(self):
        d = generate_k10_shape(4, K10Shape.WHITE_IN_GREEN)
        green, blue = d.points[3:6], d.points[6:9]
        assert point_in_triangle(d[9], *green)
        assert not point_in_triangle(d[9], *blue)
        assert color_by_hulls(d, white=9).vertices_of(Colour.BLUE) == (6, 7, 8)


class TestPeelShape:
    """Test suite for generate_peel_shape"""

    @pytest.mark.parametrize("profile", [(3, 1), (3, 3), (3, 3, 1)])
    def test_profiles(self, profile):
        assert peel_hulls(generate_peel_shape(8, profile)).profile == profile

    @pytest.mark.parametrize("profile", [(), (4, 1)])
    def test_profile_must_start_with_triangle(self, profile):
        with pytest.raises(ValueError):
            generate_peel_shape(0, profile)


class TestBudget:
    """Test suite for the retry budget"""

    def test_zero_budget(self):
        with pytest.raises(GenerationBudgetExceeded) as info:
            generate_nested_k9(0, budget=0)
        assert info.value.attempts == 0

    def test_impossible_profile_exhausts_budget(self):
        with pytest.raises(GenerationBudgetExceeded):
            generate_peel_shape(0, (3, 1, 1), budget=50)

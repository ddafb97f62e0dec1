"""
Tests for the crossing-number bounds
"""
from fractions import Fraction

import pytest

from bounds import (
    KNOWN_VALUES,
    NU_STAR_UPPER,
    hypothetical_ratio,
    jensen_upper,
    k11_candidates,
    lower_bound,
    nu_star_bracket,
    ratio_lower_bound,
    recursive_lower_bound,
    subgraph_lower_bound,
)
from errors import DomainError


class TestJensenUpper:
    """Test suite for the explicit drawing family"""

    @pytest.mark.parametrize("n", range(5, 10))
    def test_matches_known_values(self, n):
        assert jensen_upper(n) == KNOWN_VALUES[n]

    def test_k10_and_k11(self):
        assert jensen_upper(10) == 63
        assert jensen_upper(11) == 102

    def test_never_below_known(self):
        for n, value in KNOWN_VALUES.items():
            assert jensen_upper(n) >= value

    def test_domain(self):
        with pytest.raises(DomainError):
            jensen_upper(2)


class TestSubgraphBound:
    """Test suite for the subgraph counting bound"""

    def test_k11_from_k10(self):
        assert subgraph_lower_bound(11, 10, 62) == 98

    def test_k10_from_k9(self):
        assert subgraph_lower_bound(10, 9, 36) == 60

    def test_k6_from_k5(self):
        assert subgraph_lower_bound(6, 5, 1) == 3

    @pytest.mark.parametrize("n, a, cr_a", [(6, 4, 0), (6, 7, 9), (8, 6, -1)])
    def test_domain(self, n, a, cr_a):
        with pytest.raises(DomainError):
            subgraph_lower_bound(n, a, cr_a)


class TestRecursiveTable:
    """Test suite for the recursive lower-bound table"""

    def test_first_rows(self):
        table = recursive_lower_bound(12)
        assert [row.lower for row in table] == [62, 98, 147]
        assert table[10].jensen_upper == 63
        assert table[11].ratio == Fraction(98, 330)

    def test_n_400(self):
        last = recursive_lower_bound(400).last
        assert last.n == 400
        assert last.lower == 315356975
        assert last.ratio == Fraction(315356975, 1050739900)

    def test_lower_never_exceeds_jensen(self):
        for row in recursive_lower_bound(60):
            assert row.lower <= row.jensen_upper

    def test_domain(self):
        with pytest.raises(DomainError):
            recursive_lower_bound(9)
        with pytest.raises(DomainError):
            recursive_lower_bound(20, base_n=4, base_cr=0)

    def test_delimited_export(self):
        text = recursive_lower_bound(11).to_delimited(places=4)
        lines = text.splitlines()
        assert lines[0] == "n,lower,jensen_upper,ratio,ratio_fraction"
        assert lines[1].startswith("10,62,63,")
        assert lines[2] == "11,98,102,0.2970,49/165"
        assert text.endswith("\n")

    def test_delimited_without_header(self):
        text = recursive_lower_bound(10).to_delimited(delimiter="\t", header=False)
        assert text.split("\t")[:3] == ["10", "62", "63"]


class TestRatios:
    """Test suite for ratios and the limit bracket"""

    def test_ratio(self):
        assert ratio_lower_bound(9, 36) == Fraction(36, 126)

    def test_ratio_domain(self):
        with pytest.raises(DomainError):
            ratio_lower_bound(3, 0)

    def test_bracket(self):
        lower, upper = nu_star_bracket()
        assert upper == NU_STAR_UPPER
        assert Fraction(3001, 10000) < lower < upper

    def test_hypothetical_base_raises_ratio(self):
        assert hypothetical_ratio(10, 63) > hypothetical_ratio(10, 62)

    @pytest.mark.parametrize(
        "base_n, base_cr, lower",
        [(11, 100, 320943928), (11, 102, 326627026), (12, 156, 334553535)],
    )
    def test_hypothetical_values(self, base_n, base_cr, lower):
        assert hypothetical_ratio(base_n, base_cr) == Fraction(lower, 1050739900)


class TestLowerBound:
    """Test suite for lower_bound and the K11 candidates"""

    def test_known_values(self):
        for n, value in KNOWN_VALUES.items():
            assert lower_bound(n) == value

    def test_recursive_above_ten(self):
        assert lower_bound(11) == 98
        assert lower_bound(12) == 147

    def test_k11_candidates(self):
        assert k11_candidates() == {98, 100, 102}

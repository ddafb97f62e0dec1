"""
Tests for reading and writing drawing files
"""
import pytest

from drawing_io import parse_drawing, read_drawing, save_drawing, write_drawing
from errors import GeneralPositionViolation, ParseError
from geometry_core import Drawing, Point, count_crossings


class TestParse:
    """Test suite for parse_drawing"""

    def test_triangle(self):
        d = parse_drawing("3\n0 0\n4 0\n2 3\n")
        assert d.points == (Point(0, 0), Point(4, 0), Point(2, 3))

    def test_bytes_and_missing_final_newline(self):
        d = parse_drawing(b"3\n0 0\n4 0\n2 3")
        assert d.n == 3

    def test_comment_header(self):
        d = parse_drawing("# from a search\n# seed=4\n4\n0 0\n10 0\n0 10\n3 3\n")
        assert d.n == 4
        assert count_crossings(d).count == 0

    def test_negative_coordinates(self):
        d = parse_drawing("3\n-5 -7\n4 0\n2 3\n")
        assert d[0] == Point(-5, -7)

    def test_collinear_triple_is_named(self):
        with pytest.raises(GeneralPositionViolation) as info:
            parse_drawing("3\n0 0\n1 1\n2 2\n")
        assert info.value.triple == (0, 1, 2)

    @pytest.mark.parametrize(
        "text, line",
        [
            ("", 1),
            ("# only a comment\n", 2),
            ("three\n0 0\n4 0\n2 3\n", 1),
            ("2\n0 0\n1 1\n", 1),
            ("3\n0 0\n4 0\n", 4),
            ("3\n0 0\n4 0\n2 3\n9 9\n", 5),
            ("3\n0 0\n4  0\n2 3\n", 3),
            ("3\n0 0\n4 0.5\n2 3\n", 3),
            ("3\n0 0\n4 0\n2\n", 4),
            ("3\n0 0\n4 0\n2 +3\n", 4),
            ("3\n0 0\n99999999 0\n2 3\n", 3),
        ],
    )
    def test_errors_carry_line_numbers(self, text, line):
        with pytest.raises(ParseError) as info:
            parse_drawing(text)
        assert info.value.line == line
        assert str(info.value).startswith(f"line {line}:")

    def test_not_utf8(self):
        with pytest.raises(ParseError):
            parse_drawing(b"\xff\xfe3\n")


class TestWrite:
    """Test suite for write_drawing and the file helpers"""

    def test_canonical_bytes(self):
        d = Drawing.from_coordinates([(0, 0), (4, 0), (2, 3)])
        assert write_drawing(d) == b"3\n0 0\n4 0\n2 3\n"

    def test_comments(self):
        d = Drawing.from_coordinates([(0, 0), (4, 0), (2, 3)])
        data = write_drawing(d, comments=["crossings=0", "# kept"])
        assert data.startswith(b"# crossings=0\n# kept\n3\n")
        assert parse_drawing(data) == d

    @pytest.mark.parametrize(
        "name",
        ["k4_convex.pts", "k6_ccc.pts", "k9_nested.pts", "k10_ttq.pts"],
    )
    def test_corpus_files_are_canonical(self, corpus_dir, name):
        data = (corpus_dir / name).read_bytes()
        assert write_drawing(parse_drawing(data)) == data

    def test_save_and_read(self, tmp_path, k9_nested):
        target = save_drawing(k9_nested, tmp_path / "out" / "k9.pts", comments=["n=9"])
        assert target.exists()
        assert read_drawing(target) == k9_nested

"""
Plain-text drawing files.

    # optional comment lines
    4
    0 0
    3 0
    0 3
    1 1

A count line, then exactly that many "x y" lines of decimal integers
separated by one space. Writing produces the canonical form, so a file
without comments survives a parse/write round trip byte for byte.
"""
from __future__ import annotations

import logging
import re
from pathlib import Path
from typing import Iterable, List, Union

from errors import CoordinateBoundError, ParseError
from geometry_core import Drawing, Point

logger = logging.getLogger(__name__)

_INTEGER = re.compile(r"-?[0-9]+")


def _integer(token: str, line: int, what: str) -> int:
    if not _INTEGER.fullmatch(token):
        raise ParseError(f"{what} is not a decimal integer: {token!r}", line)
    return int(token)


def parse_drawing(data: Union[bytes, str]) -> Drawing:
    """
    Parse a drawing file.

    Args:
        data: File contents

    Returns:
        The Drawing, vertex i being the i-th coordinate line

    Raises:
        ParseError: Malformed input, with its 1-based line number
        GeneralPositionViolation: Duplicate points or a collinear triple
    """
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as e:
            raise ParseError(f"not UTF-8 text: {e.reason}", 1) from None
    lines = data.split("\n")
    if lines and lines[-1] == "":
        lines.pop()

    index = 0
    while index < len(lines) and lines[index].startswith("#"):
        index += 1
    if index == len(lines):
        raise ParseError("missing vertex count", index + 1)

    count_line = index + 1
    n = _integer(lines[index].strip(), count_line, "vertex count")
    if n < 3:
        raise ParseError(f"a drawing needs at least 3 vertices, got {n}", count_line)
    body = lines[index + 1:]
    if len(body) < n:
        raise ParseError(f"expected {n} coordinate lines, found {len(body)}", count_line + len(body) + 1)
    if len(body) > n:
        raise ParseError(f"unexpected content after {n} coordinate lines", count_line + n + 1)

    points: List[Point] = []
    for offset, text in enumerate(body):
        line = count_line + offset + 1
        tokens = text.split(" ")
        if len(tokens) != 2:
            raise ParseError(f"expected 'x y', got {text!r}", line)
        x = _integer(tokens[0], line, "x")
        y = _integer(tokens[1], line, "y")
        try:
            points.append(Point(x, y))
        except CoordinateBoundError as e:
            raise ParseError(str(e), line) from None

    logger.debug("parsed drawing with %d vertices", n)
    return Drawing(tuple(points))


def write_drawing(d: Drawing, comments: Iterable[str] = ()) -> bytes:
    """Canonical file bytes for a drawing, with optional '#' comment lines."""
    lines = [f"# {c}" if not c.startswith("#") else c for c in comments]
    lines.append(str(d.n))
    lines.extend(f"{p.x} {p.y}" for p in d.points)
    return ("\n".join(lines) + "\n").encode("utf-8")


def read_drawing(path: Union[str, Path]) -> Drawing:
    """Read and parse a drawing file."""
    return parse_drawing(Path(path).expanduser().read_bytes())


def save_drawing(d: Drawing, path: Union[str, Path], comments: Iterable[str] = ()) -> Path:
    """Write a drawing file, creating parent directories."""
    target = Path(path).expanduser()
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_bytes(write_drawing(d, comments))
    logger.info("wrote %d-vertex drawing to %s", d.n, target)
    return target

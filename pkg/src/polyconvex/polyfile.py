"""Plain-text polygon files.

One vertex per line: two whitespace-separated coordinates.  A coordinate is
an integer ("3"), a fraction ("3/4") or a decimal ("0.25"); decimals convert
exactly, so "0.1" is one tenth, never a binary float.  Blank lines and lines
starting with '#' are ignored.  Writing a polygon and parsing it back
reproduces it exactly.
"""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path
from typing import Sequence

from .geometry import Point


class PolygonParseError(ValueError):
    def __init__(self, message: str, line_number: int | None = None):
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


def parse_scalar(token: str, line_number: int | None = None):
    try:
        value = Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise PolygonParseError(f"bad coordinate {token!r}", line_number) from None
    return value.numerator if value.denominator == 1 else value


def parse_polygon(text: str) -> tuple:
    vertices = []
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise PolygonParseError(
                f"expected two coordinates, got {len(parts)}", line_number)
        vertices.append(Point(parse_scalar(parts[0], line_number),
                              parse_scalar(parts[1], line_number)))
    return tuple(vertices)


def format_scalar(value) -> str:
    if isinstance(value, Fraction) and value.denominator != 1:
        return f"{value.numerator}/{value.denominator}"
    return str(int(value))


def format_polygon(vertices: Sequence[Point]) -> str:
    return "".join(f"{format_scalar(x)} {format_scalar(y)}\n"
                   for x, y in vertices)


def read_polygon_file(path) -> tuple:
    return parse_polygon(Path(path).read_text())


def write_polygon_file(path, vertices: Sequence[Point]) -> None:
    Path(path).write_text(format_polygon(vertices))

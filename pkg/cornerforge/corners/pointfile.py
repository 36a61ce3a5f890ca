"""
Plain-text point-set files.

Format:
    N=<bound>
    x,y
    x,y
    ...

Coordinates are decimal, 0-based, one point per line. Whitespace around
tokens is ignored, as are blank lines. Duplicate points are an error.
"""

import logging
import re
from typing import Iterable, Iterator, Tuple

from ..errors import PointFileError
from .pointset import PointSet

logger = logging.getLogger(__name__)

_HEADER = re.compile(r'^\s*N\s*=\s*(\d+)\s*$')
_POINT = re.compile(r'^\s*(\d+)\s*,\s*(\d+)\s*$')


def parse_points(lines: Iterable[str]) -> PointSet:
    """
    Parse point-set file content.

    Args:
        lines: File lines (with or without trailing newlines)

    Returns:
        The parsed PointSet

    Raises:
        PointFileError: With the 1-based line number of the first bad line
    """
    bound = None
    points = []
    seen = set()

    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line:
            continue

        if bound is None:
            match = _HEADER.match(line)
            if not match:
                raise PointFileError(f"expected header 'N=<bound>', got {line!r}", lineno)
            bound = int(match.group(1))
            continue

        match = _POINT.match(line)
        if not match:
            raise PointFileError(f"expected 'x,y', got {line!r}", lineno)
        point = (int(match.group(1)), int(match.group(2)))
        if point[0] >= bound or point[1] >= bound:
            raise PointFileError(f"point {point} outside [0, {bound})^2", lineno)
        if point in seen:
            raise PointFileError(f"duplicate point {point}", lineno)
        seen.add(point)
        points.append(point)

    if bound is None:
        raise PointFileError("missing header 'N=<bound>'", 1)
    return PointSet(bound, points)


def read_points(filename: str) -> PointSet:
    with open(filename, 'r', encoding='utf-8') as f:
        return parse_points(f)


def format_points(bound: int, points: Iterable[Tuple[int, int]]) -> Iterator[str]:
    """Yield file lines (newline-terminated) for a stream of points."""
    yield f"N={bound}\n"
    for x, y in points:
        yield f"{x},{y}\n"


def write_points(filename: str, bound: int, points: Iterable[Tuple[int, int]]) -> int:
    """
    Stream points into a point-set file.

    Args:
        filename: Output path
        bound: Grid side N written in the header
        points: Points to write, in the order given

    Returns:
        Number of points written
    """
    count = -1
    with open(filename, 'w', encoding='utf-8') as f:
        for count, line in enumerate(format_points(bound, points)):
            f.write(line)
    logger.info("Wrote %d points to %s", count, filename)
    return count

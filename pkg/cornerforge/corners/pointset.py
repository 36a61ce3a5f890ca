"""
Point sets in the grid [0, N) x [0, N).

The grid is 0-based: [N] is realised as {0, ..., N-1}. Corner-freeness is
translation invariant, so the choice of origin does not affect any result.
"""

from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, NamedTuple, Tuple

from ..errors import DomainError


class Point(NamedTuple):
    x: int
    y: int


@dataclass(frozen=True)
class CornerWitness:
    """The corner (x, y), (x + d, y), (x, y + d); d may be negative."""

    x: int
    y: int
    d: int

    def __post_init__(self):
        if self.d == 0:
            raise DomainError("corner offset d must be nonzero")

    def points(self) -> Tuple[Point, Point, Point]:
        return (Point(self.x, self.y),
                Point(self.x + self.d, self.y),
                Point(self.x, self.y + self.d))

    def to_dict(self) -> Dict[str, int]:
        return {'x': self.x, 'y': self.y, 'd': self.d}


class PointSet:
    """
    Immutable finite set of grid points with O(1) membership and a row index.

    Args:
        bound: Grid side N; every point must satisfy 0 <= x, y < N
        points: Points as (x, y) pairs; duplicates are rejected
    """

    def __init__(self, bound: int, points: Iterable[Tuple[int, int]] = ()):
        if bound < 0:
            raise DomainError(f"grid bound must be >= 0, got N={bound}")
        self.bound = bound

        members = set()
        rows: Dict[int, List[int]] = {}
        for x, y in points:
            p = Point(int(x), int(y))
            if not (0 <= p.x < bound and 0 <= p.y < bound):
                raise DomainError(f"point {tuple(p)} outside [0, {bound})^2")
            if p in members:
                raise DomainError(f"duplicate point {tuple(p)}")
            members.add(p)
            rows.setdefault(p.y, []).append(p.x)

        self._points = frozenset(members)
        self._rows = {y: tuple(sorted(xs)) for y, xs in rows.items()}

    def __contains__(self, point) -> bool:
        return tuple(point) in self._points

    def __len__(self) -> int:
        return len(self._points)

    def __iter__(self) -> Iterator[Point]:
        """Points in lexicographic (x, y) order."""
        return iter(sorted(self._points))

    def __eq__(self, other) -> bool:
        if not isinstance(other, PointSet):
            return NotImplemented
        return self.bound == other.bound and self._points == other._points

    def __hash__(self) -> int:
        return hash((self.bound, self._points))

    def __repr__(self) -> str:
        return f"PointSet(bound={self.bound}, size={len(self)})"

    def rows(self) -> List[int]:
        """Occupied row indices y, ascending."""
        return sorted(self._rows)

    def row(self, y: int) -> Tuple[int, ...]:
        """Sorted x values present in row y."""
        return self._rows.get(y, ())

    def density(self) -> float:
        if self.bound == 0:
            return 0.0
        return len(self) / (self.bound * self.bound)

    def translate(self, dx: int, dy: int, bound: int) -> 'PointSet':
        """Shift every point by (dx, dy) into a grid of side `bound`."""
        return PointSet(bound, ((x + dx, y + dy) for x, y in self._points))

    def transpose(self) -> 'PointSet':
        """Reflect in the diagonal, (x, y) -> (y, x); corners map to corners."""
        return PointSet(self.bound, ((y, x) for x, y in self._points))

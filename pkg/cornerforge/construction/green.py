"""
Corner-free sets A_r from base-q digit vectors.

A pair (x, y) in [0, q^d)^2 belongs to A_r when every digit pair (x_i, y_i)
lies in the window q/2 <= x_i + y_i < 3q/2 and the digit vectors are at squared
distance exactly r. Inside the window, digit sums of corner points cannot
carry, which turns a corner into three vectors on one sphere related by the
parallelogram law; the offset is forced to zero.
"""

import logging
import math
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from ..corners.pointset import Point
from ..digits import digit_tuple, digit_add, radius_distribution, reachable_radii
from ..errors import DomainError, ResourceError

logger = logging.getLogger(__name__)


def max_radius(q: int, d: int) -> int:
    return d * (q - 1) ** 2


@dataclass(frozen=True)
class ConstructionParams:
    """Parameters (q, d, r) of one A_r; N = q^d is derived exactly."""

    q: int
    d: int
    r: Optional[int] = None
    N: int = field(init=False)

    def __post_init__(self):
        if self.q < 2:
            raise DomainError(f"base q must be >= 2, got q={self.q}")
        if self.d < 1:
            raise DomainError(f"dimension d must be >= 1, got d={self.d}")
        if self.r is not None and not 0 <= self.r <= max_radius(self.q, self.d):
            raise DomainError(
                f"radius r must lie in [0, {max_radius(self.q, self.d)}], got r={self.r}")
        object.__setattr__(self, 'N', self.q ** self.d)

    def with_radius(self, r: int) -> 'ConstructionParams':
        return ConstructionParams(self.q, self.d, r)


@dataclass(frozen=True)
class CountTable:
    """Exact number of A_r members per radius r (only nonzero radii stored)."""

    q: int
    d: int
    entries: Dict[int, int]

    def __getitem__(self, r: int) -> int:
        return self.entries.get(r, 0)

    def __iter__(self):
        return iter(sorted(self.entries))

    def items(self) -> List[Tuple[int, int]]:
        return sorted(self.entries.items())

    def total(self) -> int:
        return sum(self.entries.values())


def in_window(a: int, b: int, q: int) -> bool:
    """
    Digit-window test q/2 <= a + b < 3q/2, in exact integers.

    Raises:
        DomainError: If a digit is outside [0, q)
    """
    if not (0 <= a < q and 0 <= b < q):
        raise DomainError(f"digits ({a}, {b}) must lie in [0, {q})")
    return q <= 2 * (a + b) < 3 * q


@lru_cache(maxsize=None)
def window_pairs(q: int) -> Tuple[Tuple[int, int], ...]:
    """All digit pairs (a, b) in the window, lexicographic."""
    if q < 2:
        raise DomainError(f"base q must be >= 2, got q={q}")
    return tuple((a, b) for a in range(q) for b in range(q) if q <= 2 * (a + b) < 3 * q)


def window_size(q: int) -> int:
    """
    W(q), the number of digit pairs in the window.

    Counted by digit sum: s = a + b has min(s, 2q - 2 - s) + 1 representations.
    """
    if q < 2:
        raise DomainError(f"base q must be >= 2, got q={q}")
    lo = (q + 1) // 2          # smallest s with 2s >= q
    hi = (3 * q - 1) // 2      # largest s with 2s < 3q
    return sum(min(s, 2 * q - 2 - s) + 1 for s in range(lo, min(hi, 2 * q - 2) + 1))


def total_window_pairs(q: int, d: int) -> int:
    return window_size(q) ** d


def member(x: int, y: int, p: ConstructionParams) -> bool:
    """
    Membership of (x, y) in A_r.

    Raises:
        DomainError: If r is missing or a coordinate is outside [0, N)
    """
    if p.r is None:
        raise DomainError("membership needs a radius r")
    if not (0 <= x < p.N and 0 <= y < p.N):
        raise DomainError(f"point ({x}, {y}) outside [0, {p.N})^2")
    q = p.q
    radius = 0
    for a, b in zip(digit_tuple(x, q, p.d), digit_tuple(y, q, p.d)):
        if not q <= 2 * (a + b) < 3 * q:
            return False
        radius += (a - b) * (a - b)
    return radius == p.r


@lru_cache(maxsize=64)
def _radius_counts(q: int, d: int) -> Tuple[int, ...]:
    weights = Counter((a - b) ** 2 for a, b in window_pairs(q))
    logger.debug("Counting A_r for q=%d, d=%d (W=%d)", q, d, sum(weights.values()))
    return tuple(radius_distribution(weights, d))


def count_by_r(q: int, d: int) -> CountTable:
    """
    Exact |A_r| for every radius, by d-fold convolution of the one-digit
    distribution of (a - b)^2 over window pairs. No pairs are enumerated.
    """
    ConstructionParams(q, d)
    counts = _radius_counts(q, d)
    return CountTable(q, d, {r: c for r, c in enumerate(counts) if c})


def best_r(q: int, d: int) -> Tuple[int, int]:
    """
    The radius with the largest A_r (smallest radius on ties).

    Returns:
        (r, |A_r|)
    """
    table = count_by_r(q, d)
    r, count = max(table.items(), key=lambda item: (item[1], -item[0]))
    return r, count


def pigeonhole_floor(q: int, d: int) -> int:
    """ceil(W(q)^d / (d(q-1)^2 + 1)); best_r never does worse."""
    radii = max_radius(q, d) + 1
    return -(-total_window_pairs(q, d) // radii)


def choose_params(d: int) -> ConstructionParams:
    """
    q = floor((2/sqrt 3)^d), N = q^d.

    q is the largest k with k^2 3^d <= 4^d, i.e. isqrt(floor(4^d / 3^d)).

    Raises:
        DomainError: For d <= 4, where q < 2
    """
    if d < 1:
        raise DomainError(f"dimension d must be >= 1, got d={d}")
    q = math.isqrt(4 ** d // 3 ** d)
    if q < 2:
        raise DomainError(f"construction degenerate: q < 2 (d={d}, q={q})")
    return ConstructionParams(q, d)


def cocycle_holds(u: int, v: int, u2: int, v2: int, q: int, d: int) -> bool:
    """
    Check pi(u) + pi(v) == pi(u2) + pi(v2) coordinatewise.

    Only meaningful for u + v == u2 + v2 with both pairs inside the window at
    every digit; there the identity always holds.
    """
    return (digit_add(digit_tuple(u, q, d), digit_tuple(v, q, d))
            == digit_add(digit_tuple(u2, q, d), digit_tuple(v2, q, d)))


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _stream_members(q: int, d: int, r: int) -> Iterator[Point]:
    pairs = window_pairs(q)
    partners: Dict[int, List[int]] = {a: [] for a in range(q)}
    for a, b in pairs:
        partners[a].append(b)
    squares = {a: sorted({(a - b) ** 2 for b in partners[a]}) for a in range(q)}
    # radii reachable by k free positions, any x digits
    any_reach = [reachable_radii([(a - b) ** 2 for a, b in pairs], k) for k in range(d + 1)]
    limit = (1 << (r + 1)) - 1

    def prefix_feasible(prefix: int, free: int) -> bool:
        return any((any_reach[free] >> (r - t)) & 1 for t in _bits(prefix & limit))

    def y_digits(xd: Sequence[int], low_reach: Sequence[int], pos: int,
                 budget: int, y: int, x: int) -> Iterator[Point]:
        if pos < 0:
            yield Point(x, y)
            return
        a = xd[pos]
        for b in partners[a]:
            s = (a - b) * (a - b)
            if s <= budget and (low_reach[pos] >> (budget - s)) & 1:
                yield from y_digits(xd, low_reach, pos - 1, budget - s, y * q + b, x)

    def x_digits(pos: int, prefix: int, xd: List[int], x: int) -> Iterator[Point]:
        if pos < 0:
            low_reach = [1]
            for i in range(d):
                mask = 0
                for s in squares[xd[i]]:
                    mask |= low_reach[i] << s
                low_reach.append(mask)
            if (low_reach[d] >> r) & 1:
                yield from y_digits(xd, low_reach, d - 1, r, 0, x)
            return
        for a in range(q):
            grown = 0
            for s in squares[a]:
                grown |= prefix << s
            if prefix_feasible(grown, pos):
                xd[pos] = a
                yield from x_digits(pos - 1, grown, xd, x * q + a)

    yield from x_digits(d - 1, 1, [0] * d, 0)


def enumerate_A_r(p: ConstructionParams, max_points: Optional[int] = None) -> Iterator[Point]:
    """
    Stream the members of A_r in lexicographic (x, y) order.

    x digits are fixed most significant first, then y digits, each step only
    taking digit pairs from the window whose radius still leaves the remaining
    budget reachable. Memory use is O(d) plus the consumer's storage.

    Args:
        p: Parameters with r set
        max_points: Refuse to start if |A_r| exceeds this

    Returns:
        Iterator of Points

    Raises:
        DomainError: If r is missing
        ResourceError: If |A_r| > max_points (the exact size is attached)
    """
    if p.r is None:
        raise DomainError("enumeration needs a radius r")
    expected = count_by_r(p.q, p.d)[p.r]
    if max_points is not None and expected > max_points:
        raise ResourceError(
            f"A_r has {expected} points for q={p.q}, d={p.d}, r={p.r}, "
            f"above the cap of {max_points}", count=expected)
    logger.info("Enumerating %d points of A_r (q=%d, d=%d, r=%d)", expected, p.q, p.d, p.r)
    return _stream_members(p.q, p.d, p.r)

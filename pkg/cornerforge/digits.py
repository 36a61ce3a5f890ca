"""
Base-q digit codec.

An integer x in [0, q^d) corresponds to the vector of its base-q digits
(x_0, ..., x_{d-1}), least significant first, so that x = sum x_i q^i.
Leading zeros are kept: every vector has length exactly d.
"""

import logging
from dataclasses import dataclass
from typing import Iterator, List, Mapping, Sequence, Tuple

import numpy as np

from .errors import DomainError

logger = logging.getLogger(__name__)


def _check_base(q: int, d: int) -> None:
    if q < 2:
        raise DomainError(f"base q must be >= 2, got q={q}")
    if d < 1:
        raise DomainError(f"length d must be >= 1, got d={d}")


@dataclass(frozen=True)
class DigitVector:
    """Base-q digits of an integer, least significant digit first."""

    digits: Tuple[int, ...]
    base: int

    def __post_init__(self):
        object.__setattr__(self, 'digits', tuple(int(x) for x in self.digits))
        _check_base(self.base, len(self.digits))
        for i, digit in enumerate(self.digits):
            if not 0 <= digit < self.base:
                raise DomainError(
                    f"digit {i} is {digit}, outside [0, {self.base})")

    @property
    def length(self) -> int:
        return len(self.digits)

    @property
    def value(self) -> int:
        return from_digits(self)

    def __iter__(self) -> Iterator[int]:
        return iter(self.digits)

    def __getitem__(self, i: int) -> int:
        return self.digits[i]

    def __len__(self) -> int:
        return len(self.digits)


def digit_tuple(x: int, q: int, d: int) -> Tuple[int, ...]:
    """Digits of x as a plain tuple, without validation (hot loops only)."""
    out = []
    for _ in range(d):
        x, digit = divmod(x, q)
        out.append(digit)
    return tuple(out)


def to_digits(x: int, q: int, d: int) -> DigitVector:
    """
    Encode an integer as its base-q digit vector.

    Args:
        x: Integer in [0, q^d)
        q: Base, at least 2
        d: Number of digits, at least 1

    Returns:
        DigitVector of length d, least significant digit first

    Raises:
        DomainError: If q < 2, d < 1 or x is outside [0, q^d)
    """
    _check_base(q, d)
    if x < 0:
        raise DomainError(f"x must be >= 0, got x={x}")
    if x >= q ** d:
        raise DomainError(f"x must be < q^d = {q ** d}, got x={x}")
    return DigitVector(digit_tuple(x, q, d), q)


def from_digits(v: DigitVector) -> int:
    """Evaluate sum v_i q^i (Horner, most significant digit first)."""
    value = 0
    for digit in reversed(v.digits):
        value = value * v.base + digit
    return value


def sq_distance(u: DigitVector, v: DigitVector) -> int:
    """
    Squared Euclidean distance between two digit vectors.

    Raises:
        DomainError: If the vectors differ in base or length
    """
    if u.base != v.base:
        raise DomainError(f"base mismatch: {u.base} != {v.base}")
    if len(u) != len(v):
        raise DomainError(f"length mismatch: {len(u)} != {len(v)}")
    return sum((a - b) * (a - b) for a, b in zip(u.digits, v.digits))


def digit_add(u: Sequence[int], v: Sequence[int]) -> Tuple[int, ...]:
    """Coordinatewise sum, no reduction mod q."""
    if len(u) != len(v):
        raise DomainError(f"length mismatch: {len(u)} != {len(v)}")
    return tuple(a + b for a, b in zip(u, v))


def digit_sub(u: Sequence[int], v: Sequence[int]) -> Tuple[int, ...]:
    """Coordinatewise difference."""
    if len(u) != len(v):
        raise DomainError(f"length mismatch: {len(u)} != {len(v)}")
    return tuple(a - b for a, b in zip(u, v))


def sq_norm(a: Sequence[int]) -> int:
    return sum(x * x for x in a)


def radius_distribution(weights: Mapping[int, int], length: int) -> List[int]:
    """
    Distribution of the total radius over `length` independent positions.

    Each position contributes radius s with multiplicity weights[s]; the result
    is the `length`-fold convolution, as exact Python integers. The per-position
    support is sparse (squares only), so each step is one shifted add per
    support point on an object-dtype array.

    Args:
        weights: Map from single-position radius to its (positive) multiplicity
        length: Number of positions

    Returns:
        List c where c[r] is the number of weighted combinations of total radius r
    """
    if length < 0:
        raise DomainError(f"length must be >= 0, got {length}")
    support = sorted((s, w) for s, w in weights.items() if w)
    if not support:
        return [0]
    top = support[-1][0]

    table = np.zeros(1, dtype=object)
    table[0] = 1
    for step in range(length):
        grown = np.zeros(len(table) + top, dtype=object)
        for s, w in support:
            grown[s:s + len(table)] += table * w
        table = grown
        logger.debug("radius convolution step %d/%d, %d radii", step + 1, length, len(table))
    return [int(c) for c in table]


def reachable_radii(squares: Sequence[int], length: int) -> int:
    """
    Bitmask of totals reachable as a sum of `length` values from `squares`.

    Bit r is set iff r = s_1 + ... + s_length for some choice s_i in squares.
    """
    mask = 1
    for _ in range(length):
        grown = 0
        for s in set(squares):
            grown |= mask << s
        mask = grown
    return mask

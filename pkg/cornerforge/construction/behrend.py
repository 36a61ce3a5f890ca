"""
Behrend sphere sets and the 3AP -> corner reduction (the c = 2 sqrt 2 baseline).

Integers whose base-(2D-1) digits are all below D add without carries, so a
3-term progression among them is a progression of digit vectors; on a sphere
sum x_i^2 = r that forces the progression to be constant. Lifting a 3AP-free
set S to {(x, y) : x - y in S} gives a corner-free set, because a corner's
three differences x - y - d, x - y, x - y + d form a progression.
"""

import logging
from dataclasses import dataclass, field
from typing import FrozenSet, Iterable, Iterator, List, Optional, Tuple

import numpy as np
from sympy import integer_nthroot

from ..corners.pointset import Point, PointSet
from ..corners.verify import is_3ap_free
from ..digits import radius_distribution, reachable_radii
from ..errors import DomainError, ResourceError
from ..parallel import ordered_map
from .density import DensityReport, make_report

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BehrendParams:
    """Digit bound D, dimension n, optional radius r; base = 2D - 1, N = base^n."""

    D: int
    n: int
    r: Optional[int] = None
    base: int = field(init=False)
    N: int = field(init=False)

    def __post_init__(self):
        if self.D < 2:
            raise DomainError(f"digit bound D must be >= 2, got D={self.D}")
        if self.n < 1:
            raise DomainError(f"dimension n must be >= 1, got n={self.n}")
        top = self.n * (self.D - 1) ** 2
        if self.r is not None and not 0 <= self.r <= top:
            raise DomainError(f"radius r must lie in [0, {top}], got r={self.r}")
        object.__setattr__(self, 'base', 2 * self.D - 1)
        object.__setattr__(self, 'N', (2 * self.D - 1) ** self.n)

    def with_radius(self, r: int) -> 'BehrendParams':
        return BehrendParams(self.D, self.n, r)


@dataclass(frozen=True)
class BehrendSearch:
    """Outcome of the (D, n, r) sweep at a fixed grid side."""

    params: BehrendParams
    size: int
    N_target: int
    candidates: int
    skipped: int
    skipped_floor: int = 0


def sphere_counts(D: int, n: int) -> List[int]:
    """Number of vectors in [0, D)^n per squared norm."""
    return radius_distribution({a * a: 1 for a in range(D)}, n)


def sphere_sizes(D: int, n: int, N: int) -> List[int]:
    """
    Exact sum over s in S_r of (N - s), for every radius r.

    All coordinates are exchangeable on a sphere, so the digit total at each
    position is the same, T_r = sum_a a * cnt_{n-1}[r - a^2], and
    sum of s over S_r = T_r * (base^n - 1) / (base - 1). Only counts are needed.

    Raises:
        DomainError: If N < base^n (the lifted set would leave the grid)
    """
    p = BehrendParams(D, n)
    if N < p.N:
        raise DomainError(f"grid side N={N} is below base^n = {p.N}")
    counts = np.array(sphere_counts(D, n), dtype=object)
    lower = np.array(sphere_counts(D, n - 1), dtype=object)
    totals = np.zeros(len(counts), dtype=object)
    for a in range(1, D):
        totals[a * a:a * a + len(lower)] += lower * a
    repunit = (p.N - 1) // (p.base - 1)
    return [int(c) * N - int(t) * repunit for c, t in zip(counts, totals)]


def sphere_size_floor(D: int, n: int, N: int) -> int:
    """
    Lower bound on max_r sphere_sizes(D, n, N) without any counting.

    The D^n digit vectors fall on n(D-1)^2 + 1 radii, so some sphere holds
    at least ceil(D^n / radii) of them; every member is at most
    (base^n - 1) / 2, so each lifts to at least N - (base^n - 1) / 2 points.

    Raises:
        DomainError: If N < base^n
    """
    p = BehrendParams(D, n)
    if N < p.N:
        raise DomainError(f"grid side N={N} is below base^n = {p.N}")
    radii = n * (D - 1) ** 2 + 1
    return -(-D ** n // radii) * (N - (p.N - 1) // 2)


def _argmax(values: List[int]) -> int:
    return max(range(len(values)), key=lambda r: (values[r], -r))


def best_sphere_radius(D: int, n: int) -> int:
    """Radius with the most points (smallest radius on ties)."""
    return _argmax(sphere_counts(D, n))


def behrend_set(p: BehrendParams) -> FrozenSet[int]:
    """
    S = {x in [0, base^n) : digits of x all < D and sum of squared digits = r}.

    r defaults to the most populated sphere.
    """
    r = best_sphere_radius(p.D, p.n) if p.r is None else p.r
    squares = [a * a for a in range(p.D)]
    reach = [reachable_radii(squares, k) for k in range(p.n + 1)]
    members = []

    def walk(pos: int, budget: int, value: int) -> None:
        if pos < 0:
            members.append(value)
            return
        for a in range(p.D):
            s = a * a
            if s > budget:
                break
            if (reach[pos] >> (budget - s)) & 1:
                walk(pos - 1, budget - s, value * p.base + a)

    walk(p.n - 1, r, 0)
    return frozenset(members)


def iter_corner_points(S: Iterable[int], N: int) -> Iterator[Point]:
    """Points (y + s, y) for s in S, 0 <= y < N - s."""
    for s in sorted(S):
        for y in range(N - s):
            yield Point(y + s, y)


def corner_size(S: Iterable[int], N: int) -> int:
    return sum(N - s for s in S)


def lift_3ap_free(S: Iterable[int], N: int, check_limit: int = 2000) -> Iterator[Point]:
    """
    Check S, then stream the points of {(x, y) in [0, N)^2 : x - y in S}.

    S is checked eagerly, before any point is yielded.

    Args:
        S: 3AP-free subset of [0, N)
        N: Grid side
        check_limit: S is re-checked for progressions when |S| is at most this;
            larger sets are trusted

    Raises:
        DomainError: If S leaves [0, N) or contains a 3-term progression
    """
    S = frozenset(S)
    for s in S:
        if not 0 <= s < N:
            raise DomainError(f"element {s} outside [0, {N})")
    if len(S) <= check_limit:
        if not is_3ap_free(S):
            raise DomainError("S contains a 3-term arithmetic progression")
    else:
        logger.debug("Trusting 3AP-freeness of a set of size %d", len(S))
    return iter_corner_points(S, N)


def corner_from_3ap(S: Iterable[int], N: int, check_limit: int = 2000) -> PointSet:
    """Lift a 3AP-free set to the corner-free PointSet; see lift_3ap_free."""
    return PointSet(N, lift_3ap_free(S, N, check_limit))


def _candidate_work(D: int, n: int) -> int:
    return n * D * (n * (D - 1) ** 2 + 1)


def _candidates(N_target: int, d_span: int) -> List[Tuple[int, int]]:
    found = []
    n = 1
    while 3 ** n <= N_target:
        root, _ = integer_nthroot(N_target, n)
        base = int(root) if root % 2 else int(root) - 1
        top = (base + 1) // 2
        for D in range(top, max(2, top - d_span + 1) - 1, -1):
            found.append((D, n))
        n += 1
    return found


def behrend_search(N_target: int, d_span: int = 3, work_limit: int = 5_000_000,
                   threads: int = 1) -> BehrendSearch:
    """
    Best Behrend-type corner-free set inside [0, N_target)^2.

    Tries, for each dimension n, the `d_span` largest digit bounds D with
    (2D-1)^n <= N_target (n ascending, D descending), and for each the radius
    maximizing the exact lifted size sum (N_target - s). Candidates whose
    counting work exceeds `work_limit` are skipped; the best sphere_size_floor
    among them is kept as `skipped_floor`, with a warning when it beats the
    chosen size. Ties keep the earlier candidate.

    Raises:
        DomainError: If N_target < 3
        ResourceError: If every candidate is over the work limit
    """
    if N_target < 3:
        raise DomainError(f"N_target must be >= 3, got {N_target}")

    candidates = _candidates(N_target, d_span)
    feasible = [(D, n) for D, n in candidates if _candidate_work(D, n) <= work_limit]
    skipped = len(candidates) - len(feasible)
    if skipped:
        logger.info("Behrend sweep at N=%d: skipping %d of %d candidates over the work limit",
                    N_target, skipped, len(candidates))
    if not feasible:
        raise ResourceError(f"no Behrend candidate within work limit {work_limit}")

    def evaluate(candidate: Tuple[int, int]) -> Tuple[int, int]:
        D, n = candidate
        sizes = sphere_sizes(D, n, N_target)
        r = _argmax(sizes)
        logger.debug("Behrend candidate D=%d n=%d: r=%d size=%d", D, n, r, sizes[r])
        return r, sizes[r]

    results = ordered_map(evaluate, feasible, threads)
    best = max(range(len(feasible)), key=lambda i: (results[i][1], -i))
    (D, n), (r, size) = feasible[best], results[best]
    skipped_floor = max((sphere_size_floor(D_s, n_s, N_target) for D_s, n_s in candidates
                         if _candidate_work(D_s, n_s) > work_limit), default=0)
    if skipped_floor > size:
        logger.warning("Behrend sweep at N=%d: a skipped candidate guarantees %d points, "
                       "above the chosen %d; raise behrend.work_limit", N_target,
                       skipped_floor, size)
    return BehrendSearch(BehrendParams(D, n, r), size, N_target, len(candidates), skipped,
                         skipped_floor)


def behrend_best(N_target: int, d_span: int = 3, work_limit: int = 5_000_000,
                 threads: int = 1) -> Tuple[BehrendParams, int]:
    """(params with r, lifted set size) of the best Behrend candidate at N_target."""
    search = behrend_search(N_target, d_span, work_limit, threads)
    return search.params, search.size


def behrend_report(p: BehrendParams, N: Optional[int] = None) -> DensityReport:
    """
    DensityReport (construction "behrend", q = base, d = n) of the lifted set.

    Args:
        p: Parameters; r defaults to the most populated sphere
        N: Grid side, defaults to base^n
    """
    N = p.N if N is None else N
    r = best_sphere_radius(p.D, p.n) if p.r is None else p.r
    size = sphere_sizes(p.D, p.n, N)[r]
    if size == 0:
        raise DomainError(f"sphere of radius {r} is empty for D={p.D}, n={p.n}")
    return make_report('behrend', p.base, p.n, N, r, size)

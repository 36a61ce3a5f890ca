"""
Exact maximum corner-free subsets of tiny grids.

Branch and bound over cells in row-major order (include / exclude). Adding a
cell only needs the corners through that cell checked against cells already
chosen. The bound is the current size, plus the cells left in the current row,
plus the optimum for the rows still untouched; that optimum comes from the
same search run on shorter rectangles first, so heights are solved bottom-up.

No symmetry pruning is done, not even transposition at the root. A root-only
cut would fight the row-major bound, and the witness would then depend on
which orbit representative the cut keeps.
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Tuple

from .corners.pointset import PointSet
from .corners.verify import find_corner
from .errors import DomainError, ResourceError

logger = logging.getLogger(__name__)

DEFAULT_MAX_N = 6
PLAIN_MAX_N = 4


@dataclass(frozen=True)
class OracleResult:
    n: int
    max_size: int
    witness: PointSet
    nodes_explored: int

    def to_dict(self) -> Dict[str, Any]:
        return {
            'n': self.n,
            'max_size': self.max_size,
            'witness': [[p.x, p.y] for p in self.witness],
            'nodes_explored': self.nodes_explored,
        }


def _mask_points(mask: int, width: int) -> List[Tuple[int, int]]:
    points = []
    idx = 0
    while mask:
        if mask & 1:
            y, x = divmod(idx, width)
            points.append((x, y))
        mask >>= 1
        idx += 1
    return points


class _RectangleSearch:
    """Maximum corner-free subset of an h x w rectangle."""

    def __init__(self, height: int, width: int, row_bounds: List[int],
                 incumbent: Tuple[int, int]):
        self.h = height
        self.w = width
        self.row_bounds = row_bounds    # row_bounds[k] = optimum for k rows x w
        self.best, self.best_mask = incumbent
        self.nodes = 0
        self.span = max(height, width)

    def _has(self, mask: int, x: int, y: int) -> bool:
        return 0 <= x < self.w and 0 <= y < self.h and (mask >> (y * self.w + x)) & 1 == 1

    def closes_corner(self, mask: int, x: int, y: int) -> bool:
        """Would adding (x, y) to `mask` complete a corner through (x, y)?"""
        has = self._has
        for d in range(-self.span, self.span + 1):
            if d == 0:
                continue
            # (x, y) as the corner point, the right arm, the upper arm
            if has(mask, x + d, y) and has(mask, x, y + d):
                return True
            if has(mask, x - d, y) and has(mask, x - d, y + d):
                return True
            if has(mask, x, y - d) and has(mask, x + d, y - d):
                return True
        return False

    def run(self) -> Tuple[int, int]:
        self._search(0, 0, 0)
        return self.best, self.best_mask

    def _search(self, idx: int, mask: int, size: int) -> None:
        self.nodes += 1
        if size > self.best:
            self.best, self.best_mask = size, mask
        if idx == self.h * self.w:
            return
        y, x = divmod(idx, self.w)
        if size + (self.w - x) + self.row_bounds[self.h - y - 1] <= self.best:
            return
        if not self.closes_corner(mask, x, y):
            self._search(idx + 1, mask | (1 << idx), size + 1)
        self._search(idx + 1, mask, size)


@dataclass(frozen=True)
class RectangleResult:
    """Maximum corner-free subset of the rectangle [0, width) x [0, height)."""

    height: int
    width: int
    max_size: int
    witness: PointSet
    nodes_explored: int


def max_corner_free_rect(height: int, width: int,
                         max_cells: int = DEFAULT_MAX_N ** 2) -> RectangleResult:
    """
    Largest corner-free subset of an h x w rectangle of the grid.

    Heights 1..h are solved in turn; each finished height becomes the bound
    for the rows below the current one in the next search.

    Args:
        height: Number of rows, at least 1
        width: Number of columns, at least 1
        max_cells: Cap on height * width

    Returns:
        RectangleResult; the witness lives in a grid of side max(h, w)

    Raises:
        DomainError: If a side is < 1
        ResourceError: If the rectangle has more than max_cells cells
    """
    if height < 1 or width < 1:
        raise DomainError(f"rectangle sides must be >= 1, got {height}x{width}")
    if height * width > max_cells:
        raise ResourceError(
            f"oracle rectangle {height}x{width} is above the cap of {max_cells} cells",
            count=height * width)

    row_bounds = [0]
    masks = [0]
    nodes = 0
    for h in range(1, height + 1):
        search = _RectangleSearch(h, width, row_bounds, (row_bounds[-1], masks[-1]))
        best, mask = search.run()
        nodes += search.nodes
        row_bounds.append(best)
        masks.append(mask)
        logger.debug("Oracle %dx%d: %d points, %d nodes", h, width, best, search.nodes)

    witness = PointSet(max(height, width), _mask_points(masks[height], width))
    if len(witness) != row_bounds[height] or find_corner(witness) is not None:
        raise AssertionError(f"oracle produced an invalid witness for {height}x{width}")
    return RectangleResult(height, width, row_bounds[height], witness, nodes)


def max_corner_free(n: int, max_n: int = DEFAULT_MAX_N) -> OracleResult:
    """
    Largest corner-free subset of [0, n)^2.

    Args:
        n: Grid side, at least 1
        max_n: Cap on n (the search is exponential)

    Returns:
        OracleResult with a verified witness

    Raises:
        DomainError: If n < 1
        ResourceError: If n > max_n
    """
    if n < 1:
        raise DomainError(f"grid side n must be >= 1, got n={n}")
    if n > max_n:
        raise ResourceError(f"oracle grid side {n} is above the cap of {max_n}", count=n)

    rect = max_corner_free_rect(n, n, max_cells=n * n)
    logger.info("Oracle n=%d: max %d (%d nodes)", n, rect.max_size, rect.nodes_explored)
    return OracleResult(n, rect.max_size, rect.witness, rect.nodes_explored)


def _corner_masks(n: int) -> List[int]:
    masks = []
    for y in range(n):
        for x in range(n):
            for d in range(-n + 1, n):
                if d == 0:
                    continue
                if 0 <= x + d < n and 0 <= y + d < n:
                    masks.append((1 << (y * n + x)) | (1 << (y * n + x + d))
                                 | (1 << ((y + d) * n + x)))
    return masks


def plain_max_corner_free(n: int) -> Tuple[int, PointSet]:
    """
    Maximum by trying all 2^(n^2) subsets; a cross-check for tiny n.

    Raises:
        ResourceError: If n > 4
    """
    if n < 1:
        raise DomainError(f"grid side n must be >= 1, got n={n}")
    if n > PLAIN_MAX_N:
        raise ResourceError(f"plain enumeration is limited to n <= {PLAIN_MAX_N}", count=n)
    corners = _corner_masks(n)
    best, best_mask = 0, 0
    for mask in range(1 << (n * n)):
        size = bin(mask).count('1')
        if size <= best:
            continue
        if all(mask & c != c for c in corners):
            best, best_mask = size, mask
    return best, PointSet(n, _mask_points(best_mask, n))

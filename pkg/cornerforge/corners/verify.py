"""
Exhaustive verifiers: corners in point sets, 3-term progressions in integer sets.

Every corner (x, y), (x + d, y), (x, y + d) has two points in a common row, so
scanning each row's ordered pairs and probing for the third point finds them
all. Rows are independent and can be scanned on worker threads.
"""

import logging
from typing import Iterable, List, Optional, Sequence

from ..parallel import chunked, ordered_map, resolve_threads
from .pointset import CornerWitness, PointSet

logger = logging.getLogger(__name__)


def _scan_rows(A: PointSet, rows: Sequence[int], first_only: bool) -> List[CornerWitness]:
    found = []
    for y in rows:
        xs = A.row(y)
        for x1 in xs:
            for x2 in xs:
                if x1 == x2:
                    continue
                d = x2 - x1
                if (x1, y + d) in A:
                    found.append(CornerWitness(x1, y, d))
                    if first_only:
                        return found
    return found


def _check_witness(A: PointSet, witness: CornerWitness) -> None:
    for p in witness.points():
        if p not in A:
            raise AssertionError(f"verifier returned non-member {tuple(p)} for {witness}")


def find_corner(A: PointSet, threads: int = 1,
                parallel_min_rows: int = 64) -> Optional[CornerWitness]:
    """
    Find a corner in a point set.

    Rows are scanned in ascending order and, within a row, ordered pairs
    (x1, x2) lexicographically; the first corner met is returned, so the
    witness does not depend on the thread count.

    Args:
        A: Point set to check
        threads: Worker threads for the row scan (0 = auto)
        parallel_min_rows: Below this many occupied rows the scan stays inline

    Returns:
        A witness whose three points are all in A, or None if A is corner-free
    """
    rows = A.rows()
    workers = resolve_threads(threads)
    if workers <= 1 or len(rows) < parallel_min_rows:
        hits = _scan_rows(A, rows, first_only=True)
        witness = hits[0] if hits else None
    else:
        logger.debug("Scanning %d rows on %d threads", len(rows), workers)
        results = ordered_map(lambda chunk: _scan_rows(A, chunk, first_only=True),
                              chunked(rows, workers), workers)
        witness = next((hits[0] for hits in results if hits), None)

    if witness is not None:
        _check_witness(A, witness)
    return witness


def list_corners(A: PointSet) -> List[CornerWitness]:
    """Every corner of A exactly once, in scan order."""
    corners = _scan_rows(A, A.rows(), first_only=False)
    for witness in corners:
        _check_witness(A, witness)
    return corners


def is_3ap_free(S: Iterable[int]) -> bool:
    """
    True iff S has no three distinct elements a, a + delta, a + 2 delta.

    Each progression is determined by its two ends, which have equal parity
    and whose midpoint must also be in S.
    """
    members = set(S)
    ordered = sorted(members)
    for i, a in enumerate(ordered):
        for c in ordered[i + 1:]:
            if (c - a) % 2 == 0 and (a + c) // 2 in members:
                return False
    return True

"""
Worker threads for the row-parallel verifier and the parameter sweeps.

Every helper here returns results in input order, so a parallel run is
indistinguishable from a sequential one.
"""

import logging
import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, Sequence, TypeVar

from .errors import DomainError

logger = logging.getLogger(__name__)

T = TypeVar('T')
R = TypeVar('R')


def resolve_threads(threads: int) -> int:
    """
    Turn a configured thread count into an actual worker count.

    Args:
        threads: Requested workers; 0 means one per CPU

    Returns:
        Number of worker threads (at least 1)
    """
    if threads < 0:
        raise DomainError(f"thread count must be >= 0, got {threads}")
    if threads == 0:
        return os.cpu_count() or 1
    return threads


def chunked(items: Sequence[T], parts: int) -> List[Sequence[T]]:
    """Split a sequence into at most `parts` contiguous, non-empty slices."""
    if not items:
        return []
    parts = max(1, min(parts, len(items)))
    size, extra = divmod(len(items), parts)
    slices = []
    start = 0
    for i in range(parts):
        stop = start + size + (1 if i < extra else 0)
        slices.append(items[start:stop])
        start = stop
    return slices


def ordered_map(func: Callable[[T], R], items: Iterable[T], threads: int = 1) -> List[R]:
    """
    Apply `func` to every item, optionally on a thread pool.

    Args:
        func: Pure function to apply
        items: Inputs
        threads: Worker count (0 = auto, 1 = inline)

    Returns:
        Results in the same order as `items`
    """
    items = list(items)
    workers = min(resolve_threads(threads), max(1, len(items)))
    if workers <= 1:
        return [func(item) for item in items]

    logger.debug("Mapping %d tasks over %d worker threads", len(items), workers)
    with ThreadPoolExecutor(max_workers=workers, thread_name_prefix='cornerforge') as pool:
        return list(pool.map(func, items))

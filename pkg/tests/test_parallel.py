"""
Tests for the thread helpers.
"""

import pytest

from cornerforge.errors import DomainError
from cornerforge.parallel import chunked, ordered_map, resolve_threads


def test_resolve_threads():
    assert resolve_threads(1) == 1
    assert resolve_threads(3) == 3
    assert resolve_threads(0) >= 1
    with pytest.raises(DomainError):
        resolve_threads(-1)


def test_chunked_keeps_order_and_items():
    items = list(range(10))
    parts = chunked(items, 3)
    assert len(parts) == 3
    assert [x for part in parts for x in part] == items
    assert all(part for part in parts)


def test_chunked_edge_cases():
    assert chunked([], 4) == []
    assert chunked([1, 2], 5) == [[1], [2]]


@pytest.mark.parametrize("threads", [1, 2, 8, 0])
def test_ordered_map(threads):
    assert ordered_map(lambda x: x * x, range(20), threads) == [x * x for x in range(20)]

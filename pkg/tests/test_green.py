"""
Tests for the digit-window sphere sets A_r.
"""

import math
import random
from collections import defaultdict

import pytest

from cornerforge.construction import (
    ConstructionParams, best_r, choose_params, cocycle_holds, count_by_r, enumerate_A_r,
    in_window, member, pigeonhole_floor, total_window_pairs, window_pairs, window_size,
)
from cornerforge.corners import PointSet, find_corner
from cornerforge.errors import DomainError, ResourceError

from .naive import brute_force_counts


def small_shapes(limit):
    """Every (q, d) with q^d <= limit."""
    shapes = []
    for d in range(1, limit.bit_length()):
        q = 2
        while q ** d <= limit:
            shapes.append((q, d))
            q += 1
    return shapes


def window_vector_pairs(q, d):
    """All (u, v) in [0, q^d)^2 whose digit pairs are all in the window."""
    n = q ** d
    pairs = []
    for u in range(n):
        for v in range(n):
            a, b = u, v
            for _ in range(d):
                if not q <= 2 * (a % q + b % q) < 3 * q:
                    break
                a //= q
                b //= q
            else:
                pairs.append((u, v))
    return pairs


class TestParams:

    def test_N_is_exact(self):
        assert ConstructionParams(4, 40).N == 4 ** 40

    @pytest.mark.parametrize("q, d, r", [(1, 3, None), (4, 0, None), (4, 1, 10), (4, 1, -1)])
    def test_rejects_bad_params(self, q, d, r):
        with pytest.raises(DomainError):
            ConstructionParams(q, d, r)

    def test_radius_upper_end_allowed(self):
        assert ConstructionParams(4, 2, 18).r == 18


class TestWindow:

    @pytest.mark.parametrize("a, b, q, expected", [
        (0, 0, 4, False),
        (1, 1, 4, True),
        (3, 3, 4, False),
        (1, 2, 5, True),
        (1, 1, 5, False),
    ])
    def test_in_window(self, a, b, q, expected):
        assert in_window(a, b, q) is expected

    def test_in_window_rejects_bad_digit(self):
        with pytest.raises(DomainError):
            in_window(4, 0, 4)

    def test_window_size_examples(self):
        assert window_size(4) == 12
        assert window_size(2) == 3
        assert window_size(8) == 48

    @pytest.mark.parametrize("q", range(2, 61))
    def test_window_size_matches_direct_count(self, q):
        direct = sum(1 for a in range(q) for b in range(q) if in_window(a, b, q))
        assert window_size(q) == direct == len(window_pairs(q))

    def test_window_size_near_three_quarters(self):
        for q in range(2, 1001):
            W = window_size(q)
            if q % 4 == 0:
                assert 4 * W == 3 * q * q
            assert abs(4 * W - 3 * q * q) <= 4 * q


class TestMember:

    def test_examples(self):
        assert member(1, 2, ConstructionParams(4, 1, 1)) is True
        assert member(0, 2, ConstructionParams(4, 1, 4)) is True
        for r in range(10):
            assert member(0, 0, ConstructionParams(4, 1, r)) is False

    def test_needs_radius(self):
        with pytest.raises(DomainError):
            member(1, 2, ConstructionParams(4, 1))

    def test_rejects_out_of_range(self):
        with pytest.raises(DomainError):
            member(4, 0, ConstructionParams(4, 1, 1))


class TestCountByR:

    def test_examples(self):
        assert count_by_r(4, 1).entries == {0: 2, 1: 4, 4: 4, 9: 2}
        assert count_by_r(2, 1).entries == {0: 1, 1: 2}
        assert count_by_r(2, 5)[3] == 80

    def test_missing_radius_is_zero(self):
        assert count_by_r(4, 1)[2] == 0

    def test_sum_is_window_total(self):
        for q, d in [(4, 10), (5, 7), (17, 20)]:
            assert count_by_r(q, d).total() == total_window_pairs(q, d)

    def test_big_counts_stay_exact(self):
        assert count_by_r(4, 18).total() == 12 ** 18
        assert count_by_r(4, 18).total() > 2 ** 64

    def test_closed_form_at_q2(self):
        for d in range(1, 17):
            table = count_by_r(2, d)
            for k in range(d + 1):
                assert table[k] == math.comb(d, k) * 2 ** k

    @pytest.mark.parametrize("q, d", small_shapes(256))
    def test_matches_brute_force(self, q, d):
        assert count_by_r(q, d).entries == brute_force_counts(q, d)

    def test_radii_in_range(self):
        for q, d in [(3, 4), (6, 3)]:
            assert all(0 <= r <= d * (q - 1) ** 2 for r in count_by_r(q, d))


class TestBestR:

    def test_examples(self):
        assert best_r(4, 1) == (1, 4)
        assert best_r(2, 5) == (3, 80)
        assert best_r(2, 1) == (1, 2)

    def test_pigeonhole(self):
        for q in range(2, 9):
            for d in range(1, 21):
                _, count = best_r(q, d)
                assert count * (d * (q - 1) ** 2 + 1) >= window_size(q) ** d
                assert count >= pigeonhole_floor(q, d)


class TestChooseParams:

    @pytest.mark.parametrize("d, q", [(5, 2), (10, 4), (20, 17)])
    def test_examples(self, d, q):
        p = choose_params(d)
        assert p.q == q
        assert p.N == q ** d
        assert p.r is None
        assert q * q * 3 ** d <= 4 ** d < (q + 1) ** 2 * 3 ** d

    def test_exact_inequality_at_large_d(self):
        for d in range(5, 200):
            q = choose_params(d).q
            assert q * q * 3 ** d <= 4 ** d < (q + 1) ** 2 * 3 ** d

    @pytest.mark.parametrize("d", [0, 1, 4])
    def test_degenerate(self, d):
        with pytest.raises(DomainError):
            choose_params(d)

    def test_degenerate_message(self):
        with pytest.raises(DomainError, match="q < 2"):
            choose_params(4)


class TestEnumerate:

    def test_examples(self):
        points = list(enumerate_A_r(ConstructionParams(4, 1, 1)))
        assert [tuple(p) for p in points] == [(1, 2), (2, 1), (2, 3), (3, 2)]
        assert [tuple(p) for p in enumerate_A_r(ConstructionParams(2, 1, 0))] == [(1, 1)]

    def test_q2_d5_best_radius(self):
        points = list(enumerate_A_r(ConstructionParams(2, 5, 3)))
        assert len(points) == 80
        p = ConstructionParams(2, 5, 3)
        assert all(member(x, y, p) for x, y in points)
        assert find_corner(PointSet(32, points)) is None

    def test_needs_radius(self):
        with pytest.raises(DomainError):
            enumerate_A_r(ConstructionParams(4, 1))

    def test_cap_reports_exact_count(self):
        with pytest.raises(ResourceError) as info:
            enumerate_A_r(ConstructionParams(2, 5, 3), max_points=79)
        assert info.value.count == 80
        assert "80" in str(info.value)

    def test_cap_checked_before_streaming(self):
        # far too many points to enumerate; the cap must trip immediately
        p = ConstructionParams(4, 30, best_r(4, 30)[0])
        with pytest.raises(ResourceError):
            enumerate_A_r(p, max_points=10 ** 6)

    def test_empty_radius(self):
        assert list(enumerate_A_r(ConstructionParams(4, 1, 2))) == []

    @pytest.mark.parametrize("q, d", small_shapes(36))
    def test_matches_membership_scan(self, q, d):
        N = q ** d
        table = count_by_r(q, d)
        for r in table:
            p = ConstructionParams(q, d, r)
            streamed = [tuple(pt) for pt in enumerate_A_r(p)]
            assert streamed == sorted(streamed)
            assert len(streamed) == table[r]
            assert streamed == [(x, y) for x in range(N) for y in range(N) if member(x, y, p)]


class TestCornerFree:

    @pytest.mark.parametrize("q, d", [
        (2, 3), (2, 4), (2, 5), (2, 6), (2, 7), (3, 2), (3, 3), (4, 2), (5, 2),
    ])
    def test_every_radius_is_corner_free(self, q, d):
        for r in count_by_r(q, d):
            A = PointSet(q ** d, enumerate_A_r(ConstructionParams(q, d, r)))
            assert find_corner(A) is None, f"corner in A_{r} for q={q}, d={d}"

    @pytest.mark.parametrize("q, d", small_shapes(64))
    def test_small_shapes_corner_free(self, q, d):
        for r in count_by_r(q, d):
            A = PointSet(q ** d, enumerate_A_r(ConstructionParams(q, d, r)))
            assert find_corner(A) is None

    @pytest.mark.slow
    @pytest.mark.parametrize("q, d", [(2, 8), (4, 4), (16, 2)])
    def test_largest_small_shapes_corner_free(self, q, d):
        for r in count_by_r(q, d):
            A = PointSet(q ** d, enumerate_A_r(ConstructionParams(q, d, r)))
            assert find_corner(A) is None


class TestCocycle:

    @pytest.mark.parametrize("q, d", small_shapes(64))
    def test_exhaustive(self, q, d):
        by_sum = defaultdict(list)
        for u, v in window_vector_pairs(q, d):
            by_sum[u + v].append((u, v))
        for group in by_sum.values():
            u, v = group[0]
            for u2, v2 in group[1:]:
                assert cocycle_holds(u, v, u2, v2, q, d)

    def test_random_q4_d6(self):
        q, d = 4, 6
        n = q ** d
        pairs = window_pairs(q)
        rng = random.Random(46)
        checked = 0
        for _ in range(100_000):
            digits = [rng.choice(pairs) for _ in range(d)]
            u = sum(a * q ** i for i, (a, _) in enumerate(digits))
            v = sum(b * q ** i for i, (_, b) in enumerate(digits))
            shift = rng.randint(-n // 4, n // 4)
            u2, v2 = u + shift, v - shift
            if not (0 <= u2 < n and 0 <= v2 < n):
                continue
            if all(in_window((u2 // q ** i) % q, (v2 // q ** i) % q, q) for i in range(d)):
                checked += 1
                assert cocycle_holds(u, v, u2, v2, q, d)
        assert checked > 100

    def test_fails_outside_the_window(self):
        # (0, 0) at digit 1 is outside the window; the carry breaks the identity
        assert not cocycle_holds(3, 1, 0, 4, 4, 2)

"""
Tests for projective enumeration over F4 and F5.
"""

import numpy as np
import pytest

from src.utils.math.projective import (F4_INVERSE, F4_MUL, line_count, normalize_f4,
                                       normalize_mod_p, projective_points)


class TestProjectivePoints:
    """Canonical line representatives"""

    @pytest.mark.parametrize("dim,q,expected", [(8, 4, 21845), (8, 5, 97656), (2, 5, 6), (1, 4, 1)])
    def test_line_count(self, dim, q, expected):
        assert line_count(dim, q) == expected

    @pytest.mark.parametrize("dim,q", [(3, 4), (3, 5), (4, 4)])
    def test_enumeration(self, dim, q):
        points = projective_points(dim, q)
        assert points.shape == (line_count(dim, q), dim)
        # first nonzero coordinate is 1
        first = points[np.arange(len(points)), np.argmax(points != 0, axis=1)]
        assert np.all(first == 1)
        # lexicographic and distinct
        keys = [tuple(r) for r in points.tolist()]
        assert keys == sorted(keys)
        assert len(set(keys)) == len(keys)

    def test_small_case(self):
        assert projective_points(2, 5).tolist() == [[0, 1], [1, 0], [1, 1], [1, 2], [1, 3], [1, 4]]


class TestNormalization:
    """Scaling vectors to their line representative"""

    def test_f4_tables(self):
        for x in range(1, 4):
            assert F4_MUL[x, F4_INVERSE[x]] == 1
        assert F4_MUL[2, 2] == 3

    def test_normalize_f4_is_scale_invariant(self):
        points = projective_points(3, 4)
        for scale in (1, 2, 3):
            scaled = F4_MUL[scale, points]
            assert np.array_equal(normalize_f4(scaled), points)

    def test_normalize_mod_p(self):
        points = projective_points(3, 5)
        for scale in range(1, 5):
            assert np.array_equal(normalize_mod_p(points * scale, 5), points)

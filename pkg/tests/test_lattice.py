"""
Tests for exact short-vector enumeration.
"""

from fractions import Fraction
from itertools import product

import pytest

from src.utils.errors import DegenerateFormError
from src.utils.math.lattice import (completed_squares, coordinate_box, quadratic_value,
                                    short_vectors, top_level_values)


def _brute_force(gram, bound, radius):
    n = len(gram)
    return sorted((x for x in product(range(-radius, radius + 1), repeat=n)
                   if quadratic_value(gram, x) <= bound), key=lambda v: tuple(reversed(v)))


class TestShortVectors:
    """Fincke-Pohst against brute force"""

    def test_identity(self):
        vectors = short_vectors([[1, 0], [0, 1]], 1)
        assert len(vectors) == 5
        assert (0, 0) in vectors

    @pytest.mark.parametrize("gram,bound", [
        ([[2, 1], [1, 2]], 2),
        ([[2, -1, 0], [-1, 2, -1], [0, -1, 2]], 4),
        ([[4, 2, 1], [2, 3, 0], [1, 0, 5]], 9),
        ([[Fraction(3, 2), Fraction(1, 2)], [Fraction(1, 2), 1]], 3),
    ])
    def test_matches_brute_force(self, gram, bound):
        assert short_vectors(gram, bound) == _brute_force(gram, bound, 4)

    def test_a2_roots(self):
        """The hexagonal lattice has six minimal vectors"""
        vectors = [v for v in short_vectors([[2, -1], [-1, 2]], 2) if any(v)]
        assert len(vectors) == 6

    def test_partition_on_top_values(self):
        gram = [[2, -1, 0], [-1, 2, -1], [0, -1, 2]]
        values = top_level_values(gram, 4)
        parts = [short_vectors(gram, 4, [v]) for v in values]
        merged = sorted((x for p in parts for x in p), key=lambda v: tuple(reversed(v)))
        assert merged == short_vectors(gram, 4)

    def test_not_positive_definite(self):
        with pytest.raises(DegenerateFormError):
            completed_squares([[1, 2], [2, 1]])


class TestCoordinateBox:
    """Exact integer bounds from the inverse Gram diagonal"""

    def test_box(self):
        assert coordinate_box([Fraction(1), Fraction(1, 4), Fraction(2)], 2) == (1, 0, 2)

    def test_box_contains_short_vectors(self):
        gram = [[2, 1], [1, 2]]
        # inverse diagonal is 2/3
        box = coordinate_box([Fraction(2, 3), Fraction(2, 3)], 6)
        for v in short_vectors(gram, 6):
            assert all(abs(x) <= b for x, b in zip(v, box))

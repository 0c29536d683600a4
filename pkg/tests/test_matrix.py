"""
Tests for exact matrices over Z, Z[phi] and K.
"""

import random
from fractions import Fraction

import pytest

from src.utils.errors import (DimensionMismatchError, DivisionByZeroError, NoSolutionError,
                              NonSquareMatrixError, NotUnitError)
from src.utils.math.golden import PHI, FieldElem, GoldenInt, Ring
from src.utils.math.matrix import (Matrix, adjugate, det, inverse_over_field, invert_over_ring,
                                   solve_over_ring)


def _random_golden_matrix(rng, n, spread=3):
    return Matrix([[GoldenInt(rng.randint(-spread, spread), rng.randint(-spread, spread))
                    for _ in range(n)] for _ in range(n)], Ring.GOLDEN)


class TestMatrix:
    """Construction and products"""

    def test_ring_inference(self):
        assert Matrix([[1, 2], [3, 4]]).ring is Ring.INTEGER
        assert Matrix([[1, PHI], [0, 1]]).ring is Ring.GOLDEN
        assert Matrix([[Fraction(1, 2)]]).ring is Ring.FIELD

    def test_ragged_rows(self):
        with pytest.raises(DimensionMismatchError):
            Matrix([[1, 2], [3]])

    def test_product_and_identity(self):
        m = Matrix([[1, PHI], [PHI, 2]])
        assert m @ Matrix.identity(2, Ring.GOLDEN) == m
        with pytest.raises(DimensionMismatchError):
            m @ Matrix([[1, 2, 3]])

    def test_block_diagonal(self):
        a = Matrix([[2]])
        b = Matrix([[1, PHI], [PHI, 3]])
        block = Matrix.block_diagonal(a, b)
        assert block.shape == (3, 3)
        assert block.ring is Ring.GOLDEN
        assert block[1, 2] == PHI and block[0, 1] == 0

    def test_render(self):
        assert Matrix([[GoldenInt(1, 1)]], Ring.GOLDEN).render() == [["1+1*phi"]]


class TestDeterminant:
    """Fraction-free determinant and adjugate"""

    def test_small_cases(self):
        assert det(Matrix([[2, 0], [0, 2]])) == 4
        assert det(Matrix([[0, 1], [1, 0]])) == -1
        assert det(Matrix([[1, 2], [2, 4]])) == 0
        assert det(Matrix([[PHI, 1], [1, PHI]], Ring.GOLDEN)) == GoldenInt(0, 1)  # phi^2 - 1

    def test_non_square(self):
        with pytest.raises(NonSquareMatrixError):
            det(Matrix([[1, 2]]))

    def test_adjugate_identity(self):
        """m adj(m) = det(m) I on random golden matrices"""
        rng = random.Random(21)
        for n in (1, 2, 3, 4):
            for _ in range(25):
                m = _random_golden_matrix(rng, n)
                d = det(m)
                expected = Matrix.identity(n, Ring.GOLDEN).scale(d)
                assert m @ adjugate(m) == expected

    def test_determinant_is_multiplicative(self):
        rng = random.Random(22)
        for _ in range(25):
            a, b = _random_golden_matrix(rng, 3), _random_golden_matrix(rng, 3)
            assert det(a @ b) == det(a) * det(b)


class TestInversion:
    """Inverses over K and over the coefficient ring"""

    def test_field_inverse(self):
        m = Matrix([[2, 1], [1, 1]])
        inv = inverse_over_field(m)
        assert m.to_field() @ inv == Matrix.identity(2, Ring.FIELD)
        with pytest.raises(DivisionByZeroError):
            inverse_over_field(Matrix([[1, 2], [2, 4]]))

    def test_ring_inverse_of_unit_determinant(self):
        m = Matrix([[PHI, 1], [1, 1]], Ring.GOLDEN)  # det = phi - 1, a unit
        inv = invert_over_ring(m)
        assert inv.ring is Ring.GOLDEN
        assert m @ inv == Matrix.identity(2, Ring.GOLDEN)

    def test_non_unit_determinant(self):
        with pytest.raises(NotUnitError) as info:
            invert_over_ring(Matrix([[2, 0], [0, 2]]), Ring.INTEGER)
        assert info.value.det == 4

    def test_solve(self):
        a = Matrix([[2, 0], [0, 2]])
        assert solve_over_ring(a, [2, 4], Ring.INTEGER) == (1, 2)
        assert solve_over_ring(a, [1, 0]) == (FieldElem(Fraction(1, 2)), FieldElem(0))
        with pytest.raises(NoSolutionError) as info:
            solve_over_ring(a, [1, 0], Ring.INTEGER)
        assert info.value.solution[0] == Fraction(1, 2)
        with pytest.raises(NoSolutionError) as info:
            solve_over_ring(Matrix([[1, 1], [1, 1]]), [1, 1])
        assert info.value.solution is None

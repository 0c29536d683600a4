"""
Tests for the residue fields F4 = Z[phi]/2 and F5 = Z[phi]/sqrt5.
"""

import random

import pytest

from src.utils.errors import DivisionByZeroError
from src.utils.math.golden import PHI, SQRT5, GoldenInt
from src.utils.math.residue import (F4_ELEMENTS, F5_ELEMENTS, ResidueF4, ResidueF5,
                                    reduce_mod2, reduce_mod_sqrt5)


class TestResidueF4:
    """The field with four elements"""

    def test_codes(self):
        assert [x.code for x in F4_ELEMENTS] == [0, 1, 2, 3]
        assert ResidueF4.from_code(3) == ResidueF4(1, 1)

    def test_phi_squared(self):
        """phi^2 = phi + 1 also holds mod 2"""
        phi = reduce_mod2(PHI)
        assert phi * phi == ResidueF4(1, 1)
        assert phi ** 3 == ResidueF4(1, 0)

    def test_inverses(self):
        for x in F4_ELEMENTS[1:]:
            assert x * x.inverse() == ResidueF4(1, 0)
        with pytest.raises(DivisionByZeroError):
            ResidueF4(0, 0).inverse()

    def test_characteristic_two(self):
        for x in F4_ELEMENTS:
            assert x + x == ResidueF4(0, 0)
            assert -x == x

    def test_reduction_is_a_homomorphism(self):
        rng = random.Random(4)
        for _ in range(500):
            x = GoldenInt(rng.randint(-30, 30), rng.randint(-30, 30))
            y = GoldenInt(rng.randint(-30, 30), rng.randint(-30, 30))
            assert reduce_mod2(x * y) == reduce_mod2(x) * reduce_mod2(y)
            assert reduce_mod2(x + y) == reduce_mod2(x) + reduce_mod2(y)

    def test_lift(self):
        for x in F4_ELEMENTS:
            lifted = x.lift()
            assert lifted.a in (0, 1) and lifted.b in (0, 1)
            assert reduce_mod2(lifted) == x


class TestResidueF5:
    """Z[phi] modulo sqrt 5"""

    def test_phi_is_three(self):
        assert reduce_mod_sqrt5(PHI) == 3

    def test_sqrt5_is_zero(self):
        assert not reduce_mod_sqrt5(SQRT5)

    def test_inverses(self):
        for x in F5_ELEMENTS[1:]:
            assert x * x.inverse() == 1
        with pytest.raises(DivisionByZeroError):
            ResidueF5(0).inverse()

    def test_reduction_is_a_homomorphism(self):
        rng = random.Random(5)
        for _ in range(500):
            x = GoldenInt(rng.randint(-30, 30), rng.randint(-30, 30))
            y = GoldenInt(rng.randint(-30, 30), rng.randint(-30, 30))
            assert reduce_mod_sqrt5(x * y) == reduce_mod_sqrt5(x) * reduce_mod_sqrt5(y)
            assert reduce_mod_sqrt5(x - y) == reduce_mod_sqrt5(x) - reduce_mod_sqrt5(y)

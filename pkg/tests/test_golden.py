"""
Tests for exact golden arithmetic: Z[phi], K = Q(sqrt 5) and the Ring tag.
"""

import random
from fractions import Fraction

import pytest

from src.utils.errors import DivisionByZeroError, InconsistencyError, NotInRingError
from src.utils.math.golden import (INVERSE_SQRT5, KAPPA, PHI, PHI_INVERSE, SQRT5, FieldElem,
                                   GoldenInt, Ring, dirichlet_height, dirichlet_height_via_kappa,
                                   from_lambda_coordinates, golden_conj, golden_mul, golden_pow,
                                   golden_trace_norm, lambda_coordinates, lambda_member,
                                   parse_field, parse_golden, render_field, render_golden,
                                   two_cos_pi_fifths)


def _random_golden(rng, spread=20):
    return GoldenInt(rng.randint(-spread, spread), rng.randint(-spread, spread))


def _random_field(rng, spread=9):
    return FieldElem(Fraction(rng.randint(-spread, spread), rng.randint(1, spread)),
                     Fraction(rng.randint(-spread, spread), rng.randint(1, spread)))


class TestGoldenInt:
    """Arithmetic in Z[phi]"""

    def test_phi_squared(self):
        """phi^2 = phi + 1"""
        assert PHI * PHI == GoldenInt(1, 1)

    def test_conjugate_trace_norm(self):
        x = GoldenInt(2, 3)
        assert x.conj() == GoldenInt(5, -3)
        assert x.trace() == 7
        assert x.norm() == 4 + 6 - 9
        assert golden_conj(x) == x.conj()
        assert golden_trace_norm(x) == (7, 1)

    def test_golden_mul(self):
        """(a + b phi)(c + d phi) = (ac + bd) + (ad + bc + bd) phi"""
        rng = random.Random(5)
        for _ in range(200):
            x, y = _random_golden(rng), _random_golden(rng)
            product = golden_mul(x, y)
            assert product == GoldenInt(x.a * y.a + x.b * y.b, x.a * y.b + x.b * y.a + x.b * y.b)
            assert product.norm() == x.norm() * y.norm()
        assert golden_mul(PHI, PHI_INVERSE) == 1

    def test_units(self):
        assert PHI.is_unit()
        assert PHI.unit_inverse() == PHI_INVERSE
        assert golden_pow(PHI, -1) == PHI_INVERSE
        assert golden_pow(PHI, 4) == GoldenInt(2, 3)
        assert not GoldenInt(2, 0).is_unit()
        with pytest.raises(NotInRingError):
            GoldenInt(2, 0).unit_inverse()

    def test_sqrt5(self):
        """sqrt 5 = 2 phi - 1 with norm -5"""
        assert SQRT5 * SQRT5 == 5
        assert SQRT5.norm() == -5
        assert SQRT5 * INVERSE_SQRT5 == 1

    def test_exact_division(self):
        assert GoldenInt(2, 3).exact_div(PHI) == GoldenInt(1, 2)
        with pytest.raises(NotInRingError):
            GoldenInt(1, 0).exact_div(2)
        with pytest.raises(DivisionByZeroError):
            GoldenInt(1, 0).exact_div(0)

    def test_mixed_equality_and_hash(self):
        """GoldenInt(3, 0), FieldElem(3) and 3 are one value"""
        assert GoldenInt(3, 0) == 3 == FieldElem(3)
        assert len({GoldenInt(3, 0), FieldElem(3), 3}) == 1
        assert hash(GoldenInt(1, 2)) == hash(FieldElem(GoldenInt(1, 2)))

    def test_immutable(self):
        with pytest.raises(AttributeError):
            PHI.a = 4

    def test_integer_coefficients_only(self):
        with pytest.raises(TypeError):
            GoldenInt(Fraction(1, 2), 0)

    def test_ring_axioms(self):
        """Commutative ring laws and norm multiplicativity on random samples"""
        rng = random.Random(11)
        for _ in range(1000):
            x, y, z = (_random_golden(rng) for _ in range(3))
            assert x * y == y * x
            assert (x * y) * z == x * (y * z)
            assert x * (y + z) == x * y + x * z
            assert (x * y).norm() == x.norm() * y.norm()
            assert (x * y).conj() == x.conj() * y.conj()
            assert x + x.conj() == x.trace()


class TestFieldElem:
    """Arithmetic in K"""

    def test_normal_form(self):
        x = FieldElem(Fraction(2, 4), Fraction(3, 6))
        assert (x.na, x.nb, x.d) == (1, 1, 2)
        assert x.a == Fraction(1, 2) and x.b == Fraction(1, 2)

    def test_inverse(self):
        x = FieldElem(GoldenInt(2, 1))
        assert x * x.inverse() == 1
        with pytest.raises(DivisionByZeroError):
            FieldElem(0).inverse()

    def test_kappa(self):
        assert KAPPA * GoldenInt(2, 1) == 1

    def test_field_axioms(self):
        rng = random.Random(12)
        for _ in range(1000):
            x, y = _random_field(rng), _random_field(rng)
            assert x * y == y * x
            assert (x + y) - y == x
            assert (x * y).norm() == x.norm() * y.norm()
            if y:
                assert (x / y) * y == x

    def test_ring_conversions(self):
        half = FieldElem(Fraction(1, 2))
        assert not half.is_golden()
        with pytest.raises(NotInRingError):
            half.to_golden()
        assert FieldElem(GoldenInt(1, 1)).to_golden() == GoldenInt(1, 1)
        with pytest.raises(NotInRingError):
            FieldElem(GoldenInt(1, 1)).to_integer()


class TestRing:
    """Membership, conversion and units per ring"""

    def test_membership(self):
        assert Ring.INTEGER.contains(3)
        assert not Ring.INTEGER.contains(PHI)
        assert Ring.GOLDEN.contains(PHI)
        assert not Ring.GOLDEN.contains(Fraction(1, 2))
        assert Ring.FIELD.contains(Fraction(1, 2))

    def test_units(self):
        assert Ring.INTEGER.is_unit(-1)
        assert not Ring.INTEGER.is_unit(2)
        assert Ring.GOLDEN.is_unit(PHI)
        assert not Ring.GOLDEN.is_unit(SQRT5)
        assert Ring.FIELD.is_unit(Fraction(1, 3))

    def test_of(self):
        assert Ring.of([1, 2]) is Ring.INTEGER
        assert Ring.of([1, PHI]) is Ring.GOLDEN
        assert Ring.of([PHI, Fraction(1, 2)]) is Ring.FIELD

    def test_from_field(self):
        assert Ring.INTEGER.from_field(FieldElem(4)) == 4
        with pytest.raises(NotInRingError):
            Ring.INTEGER.from_field(FieldElem(GoldenInt(0, 1)))


class TestNamedOperations:
    """Heights, the trace-norm lattice and cosines"""

    def test_dirichlet_height(self):
        rng = random.Random(13)
        for _ in range(200):
            x = _random_golden(rng)
            assert dirichlet_height(x) == x.a
            assert dirichlet_height_via_kappa(x) == x.a

    def test_dirichlet_height_disagreement(self, monkeypatch):
        monkeypatch.setattr("src.utils.math.golden.dirichlet_height_via_kappa",
                            lambda x: FieldElem(x.a + 1))
        with pytest.raises(InconsistencyError):
            dirichlet_height(GoldenInt(3, 5))

    def test_lambda_membership(self):
        """Z phi + Z/sqrt5 contains 1/sqrt5 and phi but not 1/2"""
        assert lambda_member(INVERSE_SQRT5)
        assert lambda_member(PHI)
        assert not lambda_member(Fraction(1, 2))

    def test_lambda_membership_grid(self):
        """Every a + b phi with small numerators and denominators up to 10"""
        def solvable(x):
            # x = m phi + n / sqrt5 for integers m and |n| <= 15
            for n in range(-15, 16):
                rest = x - n * INVERSE_SQRT5
                if rest.a == 0 and rest.b.denominator == 1:
                    return True
            return False

        values = sorted({Fraction(p, q) for p in range(-3, 4) for q in range(1, 11)})
        members = 0
        for a in values:
            for b in values:
                x = FieldElem(a, b)
                assert lambda_member(x) == solvable(x), x
                members += lambda_member(x)
        assert members > 0

    def test_lambda_coordinates_round_trip(self):
        for m in range(-3, 4):
            for n in range(-3, 4):
                assert lambda_coordinates(from_lambda_coordinates(m, n)) == (m, n)
        with pytest.raises(NotInRingError):
            lambda_coordinates(Fraction(1, 2))

    def test_two_cos_pi_fifths(self):
        assert two_cos_pi_fifths(0) == 2
        assert two_cos_pi_fifths(1) == PHI
        assert two_cos_pi_fifths(2) == PHI_INVERSE
        assert two_cos_pi_fifths(5) == -2
        assert two_cos_pi_fifths(-1) == PHI
        for k in range(10):
            assert two_cos_pi_fifths(k) == two_cos_pi_fifths(-k)


class TestRendering:
    """Canonical strings used in certificates"""

    def test_render_golden(self):
        assert render_golden(GoldenInt(1, 1)) == "1+1*phi"
        assert render_golden(GoldenInt(-1, -2)) == "-1-2*phi"
        assert render_golden(GoldenInt(0, 0)) == "0+0*phi"

    def test_render_field(self):
        assert render_field(FieldElem(Fraction(1, 2))) == "1/2+0/1*phi"
        assert render_field(FieldElem(Fraction(-1, 2), Fraction(-3, 4))) == "-1/2-3/4*phi"

    def test_parse(self):
        assert parse_golden("2+3*phi") == GoldenInt(2, 3)
        assert parse_field("1/2-1/3*phi") == FieldElem(Fraction(1, 2), Fraction(-1, 3))
        with pytest.raises(ValueError):
            parse_golden("phi")

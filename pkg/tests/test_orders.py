"""
Tests for order specifications, the order criterion and the catalog.
"""

from fractions import Fraction

import pytest

from src.models.algebra import OCTONIONS, QUATERNIONS, quaternion
from src.models.orders.catalog import (ICOSIAN_BASIS_TEXT, ORDER_NAMES, catalog, catalog_names,
                                       coxeter_half_sum)
from src.models.orders.spec import OrderSpec, coordinates_of, verify_order
from src.utils.errors import (DegenerateFormError, NotInOrderError, OrderViolation,
                              UnknownOrderError)
from src.utils.math.golden import PHI, FieldElem, GoldenInt, Ring

HALF = Fraction(1, 2)


class TestCatalog:
    """Named orders"""

    def test_names(self):
        assert catalog_names() == ORDER_NAMES
        assert len(ORDER_NAMES) == 11

    def test_unknown_order(self):
        with pytest.raises(UnknownOrderError):
            catalog("lipschitz")

    def test_cached(self):
        assert catalog("icosian") is catalog("icosian")

    @pytest.mark.parametrize("name,ring,rank", [
        ("integers", Ring.INTEGER, 1),
        ("gaussian", Ring.INTEGER, 2),
        ("cyclotomic", Ring.GOLDEN, 2),
        ("hurwitz", Ring.INTEGER, 4),
        ("icosian", Ring.GOLDEN, 4),
        ("coxeter_dickson", Ring.INTEGER, 8),
        ("icosian_double", Ring.GOLDEN, 8),
    ])
    def test_ring_and_rank(self, name, ring, rank):
        spec = catalog(name)
        assert spec.ring is ring
        assert spec.rank == rank

    def test_icosian_basis_text(self):
        assert ICOSIAN_BASIS_TEXT == "e1=1;e2=i;e3=(1+i+j+k)/2;e4=(-1+(phi-1)i-phi*j)/2"

    def test_coxeter_dickson_contains_half_sum(self):
        spec = catalog("coxeter_dickson")
        coords = coordinates_of(coxeter_half_sum(), spec)
        assert all(isinstance(c, int) for c in coords)
        assert spec.basis[0] == OCTONIONS.one()


class TestOrderCriterion:
    """verify_order on good and bad bases"""

    @pytest.mark.parametrize("name", ORDER_NAMES)
    def test_catalog_orders_pass(self, name, order_tables):
        tables = order_tables(name)
        assert tables.rank == catalog(name).rank
        for coeffs in tables.mult.values():
            assert all(Ring.GOLDEN.contains(c) for c in coeffs)

    def test_icosian_constants_in_golden_ring(self, order_tables):
        tables = order_tables("icosian")
        assert any(isinstance(c, GoldenInt) and c.b for coeffs in tables.mult.values() for c in coeffs)

    def test_half_k_is_not_an_order(self):
        """i (1 + k)/2 = (i - j)/2 has coefficient 1/2 on i"""
        spec = OrderSpec("half-k", Ring.INTEGER, QUATERNIONS,
                         (quaternion(1, 0, 0, 0), quaternion(0, 1, 0, 0), quaternion(0, 0, 1, 0),
                          quaternion(HALF, 0, 0, HALF)))
        with pytest.raises(OrderViolation) as info:
            verify_order(spec, samples=0)
        assert info.value.kind == "product"
        assert FieldElem.coerce(info.value.coefficient).a.denominator == 2

    def test_dependent_basis(self):
        """1, i, j and (1 + i)/2 span only three dimensions"""
        spec = OrderSpec("dependent", Ring.INTEGER, QUATERNIONS,
                         (quaternion(1, 0, 0, 0), quaternion(0, 1, 0, 0), quaternion(0, 0, 1, 0),
                          quaternion(HALF, HALF, 0, 0)))
        with pytest.raises(DegenerateFormError):
            verify_order(spec)

    def test_basis_must_start_with_one(self):
        spec = OrderSpec("shifted", Ring.INTEGER, QUATERNIONS,
                         tuple(QUATERNIONS.basis(p) for p in (1, 0, 2, 3)))
        with pytest.raises(DegenerateFormError):
            verify_order(spec)

    def test_golden_coefficients_over_z(self):
        """phi i is not integral over Z"""
        spec = OrderSpec("phi-i", Ring.INTEGER, QUATERNIONS,
                         (quaternion(1, 0, 0, 0), quaternion(0, PHI, 0, 0), quaternion(0, 0, 1, 0),
                          quaternion(0, 0, 0, 1)))
        with pytest.raises(OrderViolation):
            verify_order(spec)


class TestCoordinates:
    """Coordinates in an order basis"""

    def test_icosian_coordinates(self):
        spec = catalog("icosian")
        x = quaternion(HALF, HALF, HALF, HALF)
        assert coordinates_of(x, spec) == (GoldenInt(0, 0), GoldenInt(0, 0), GoldenInt(1, 0),
                                           GoldenInt(0, 0))
        assert spec.element(coordinates_of(x, spec)) == x

    def test_not_in_order(self):
        with pytest.raises(NotInOrderError):
            coordinates_of(quaternion(HALF, 0, 0, 0), catalog("hamilton"))

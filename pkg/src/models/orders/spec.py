"""
Order specifications and the order criterion.

An OrderSpec is a basis (starting with 1) of a full-rank Z- or
Z[phi]-module inside one of the ambient algebras. verify_order expresses
every basis product and conjugate back in the basis and checks that the
coefficients, together with traces and norms, lie in the coefficient
ring.
"""

from dataclasses import dataclass, field
from functools import cached_property
import random
from typing import Dict, Optional, Sequence, Tuple

import numpy as np

from src.models.algebra import Algebra, AlgebraElem
from src.utils.errors import DegenerateFormError, NotInOrderError, OrderViolation
from src.utils.logger import Logger
from src.utils.math.golden import FieldElem, GoldenInt, Ring
from src.utils.math.matrix import Matrix, det, inverse_over_field


@dataclass(frozen=True, eq=False)
class OrderSpec:
    """Named order: coefficient ring, ambient algebra and basis"""
    name: str
    ring: Ring
    algebra: Algebra
    basis: Tuple[AlgebraElem, ...]
    generators: Tuple[AlgebraElem, ...] = field(default=())
    description: str = ""

    @property
    def rank(self) -> int:
        return len(self.basis)

    @cached_property
    def basis_matrix(self) -> Matrix:
        return Matrix([b.coords for b in self.basis], Ring.FIELD)

    @cached_property
    def _coordinate_map(self) -> Matrix:
        # x = c @ basis_matrix, so c = x @ basis_matrix^-1
        return inverse_over_field(self.basis_matrix).transpose()

    def validate(self):
        """
        Raises:
            DegenerateFormError: the basis does not start with 1 or is
                linearly dependent over K
        """
        if self.rank != self.algebra.dim:
            raise DegenerateFormError(f"{self.name}: rank {self.rank} does not fill "
                                      f"dimension {self.algebra.dim}")
        if self.basis[0] != self.algebra.one():
            raise DegenerateFormError(f"{self.name}: basis must start with 1")
        if not det(self.basis_matrix):
            raise DegenerateFormError(f"{self.name}: basis is linearly dependent")

    def field_coordinates(self, x: AlgebraElem) -> Tuple[FieldElem, ...]:
        """Coordinates of x over K in this basis"""
        return self._coordinate_map.apply(x.coords)

    def element(self, coords: Sequence) -> AlgebraElem:
        """sum coords[i] * basis[i]"""
        out = self.algebra.zero()
        for c, b in zip(coords, self.basis):
            if c:
                out = out + b * FieldElem.coerce(c)
        return out

    def element_from_pairs(self, pairs: np.ndarray) -> AlgebraElem:
        """Golden coordinate row (rank, 2) -> ambient element"""
        return self.element([GoldenInt(int(a), int(b)) for a, b in pairs])


@dataclass(frozen=True)
class StructureTables:
    """
    Integral structure constants of a verified order.

    mult[(i, j)][k] is the coefficient of b_k in b_i b_j and conj[i][k]
    the coefficient of b_k in conj(b_i), all in the order's ring.
    """
    order_name: str
    ring: Ring
    rank: int
    mult: Dict[Tuple[int, int], Tuple]
    conj: Dict[int, Tuple]

    def product_array(self) -> np.ndarray:
        table = np.zeros((self.rank, self.rank, self.rank, 2), dtype=np.int64)
        for (i, j), coeffs in self.mult.items():
            for k, c in enumerate(coeffs):
                g = GoldenInt.coerce(c)
                table[i, j, k] = (g.a, g.b)
        return table

    def conj_array(self) -> np.ndarray:
        table = np.zeros((self.rank, self.rank, 2), dtype=np.int64)
        for i, coeffs in self.conj.items():
            for k, c in enumerate(coeffs):
                g = GoldenInt.coerce(c)
                table[i, k] = (g.a, g.b)
        return table

    def left_multiplication(self, m: int) -> np.ndarray:
        """Golden matrix (column convention) of x -> b_m x"""
        table = self.product_array()
        return np.transpose(table[m], (1, 0, 2)).copy()

    def right_multiplication(self, m: int) -> np.ndarray:
        """Golden matrix (column convention) of x -> x b_m"""
        table = self.product_array()
        return np.transpose(table[:, m], (1, 0, 2)).copy()

    def conjugation_matrix(self) -> np.ndarray:
        """Golden matrix (column convention) of x -> conj(x)"""
        return np.transpose(self.conj_array(), (1, 0, 2)).copy()


def _random_coefficient(rng: random.Random, ring: Ring, spread: int = 3):
    if ring is Ring.INTEGER:
        return rng.randint(-spread, spread)
    return GoldenInt(rng.randint(-spread, spread), rng.randint(-spread, spread))


def verify_order(spec: OrderSpec, samples: int = 100, seed: Optional[int] = 0) -> StructureTables:
    """
    Check the order criterion for `spec` and return its structure tables.

    Args:
        spec: the candidate order
        samples: randomized ring combinations whose trace and norm are tested
        seed: seed of the sampling generator

    Raises:
        DegenerateFormError: invalid basis
        OrderViolation: first coefficient, trace or norm outside the ring
    """
    logger = Logger.instance()
    spec.validate()
    ring = spec.ring
    n = spec.rank
    mult = {}
    for i in range(n):
        for j in range(n):
            coords = spec.field_coordinates(spec.basis[i] * spec.basis[j])
            for k, c in enumerate(coords):
                if not ring.contains(c):
                    logger.debug(f"{spec.name}: b{i} b{j} has coefficient {c} on b{k}")
                    raise OrderViolation("product", i, j, k, c)
            mult[(i, j)] = tuple(ring.from_field(c) for c in coords)
    conj = {}
    for i in range(n):
        coords = spec.field_coordinates(spec.basis[i].conj())
        for k, c in enumerate(coords):
            if not ring.contains(c):
                raise OrderViolation("conjugate", i, None, k, c)
        conj[i] = tuple(ring.from_field(c) for c in coords)
    for i, b in enumerate(spec.basis):
        if not ring.contains(b.trace()):
            raise OrderViolation("trace", i, None, None, b.trace())
        if not ring.contains(b.norm()):
            raise OrderViolation("norm", i, None, None, b.norm())
    rng = random.Random(seed)
    for s in range(samples):
        x = spec.element([_random_coefficient(rng, ring) for _ in range(n)])
        if not ring.contains(x.trace()):
            raise OrderViolation("trace", s, None, None, x.trace())
        if not ring.contains(x.norm()):
            raise OrderViolation("norm", s, None, None, x.norm())
    logger.debug(f"{spec.name}: {n * n} products, {n} conjugates and {samples} samples integral")
    return StructureTables(spec.name, ring, n, mult, conj)


def coordinates_of(x: AlgebraElem, spec: OrderSpec) -> Tuple:
    """
    Coordinates of x in the order basis, in the ring's native type

    Raises:
        NotInOrderError: some coordinate leaves the ring (carries the
            K-coordinates)
    """
    coords = spec.field_coordinates(x)
    if not all(spec.ring.contains(c) for c in coords):
        raise NotInOrderError(coords)
    return tuple(spec.ring.from_field(c) for c in coords)

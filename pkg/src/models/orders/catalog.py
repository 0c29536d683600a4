"""
Catalog of named orders.

Classical Z-orders in R, C, H and O, the cyclotomic, icosian and
icosian-double Z[phi]-orders. The Coxeter-Dickson basis is not written
down by hand: it is produced by closing the Graves-Cayley units and the
half-sum h = (i + j + k + l)/2 under multiplication inside (1/2) times
the Graves-Cayley order and taking a Hermite basis.
"""

from fractions import Fraction
from functools import lru_cache
from typing import List, Tuple

import numpy as np

from src.models.algebra import (DECAGONAL_PLANE, EISENSTEIN_PLANE, GAUSSIAN_PLANE,
                                HYBRID_QUATERNIONS, OCTONIONS, QUATERNIONS, REALS,
                                AlgebraElem, quaternion)
from src.models.orders.spec import OrderSpec
from src.utils.errors import InconsistencyError, UnknownOrderError
from src.utils.logger import Logger
from src.utils.math.golden import FieldElem, Ring
from src.utils.math.normal_forms import hermite_normal_form

HALF = Fraction(1, 2)

# Table order: rank-1 and rank-2 first, quaternionic, then octonionic
ORDER_NAMES: Tuple[str, ...] = (
    "integers", "gaussian", "eisenstein", "cyclotomic",
    "hamilton", "hybrid", "hurwitz", "icosian",
    "graves_cayley", "coxeter_dickson", "icosian_double",
)

ICOSIAN_BASIS_TEXT = "e1=1;e2=i;e3=(1+i+j+k)/2;e4=(-1+(phi-1)i-phi*j)/2"


def icosian_basis() -> Tuple[AlgebraElem, ...]:
    half_phi_minus_one = FieldElem(-HALF, HALF)
    minus_half_phi = FieldElem(0, -HALF)
    return (
        quaternion(1, 0, 0, 0),
        quaternion(0, 1, 0, 0),
        quaternion(HALF, HALF, HALF, HALF),
        quaternion(-HALF, half_phi_minus_one, minus_half_phi, 0),
    )


def hurwitz_basis() -> Tuple[AlgebraElem, ...]:
    return (
        quaternion(1, 0, 0, 0),
        quaternion(HALF, -HALF, -HALF, HALF),   # u
        quaternion(HALF, HALF, -HALF, -HALF),   # v
        quaternion(HALF, -HALF, HALF, -HALF),   # w
    )


def coxeter_half_sum() -> AlgebraElem:
    return OCTONIONS.element((0, HALF, HALF, HALF, HALF, 0, 0, 0))


def _close_in_half_lattice(generators: List[List[int]]) -> List[List[int]]:
    """
    Close the Z-span of x/2 (x in `generators`) under multiplication and
    conjugation; rows are doubled coordinates with the real part moved to
    the last column so that the Hermite basis ends with 1.
    """
    logger = Logger.instance()
    table = OCTONIONS.golden_table()[..., 0]
    conj_signs = np.array([1, -1, -1, -1, -1, -1, -1, -1], dtype=np.int64)
    perm = list(range(1, 8)) + [0]
    inverse_perm = [perm.index(c) for c in range(8)]

    rows = hermite_normal_form([[g[c] for c in perm] for g in generators])
    rounds = 0
    while True:
        rounds += 1
        vectors = [np.array([r[c] for c in inverse_perm], dtype=np.int64) for r in rows]
        candidates = [list(r) for r in rows]
        for x in vectors:
            candidates.append([int(v) for v in (conj_signs * x)[perm]])
            for y in vectors:
                z = np.einsum("i,j,ijk->k", x, y, table)
                # (x/2)(y/2) = z/4 must be w/2 with w integral
                if np.any(z % 2):
                    raise InconsistencyError("product leaves (1/2) Graves-Cayley")
                candidates.append([int(v) for v in (z // 2)[perm]])
        closed = hermite_normal_form(candidates)
        if closed == rows:
            break
        rows = closed
    logger.debug(f"coxeter_dickson closure stable after {rounds} rounds")
    # last Hermite row is the doubled unit; move it first, restore column order
    rows = [rows[-1]] + rows[:-1]
    return [[r[c] for c in inverse_perm] for r in rows]


def _coxeter_dickson() -> OrderSpec:
    graves = [[2 if c == a else 0 for c in range(8)] for a in range(8)]
    h = [0, 1, 1, 1, 1, 0, 0, 0]
    rows = _close_in_half_lattice(graves + [h])
    if len(rows) != 8 or rows[0] != [2, 0, 0, 0, 0, 0, 0, 0]:
        raise InconsistencyError("coxeter_dickson closure did not produce a rank-8 basis with 1")
    basis = tuple(OCTONIONS.element([Fraction(v, 2) for v in r]) for r in rows)
    units = tuple(OCTONIONS.basis(a) for a in range(8)) + (coxeter_half_sum(),)
    return OrderSpec("coxeter_dickson", Ring.INTEGER, OCTONIONS, basis, generators=units,
                     description="Coxeter's integral octonions (E8 shell)")


def _build(name: str) -> OrderSpec:
    if name == "integers":
        return OrderSpec(name, Ring.INTEGER, REALS, (REALS.one(),), description="Z in R")
    if name == "gaussian":
        return OrderSpec(name, Ring.INTEGER, GAUSSIAN_PLANE,
                         (GAUSSIAN_PLANE.one(), GAUSSIAN_PLANE.named("i")),
                         description="Gaussian integers Z[i]")
    if name == "eisenstein":
        return OrderSpec(name, Ring.INTEGER, EISENSTEIN_PLANE,
                         (EISENSTEIN_PLANE.one(), EISENSTEIN_PLANE.named("w")),
                         description="Eisenstein integers Z[w], w^2 = -1 - w")
    if name == "cyclotomic":
        return OrderSpec(name, Ring.GOLDEN, DECAGONAL_PLANE,
                         (DECAGONAL_PLANE.one(), DECAGONAL_PLANE.named("z")),
                         description="Z[z10] as a Z[phi]-order, z^2 = phi z - 1")
    if name == "hamilton":
        return OrderSpec(name, Ring.INTEGER, QUATERNIONS,
                         tuple(QUATERNIONS.basis(p) for p in range(4)),
                         description="Hamilton quaternions Z[1, i, j, k]")
    if name == "hybrid":
        return OrderSpec(name, Ring.INTEGER, HYBRID_QUATERNIONS,
                         tuple(HYBRID_QUATERNIONS.basis(p) for p in range(4)),
                         description="Z[w] + Z[w] j")
    if name == "hurwitz":
        return OrderSpec(name, Ring.INTEGER, QUATERNIONS, hurwitz_basis(),
                         description="Hurwitz quaternions Z[1, u, v, w]")
    if name == "icosian":
        return OrderSpec(name, Ring.GOLDEN, QUATERNIONS, icosian_basis(),
                         description="icosian ring, basis " + ICOSIAN_BASIS_TEXT)
    if name == "graves_cayley":
        return OrderSpec(name, Ring.INTEGER, OCTONIONS,
                         tuple(OCTONIONS.basis(p) for p in range(8)),
                         description="Graves-Cayley octonions, Z-span of the Dickson basis")
    if name == "coxeter_dickson":
        return _coxeter_dickson()
    if name == "icosian_double":
        zero = QUATERNIONS.zero()
        halves = icosian_basis()
        basis = tuple(OCTONIONS.from_half_pair(e, zero) for e in halves) + \
            tuple(OCTONIONS.from_half_pair(zero, e) for e in halves)
        return OrderSpec(name, Ring.GOLDEN, OCTONIONS, basis,
                         description="icosian double I + I l")
    raise UnknownOrderError(name)


@lru_cache(maxsize=None)
def catalog(name: str) -> OrderSpec:
    """
    Order by its stable CLI name

    Raises:
        UnknownOrderError: name is not in ORDER_NAMES
    """
    if name not in ORDER_NAMES:
        raise UnknownOrderError(name)
    return _build(name)


def catalog_names() -> Tuple[str, ...]:
    return ORDER_NAMES

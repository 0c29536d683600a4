"""
Composition Algebra Module
==========================

Unital algebras over K = Q(sqrt 5) given by structure constants on a
fixed basis starting with 1, together with a K-linear conjugation.

Two constructors cover every ambient used by the orders:

* quadratic(trace, norm): K[t]/(t^2 - s t + n) with conj(t) = s - t;
  the Gaussian, Eisenstein and decagonal planes.
* doubled(base): Cayley-Dickson doubling with l^2 = -1 and l a = conj(a) l,
  (a + b l)(c + d l) = (ac - conj(d) b) + (da + b conj(c)) l,
  conj(a + b l) = conj(a) - b l.

Doubling the Gaussian plane gives the quaternions with basis 1, i, j, k
(j = l, k = i l) and doubling those gives the octonions with basis
1, i, j, k, l, il, jl, kl, for which [i, j, l] = 2 kl.
"""

from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

import numpy as np

from src.utils.errors import DimensionMismatchError
from src.utils.math.golden import FieldElem, GoldenInt, PHI, render_field

ZERO_K = FieldElem(0)
ONE_K = FieldElem(1)

# products[p][q] = ((r, coefficient), ...) with e_p e_q = sum coefficient e_r
ProductTable = Tuple[Tuple[Tuple[Tuple[int, FieldElem], ...], ...], ...]
ConjTable = Tuple[Tuple[Tuple[int, FieldElem], ...], ...]


class Algebra:
    """
    A finite-dimensional K-algebra with conjugation.

    Elements are AlgebraElem values created through `element`, `basis`
    or `from_half_pair`.
    """

    def __init__(self, name: str, labels: Sequence[str], products: ProductTable,
                 conjugation: ConjTable, base: "Algebra" = None):
        self.name = name
        self.labels = tuple(labels)
        self.dim = len(labels)
        self._products = products
        self._conj = conjugation
        self.base = base
        self.gram = self._polar_gram()

    def __repr__(self):
        return f"Algebra({self.name}, dim={self.dim})"

    # -- elements ---------------------------------------------------------

    def element(self, coords: Sequence) -> "AlgebraElem":
        if len(coords) != self.dim:
            raise DimensionMismatchError(f"{self.name} has dimension {self.dim}, got {len(coords)}")
        return AlgebraElem(self, tuple(FieldElem.coerce(c) for c in coords))

    def zero(self) -> "AlgebraElem":
        return AlgebraElem(self, (ZERO_K,) * self.dim)

    def one(self) -> "AlgebraElem":
        return self.basis(0)

    def scalar(self, value) -> "AlgebraElem":
        return AlgebraElem(self, (FieldElem.coerce(value),) + (ZERO_K,) * (self.dim - 1))

    def basis(self, p: int) -> "AlgebraElem":
        coords = [ZERO_K] * self.dim
        coords[p] = ONE_K
        return AlgebraElem(self, tuple(coords))

    def named(self, label: str) -> "AlgebraElem":
        return self.basis(self.labels.index(label))

    def from_half_pair(self, a: "AlgebraElem", b: "AlgebraElem") -> "AlgebraElem":
        """a + b l for a doubled algebra"""
        if self.base is None or a.algebra is not self.base or b.algebra is not self.base:
            raise DimensionMismatchError(f"{self.name} is not the double of the given halves")
        return AlgebraElem(self, a.coords + b.coords)

    # -- arithmetic on coordinate tuples ----------------------------------

    def _multiply(self, x: Sequence[FieldElem], y: Sequence[FieldElem]) -> Tuple[FieldElem, ...]:
        out = [ZERO_K] * self.dim
        for p, xp in enumerate(x):
            if not xp:
                continue
            row = self._products[p]
            for q, yq in enumerate(y):
                if not yq:
                    continue
                c = xp * yq
                for r, coef in row[q]:
                    out[r] = out[r] + c * coef
        return tuple(out)

    def _conjugate(self, x: Sequence[FieldElem]) -> Tuple[FieldElem, ...]:
        out = [ZERO_K] * self.dim
        for p, xp in enumerate(x):
            if xp:
                for r, coef in self._conj[p]:
                    out[r] = out[r] + xp * coef
        return tuple(out)

    def _polar_gram(self) -> Tuple[Tuple[FieldElem, ...], ...]:
        # B(e_p, e_q) = Tr(e_p conj(e_q)) = scalar part of e_p conj(e_q) + e_q conj(e_p)
        rows = []
        for p in range(self.dim):
            ep = [ZERO_K] * self.dim
            ep[p] = ONE_K
            row = []
            for q in range(self.dim):
                eq = [ZERO_K] * self.dim
                eq[q] = ONE_K
                s = self._multiply(ep, self._conjugate(eq))
                t = self._multiply(eq, self._conjugate(ep))
                row.append(s[0] + t[0])
            rows.append(tuple(row))
        return tuple(rows)

    # -- numpy tables -----------------------------------------------------

    def golden_table(self) -> np.ndarray:
        """(dim, dim, dim, 2) structure constants; all of ours lie in Z[phi]"""
        table = np.zeros((self.dim, self.dim, self.dim, 2), dtype=np.int64)
        for p in range(self.dim):
            for q in range(self.dim):
                for r, coef in self._products[p][q]:
                    g = coef.to_golden()
                    table[p, q, r] = (g.a, g.b)
        return table

    def product_coefficients(self, p: int, q: int) -> Tuple[Tuple[int, FieldElem], ...]:
        return self._products[p][q]


class AlgebraElem:
    """Immutable coordinate vector over K in an algebra's basis"""

    __slots__ = ("algebra", "coords")

    def __init__(self, algebra: Algebra, coords: Tuple[FieldElem, ...]):
        object.__setattr__(self, "algebra", algebra)
        object.__setattr__(self, "coords", coords)

    def __setattr__(self, name, value):
        raise AttributeError("AlgebraElem is immutable")

    def _check(self, other: "AlgebraElem"):
        if not isinstance(other, AlgebraElem) or other.algebra is not self.algebra:
            raise DimensionMismatchError("elements of different algebras")

    def __add__(self, other):
        self._check(other)
        return AlgebraElem(self.algebra, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        self._check(other)
        return AlgebraElem(self.algebra, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return AlgebraElem(self.algebra, tuple(-a for a in self.coords))

    def __mul__(self, other):
        if isinstance(other, AlgebraElem):
            self._check(other)
            return AlgebraElem(self.algebra, self.algebra._multiply(self.coords, other.coords))
        if isinstance(other, (FieldElem, GoldenInt, int, Fraction)):
            c = FieldElem.coerce(other)
            return AlgebraElem(self.algebra, tuple(c * a for a in self.coords))
        return NotImplemented

    def __rmul__(self, other):
        # scalars are central
        return self.__mul__(other)

    def conj(self) -> "AlgebraElem":
        return AlgebraElem(self.algebra, self.algebra._conjugate(self.coords))

    def trace(self) -> FieldElem:
        """x + conj(x), read off the coordinate of 1"""
        return self.coords[0] + self.algebra._conjugate(self.coords)[0]

    def norm(self) -> FieldElem:
        """x conj(x), read off the coordinate of 1"""
        return self.algebra._multiply(self.coords, self.algebra._conjugate(self.coords))[0]

    def is_zero(self) -> bool:
        return not any(self.coords)

    def halves(self) -> Tuple["AlgebraElem", "AlgebraElem"]:
        """(a, b) with self = a + b l in a doubled algebra"""
        base = self.algebra.base
        if base is None:
            raise DimensionMismatchError(f"{self.algebra.name} is not a doubled algebra")
        m = base.dim
        return AlgebraElem(base, self.coords[:m]), AlgebraElem(base, self.coords[m:])

    def sort_key(self):
        return tuple((c.na, c.nb, c.d) for c in self.coords)

    def render(self) -> str:
        return "(" + ",".join(render_field(c) for c in self.coords) + ")"

    def __eq__(self, other):
        if not isinstance(other, AlgebraElem):
            return NotImplemented
        return self.algebra is other.algebra and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return f"{self.algebra.name}{self.render()}"


# ---------------------------------------------------------------------------
# Operations on elements
# ---------------------------------------------------------------------------

def polar_form(x: AlgebraElem, y: AlgebraElem) -> FieldElem:
    """B(x, y) = N(x + y) - N(x) - N(y) = Tr(x conj(y))"""
    x._check(y)
    gram = x.algebra.gram
    acc = ZERO_K
    for p, xp in enumerate(x.coords):
        if not xp:
            continue
        row = gram[p]
        for q, yq in enumerate(y.coords):
            if yq and row[q]:
                acc = acc + xp * yq * row[q]
    return acc


def inner_product(x: AlgebraElem, y: AlgebraElem) -> FieldElem:
    return polar_form(x, y) / 2


def associator(x: AlgebraElem, y: AlgebraElem, z: AlgebraElem) -> AlgebraElem:
    return (x * y) * z - x * (y * z)


def quat_mul(p: AlgebraElem, q: AlgebraElem) -> AlgebraElem:
    return p * q


def oct_mul(x: AlgebraElem, y: AlgebraElem) -> AlgebraElem:
    return x * y


# ---------------------------------------------------------------------------
# Constructors
# ---------------------------------------------------------------------------

def _sparse(vector: Sequence[FieldElem]) -> Tuple[Tuple[int, FieldElem], ...]:
    return tuple((r, c) for r, c in enumerate(vector) if c)


def reals() -> Algebra:
    unit = ((0, ONE_K),)
    return Algebra("R", ("1",), ((unit,),), (unit,))


def quadratic(name: str, label: str, trace, norm) -> Algebra:
    """Basis (1, t) with t^2 = trace*t - norm and conj(t) = trace - t"""
    s = FieldElem.coerce(trace)
    n = FieldElem.coerce(norm)
    one = ((0, ONE_K),)
    t = ((1, ONE_K),)
    tt = _sparse((-n, s))
    products = ((one, t), (t, tt))
    conjugation = (one, _sparse((s, -ONE_K)))
    return Algebra(name, ("1", label), products, conjugation)


def doubled(name: str, base: Algebra, labels: Sequence[str]) -> Algebra:
    """Cayley-Dickson double of `base` with l^2 = -1 and l a = conj(a) l"""
    m = base.dim
    basis = [base.basis(p) for p in range(m)]
    zero = base.zero()

    def embed(a: AlgebraElem, b: AlgebraElem):
        return _sparse(a.coords + b.coords)

    products: List[List[Tuple]] = [[None] * (2 * m) for _ in range(2 * m)]
    for p in range(2 * m):
        for q in range(2 * m):
            a, b = (basis[p], zero) if p < m else (zero, basis[p - m])
            c, d = (basis[q], zero) if q < m else (zero, basis[q - m])
            first = a * c - d.conj() * b
            second = d * a + b * c.conj()
            products[p][q] = embed(first, second)
    conjugation = []
    for p in range(2 * m):
        if p < m:
            conjugation.append(embed(basis[p].conj(), zero))
        else:
            conjugation.append(embed(zero, -basis[p - m]))
    return Algebra(name, labels, tuple(tuple(r) for r in products), tuple(conjugation), base=base)


REALS = reals()
GAUSSIAN_PLANE = quadratic("C(i)", "i", 0, 1)
EISENSTEIN_PLANE = quadratic("C(w)", "w", -1, 1)
DECAGONAL_PLANE = quadratic("C(z10)", "z", PHI, 1)
QUATERNIONS = doubled("H", GAUSSIAN_PLANE, ("1", "i", "j", "k"))
HYBRID_QUATERNIONS = doubled("H(w)", EISENSTEIN_PLANE, ("1", "w", "j", "wj"))
OCTONIONS = doubled("O", QUATERNIONS, ("1", "i", "j", "k", "l", "il", "jl", "kl"))

AMBIENTS: Dict[str, Algebra] = {
    a.name: a for a in (REALS, GAUSSIAN_PLANE, EISENSTEIN_PLANE, DECAGONAL_PLANE,
                        QUATERNIONS, HYBRID_QUATERNIONS, OCTONIONS)
}


def quaternion(w, x, y, z) -> AlgebraElem:
    return QUATERNIONS.element((w, x, y, z))


def octonion(*coords) -> AlgebraElem:
    return OCTONIONS.element(coords)

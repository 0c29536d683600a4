"""
Exact Matrix Module
===================

Dense matrices over Z, Z[phi] or K with exact determinant, adjugate,
inversion over the coefficient ring and linear solve.

Entries are ints, GoldenInt or FieldElem values; the ring is inferred
from the entries (see Ring.of). Matrices never exceed 16x16 here, so the
algorithms favour exactness and determinism over asymptotics.
"""

from fractions import Fraction
from typing import List, Optional, Sequence

from src.utils.errors import (DimensionMismatchError, DivisionByZeroError, NoSolutionError,
                              NonSquareMatrixError, NotInRingError, NotUnitError)
from src.utils.math.golden import FieldElem, GoldenInt, Ring, render_value


def _exact_div(x, y, ring: Ring):
    if ring is Ring.INTEGER:
        q, r = divmod(x, y)
        if r:
            raise NotInRingError(Fraction(x, y), ring.value)
        return q
    if ring is Ring.GOLDEN:
        return GoldenInt.coerce(x).exact_div(y)
    return x / y


class Matrix:
    """
    Immutable dense row-major matrix over one of the three rings.
    """

    __slots__ = ("rows", "nrows", "ncols", "ring")

    def __init__(self, rows: Sequence[Sequence], ring: Optional[Ring] = None):
        rows = tuple(tuple(r) for r in rows)
        if not rows or not rows[0]:
            raise DimensionMismatchError("matrix dimensions must be positive")
        ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise DimensionMismatchError("ragged matrix rows")
        if ring is None:
            ring = Ring.of(v for r in rows for v in r)
        if ring is Ring.FIELD:
            rows = tuple(tuple(FieldElem.coerce(v) for v in r) for r in rows)
        elif ring is Ring.GOLDEN:
            rows = tuple(tuple(GoldenInt.coerce(v) for v in r) for r in rows)
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = ncols
        self.ring = ring

    @classmethod
    def identity(cls, n: int, ring: Ring = Ring.INTEGER) -> "Matrix":
        zero, one = ring.zero(), ring.one()
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)], ring)

    @classmethod
    def block_diagonal(cls, *blocks: "Matrix") -> "Matrix":
        ring = Ring.INTEGER
        for b in blocks:
            if b.ring is Ring.FIELD or (b.ring is Ring.GOLDEN and ring is Ring.INTEGER):
                ring = b.ring
        zero = ring.zero()
        n = sum(b.ncols for b in blocks)
        rows = []
        offset = 0
        for b in blocks:
            for r in b.rows:
                rows.append([zero] * offset + list(r) + [zero] * (n - offset - b.ncols))
            offset += b.ncols
        return cls(rows, ring)

    @property
    def shape(self):
        return self.nrows, self.ncols

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, index):
        i, j = index
        return self.rows[i][j]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.rows)

    def transpose(self) -> "Matrix":
        return Matrix(list(zip(*self.rows)), self.ring)

    def to_ring(self, ring: Ring) -> "Matrix":
        """Coerce entries into another ring (raises NotInRingError when impossible)"""
        return Matrix([[ring.from_field(v) for v in r] for r in self.rows], ring)

    def to_field(self) -> "Matrix":
        return Matrix(self.rows, Ring.FIELD)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and all(
            a == b for ra, rb in zip(self.rows, other.rows) for a, b in zip(ra, rb))

    def __hash__(self):
        return hash(self.rows)

    def _result_ring(self, other: "Matrix") -> Ring:
        if Ring.FIELD in (self.ring, other.ring):
            return Ring.FIELD
        if Ring.GOLDEN in (self.ring, other.ring):
            return Ring.GOLDEN
        return Ring.INTEGER

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise DimensionMismatchError(f"cannot add {self.shape} and {other.shape}")
        return Matrix([[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)],
                      self._result_ring(other))

    def __sub__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise DimensionMismatchError(f"cannot subtract {self.shape} and {other.shape}")
        return Matrix([[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)],
                      self._result_ring(other))

    def scale(self, c) -> "Matrix":
        return Matrix([[c * v for v in r] for r in self.rows])

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise DimensionMismatchError(f"cannot multiply {self.shape} by {other.shape}")
        ring = self._result_ring(other)
        zero = ring.zero()
        cols = [other.column(j) for j in range(other.ncols)]
        out = []
        for r in self.rows:
            row = []
            for c in cols:
                acc = zero
                for x, y in zip(r, c):
                    if x and y:
                        acc = acc + x * y
                row.append(acc)
            out.append(row)
        return Matrix(out, ring)

    def apply(self, vector: Sequence) -> tuple:
        """Matrix times column vector"""
        if len(vector) != self.ncols:
            raise DimensionMismatchError("vector length does not match column count")
        zero = self.ring.zero()
        out = []
        for r in self.rows:
            acc = zero
            for x, y in zip(r, vector):
                if x and y:
                    acc = acc + x * y
            out.append(acc)
        return tuple(out)

    def minor(self, i: int, j: int) -> "Matrix":
        return Matrix([r[:j] + r[j + 1:] for k, r in enumerate(self.rows) if k != i], self.ring)

    def render(self) -> List[List[str]]:
        return [[render_value(v) for v in r] for r in self.rows]

    def __repr__(self):
        return f"Matrix({self.render()})"


def det(m: Matrix):
    """
    Determinant by fraction-free (Bareiss) elimination; every division is
    exact in the entries' ring, so the result stays in that ring.

    Raises:
        NonSquareMatrixError: m is not square
    """
    if not m.is_square():
        raise NonSquareMatrixError(f"determinant of a {m.nrows}x{m.ncols} matrix")
    n = m.nrows
    ring = m.ring
    a = [list(r) for r in m.rows]
    sign = 1
    previous = ring.one()
    for k in range(n - 1):
        if not a[k][k]:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return ring.zero()
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = _exact_div(a[i][j] * pivot - a[i][k] * a[k][j], previous, ring)
        previous = pivot
    result = a[n - 1][n - 1]
    return result if sign > 0 else -result


def adjugate(m: Matrix) -> Matrix:
    """Transpose of the cofactor matrix, so that m @ adj(m) = det(m) I"""
    if not m.is_square():
        raise NonSquareMatrixError("adjugate of a non-square matrix")
    n = m.nrows
    if n == 1:
        return Matrix([[m.ring.one()]], m.ring)
    cof = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            d = det(m.minor(i, j))
            cof[j][i] = d if (i + j) % 2 == 0 else -d
    return Matrix(cof, m.ring)


def inverse_over_field(m: Matrix) -> Matrix:
    """
    Inverse over K by Gauss-Jordan elimination

    Raises:
        DivisionByZeroError: m is singular
    """
    if not m.is_square():
        raise NonSquareMatrixError("inverse of a non-square matrix")
    n = m.nrows
    zero, one = FieldElem(0), FieldElem(1)
    a = [[FieldElem.coerce(v) for v in r] + [one if i == j else zero for j in range(n)]
         for i, r in enumerate(m.rows)]
    for col in range(n):
        pivot_row = next((i for i in range(col, n) if a[i][col]), None)
        if pivot_row is None:
            raise DivisionByZeroError("matrix is singular")
        a[col], a[pivot_row] = a[pivot_row], a[col]
        inv = a[col][col].inverse()
        a[col] = [v * inv for v in a[col]]
        for i in range(n):
            if i != col and a[i][col]:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[col])]
    return Matrix([r[n:] for r in a], Ring.FIELD)


def invert_over_ring(m: Matrix, ring: Optional[Ring] = None) -> Matrix:
    """
    Inverse with entries in the coefficient ring, det^-1 adj(m).

    Raises:
        NotUnitError: det is not a unit of the ring (carries det)
    """
    ring = ring or (m.ring if m.ring is not Ring.FIELD else Ring.GOLDEN)
    m = m.to_ring(ring)
    d = det(m)
    if not ring.is_unit(d):
        raise NotUnitError(d)
    if ring is Ring.INTEGER:
        inv_det = d  # +-1
    else:
        inv_det = GoldenInt.coerce(d).unit_inverse()
    return adjugate(m).scale(inv_det).to_ring(ring)


def solve_over_ring(a: Matrix, b: Sequence, ring: Optional[Ring] = None) -> tuple:
    """
    Solve a x = b exactly.

    Without a ring the K-solution is returned. With a ring the solution is
    returned in that ring's native type.

    Raises:
        NoSolutionError: a is singular (solution None) or the solution
            leaves the ring (solution holds the K-values)
    """
    if not a.is_square():
        raise NonSquareMatrixError("solve needs a square system")
    if len(b) != a.nrows:
        raise DimensionMismatchError("right-hand side length does not match")
    n = a.nrows
    rows = [[FieldElem.coerce(v) for v in r] + [FieldElem.coerce(bv)] for r, bv in zip(a.rows, b)]
    for col in range(n):
        pivot_row = next((i for i in range(col, n) if rows[i][col]), None)
        if pivot_row is None:
            raise NoSolutionError(None)
        rows[col], rows[pivot_row] = rows[pivot_row], rows[col]
        inv = rows[col][col].inverse()
        rows[col] = [v * inv for v in rows[col]]
        for i in range(n):
            if i != col and rows[i][col]:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[col])]
    solution = tuple(r[n] for r in rows)
    if ring is None or ring is Ring.FIELD:
        return solution
    if not all(ring.contains(x) for x in solution):
        raise NoSolutionError(solution)
    return tuple(ring.from_field(x) for x in solution)

"""
Gram matrices, golden self-duality and discriminant forms.

polar_gram gives B(b_i, b_j) in an order basis. Restricting scalars to Z
through the interleaved basis (b_1, phi b_1, b_2, phi b_2, ...) turns B
into the integral trace form T[2i+s][2j+t] = Tr(phi^(s+t) B_ij). Its
Smith normal form U T V = D describes the discriminant group
T^-1 Z^m / Z^m: the lift of the i-th generator is y_i = V e_i / d_i and a
dual vector y has quotient coordinates (U T y) mod d.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from src.models.algebra import polar_form
from src.models.orders.spec import OrderSpec
from src.utils.errors import (DegenerateFormError, DimensionMismatchError, InconsistencyError,
                              NotUnitError)
from src.utils.logger import Logger
from src.utils.math.golden import PHI, GoldenInt, Ring, golden_pow
from src.utils.math.matrix import Matrix, det, invert_over_ring
from src.utils.math.normal_forms import (SmithForm, int_matmul, nullspace_mod_p, rank_mod_p,
                                         smith_normal_form)
from src.utils.math.projective import projective_points


@dataclass(frozen=True)
class GramData:
    """Polar Gram matrix of an order basis, with entries in the order's ring"""
    order_name: str
    ring: Ring
    matrix: Matrix

    @property
    def rank(self) -> int:
        return self.matrix.nrows

    @property
    def determinant(self):
        return det(self.matrix)

    def golden_entries(self) -> List[List[GoldenInt]]:
        return [[GoldenInt.coerce(v) for v in r] for r in self.matrix.rows]


def polar_gram(spec: OrderSpec) -> GramData:
    """
    G_ij = B(b_i, b_j)

    Raises:
        InconsistencyError: an entry leaves the order's ring
    """
    rows = []
    for bi in spec.basis:
        row = []
        for bj in spec.basis:
            value = polar_form(bi, bj)
            if not spec.ring.contains(value):
                raise InconsistencyError(f"{spec.name}: polar form value {value} outside {spec.ring.value}")
            row.append(spec.ring.from_field(value))
        rows.append(row)
    return GramData(spec.name, spec.ring, Matrix(rows, spec.ring))


def direct_sum(first: GramData, second: GramData, name: str = "") -> GramData:
    return GramData(name or f"{first.order_name}+{second.order_name}", first.ring,
                    Matrix.block_diagonal(first.matrix, second.matrix))


def golden_self_dual(gram: GramData) -> bool:
    """det G is a unit of Z[phi] and G^-1 has entries in Z[phi]"""
    d = GoldenInt.coerce(gram.determinant)
    if not d.is_unit():
        return False
    try:
        invert_over_ring(gram.matrix, Ring.GOLDEN)
    except NotUnitError:
        return False
    return True


def trace_gram(gram: GramData) -> List[List[int]]:
    """
    Integral Gram matrix of the trace form. A Z-order already has an
    integral polar Gram, which is returned as is; a Z[phi]-order uses the
    interleaved Z-basis.
    """
    if gram.ring is Ring.INTEGER:
        return [[int(v) for v in row] for row in gram.matrix.rows]
    entries = gram.golden_entries()
    n = len(entries)
    powers = [golden_pow(PHI, k) for k in range(3)]
    out = [[0] * (2 * n) for _ in range(2 * n)]
    for i in range(n):
        for j in range(n):
            for s in range(2):
                for t in range(2):
                    out[2 * i + s][2 * j + t] = (powers[s + t] * entries[i][j]).trace()
    return out


def scalar_block(value) -> List[List[int]]:
    """Integer matrix of multiplication by a + b phi on (x, y) ~ x + y phi"""
    g = GoldenInt.coerce(value)
    return [[g.a, g.b], [g.b, g.a + g.b]]


def integer_form(golden: np.ndarray) -> np.ndarray:
    """(n, n, 2) golden matrix -> (2n, 2n) integer matrix on the interleaved basis"""
    n = golden.shape[0]
    out = np.zeros((2 * n, 2 * n), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            a, b = int(golden[i, j, 0]), int(golden[i, j, 1])
            out[2 * i:2 * i + 2, 2 * j:2 * j + 2] = scalar_block(GoldenInt(a, b))
    return out


def scalar_map(value, rank: int) -> np.ndarray:
    """Integer matrix of x -> value * x on a rank-n golden module"""
    g = GoldenInt.coerce(value)
    golden = np.zeros((rank, rank, 2), dtype=np.int64)
    for i in range(rank):
        golden[i, i] = (g.a, g.b)
    return integer_form(golden)


# ---------------------------------------------------------------------------
# Discriminant group
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DiscriminantGroup:
    trace: Tuple[Tuple[int, ...], ...]
    smith: SmithForm
    support: Tuple[int, ...]

    @property
    def divisors(self) -> Tuple[int, ...]:
        return tuple(self.smith.divisors[i] for i in self.support)

    @property
    def order(self) -> int:
        out = 1
        for d in self.divisors:
            out *= d
        return out

    @property
    def dimension(self) -> int:
        return len(self.trace)

    def lift(self, coords: Sequence[int]) -> Tuple[Fraction, ...]:
        """Dual-lattice vector sum_k t_k V e_{s_k} / d_{s_k}"""
        v = self.smith.right
        m = self.dimension
        out = [Fraction(0)] * m
        for t, s in zip(coords, self.support):
            if t:
                d = self.smith.divisors[s]
                for r in range(m):
                    out[r] += Fraction(t * v[r][s], d)
        return tuple(out)

    def reduce(self, y: Sequence) -> Tuple[int, ...]:
        """
        Quotient coordinates of a dual vector

        Raises:
            InconsistencyError: y is not in the dual lattice
        """
        u = self.smith.left
        m = self.dimension
        ty = [sum((self.trace[a][b] * Fraction(y[b]) for b in range(m) if y[b]), Fraction(0))
              for a in range(m)]
        out = []
        for s in self.support:
            d = self.smith.divisors[s]
            # (U T y)_s must be integral
            value = sum((u[s][a] * ty[a] for a in range(m) if u[s][a]), Fraction(0))
            if value.denominator != 1:
                raise InconsistencyError("vector is not in the dual lattice")
            out.append(int(value) % d)
        return tuple(out)

    def induced_map(self, g: Sequence[Sequence[int]]) -> np.ndarray:
        """
        Action on quotient coordinates of an integer map x -> g x
        (column convention) that preserves the dual lattice.

        Raises:
            InconsistencyError: a needed entry of U T g V is not divisible
                by its divisor
        """
        g = [[int(x) for x in r] for r in g]
        utgv = int_matmul(int_matmul(int_matmul(self.smith.left, self.trace), g), self.smith.right)
        k = len(self.support)
        out = np.zeros((k, k), dtype=np.int64)
        for a, s in enumerate(self.support):
            for b, t in enumerate(self.support):
                d = self.smith.divisors[t]
                value = utgv[s][t]
                if value % d:
                    raise InconsistencyError(f"induced map entry ({s}, {t}) not divisible by {d}")
                out[a, b] = (value // d) % self.smith.divisors[s]
        return out

    def lift_compatible(self, g: Sequence[Sequence[int]]) -> bool:
        """
        g sends the lattice into itself modulo the discriminant, so that the
        choice of lift y_i or y_i + e_k does not change the image class
        """
        g = [[int(x) for x in r] for r in g]
        utg = int_matmul(int_matmul(self.smith.left, self.trace), g)
        return all(utg[s][c] % self.smith.divisors[s] == 0
                   for s in self.support for c in range(self.dimension))


def discriminant_group(trace: Sequence[Sequence[int]]) -> DiscriminantGroup:
    """
    Raises:
        DegenerateFormError: the trace form is singular
    """
    smith = smith_normal_form(trace)
    if any(d == 0 for d in smith.divisors):
        raise DegenerateFormError("trace form is singular")
    support = tuple(i for i, d in enumerate(smith.divisors) if d > 1)
    return DiscriminantGroup(tuple(tuple(r) for r in trace), smith, support)


# ---------------------------------------------------------------------------
# Discriminant quadratic form over F_p
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DiscriminantForm:
    """
    p-elementary discriminant form. gram5 holds the bilinear numerators
    b(y, y') * p mod p; q(y) = b(y, y) / 2.
    """
    group: DiscriminantGroup
    prime: int
    gram5: np.ndarray

    @property
    def rank(self) -> int:
        return self.gram5.shape[0]

    @property
    def half(self) -> int:
        return pow(2, self.prime - 2, self.prime)

    def b(self, x, y) -> int:
        return int(np.asarray(x) @ self.gram5 @ np.asarray(y)) % self.prime

    def q(self, x) -> int:
        return (self.half * self.b(x, x)) % self.prime

    def q_batch(self, vectors: np.ndarray) -> np.ndarray:
        values = np.einsum("ni,ij,nj->n", vectors, self.gram5, vectors)
        return (self.half * values) % self.prime

    def b_batch(self, vectors: np.ndarray, y) -> np.ndarray:
        return (vectors @ (self.gram5 @ np.asarray(y))) % self.prime


def discriminant_form(group: DiscriminantGroup) -> DiscriminantForm:
    """
    M = V_S^T T V_S; the quadratic numerator of t is (t^T M t / 2p) mod p.

    Raises:
        DegenerateFormError: divisors are not all one odd prime
    """
    divisors = set(group.divisors)
    if len(divisors) != 1:
        raise DegenerateFormError(f"discriminant divisors {sorted(divisors)} are not one prime")
    p = divisors.pop()
    if p == 2 or any(p % k == 0 for k in range(2, int(p ** 0.5) + 1)):
        raise DegenerateFormError(f"discriminant exponent {p} is not an odd prime")
    v = group.smith.right
    m = group.dimension
    v_s = [[v[r][s] for s in group.support] for r in range(m)]
    v_t = [list(c) for c in zip(*v_s)]
    big = int_matmul(int_matmul(v_t, group.trace), v_s)
    if any(x % p for r in big for x in r):
        raise InconsistencyError("lifted Gram matrix is not divisible by the discriminant prime")
    gram = np.array([[(x // p) % p for x in r] for r in big], dtype=np.int64)
    if rank_mod_p(gram.tolist(), p) != gram.shape[0]:
        raise DegenerateFormError("discriminant bilinear form is degenerate")
    return DiscriminantForm(group, p, gram)


def isotropic_lines(form: DiscriminantForm) -> np.ndarray:
    points = projective_points(form.rank, form.prime)
    return points[form.q_batch(points) == 0]


@dataclass(frozen=True)
class WittDecomposition:
    hyperbolic_pairs: Tuple[Tuple[Tuple[int, ...], Tuple[int, ...]], ...]
    anisotropic_basis: Tuple[Tuple[int, ...], ...]

    @property
    def hyperbolic_rank(self) -> int:
        return len(self.hyperbolic_pairs)


def _first_isotropic(form: DiscriminantForm, basis: np.ndarray) -> Optional[np.ndarray]:
    p = form.prime
    coefficients = projective_points(basis.shape[0], p)
    vectors = (coefficients @ basis) % p
    hits = np.nonzero(form.q_batch(vectors) == 0)[0]
    return vectors[hits[0]] if len(hits) else None


def witt_decomposition(form: DiscriminantForm) -> WittDecomposition:
    """
    Greedy split into hyperbolic planes: take the first isotropic x of the
    current subspace, a partner y with b(x, y) = 1 made isotropic as
    y - q(y) x, and continue on the orthogonal complement.
    """
    p = form.prime
    basis = np.eye(form.rank, dtype=np.int64)
    pairs = []
    while basis.shape[0] > 0:
        x = _first_isotropic(form, basis)
        if x is None:
            break
        pairings = form.b_batch(basis, x)
        w = int(np.nonzero(pairings)[0][0])
        y = (basis[w] * pow(int(pairings[w]), p - 2, p)) % p
        y = (y - form.q(y) * x) % p
        if form.q(y) or form.b(x, y) != 1:
            raise InconsistencyError("hyperbolic partner construction failed")
        pairs.append((tuple(int(c) for c in x), tuple(int(c) for c in y)))
        constraints = np.stack((form.b_batch(basis, x), form.b_batch(basis, y)))
        null = nullspace_mod_p(constraints.tolist(), p)
        if not null:
            basis = np.zeros((0, form.rank), dtype=np.int64)
            break
        basis = (np.array(null, dtype=np.int64) @ basis) % p
    return WittDecomposition(tuple(pairs), tuple(tuple(int(c) for c in r) for r in basis))


@dataclass(frozen=True)
class FormClassification:
    rank: int
    prime: int
    hyperbolic_rank: int
    anisotropic_dimension: int
    witt_type: str
    determinant_square: bool
    isotropic_line_count: int
    value_counts: Dict[int, int]


def value_counts(form: DiscriminantForm) -> Dict[int, int]:
    """Number of nonzero vectors taking each value of q"""
    points = projective_points(form.rank, form.prime)
    values = form.q_batch(points)
    counts = np.zeros(form.prime, dtype=np.int64)
    # q(c v) = c^2 q(v) over the nonzero multiples of each point
    for c in range(1, form.prime):
        counts += np.bincount((c * c * values) % form.prime, minlength=form.prime)
    return {v: int(counts[v]) for v in range(form.prime)}


def discriminant_form_classify(form: DiscriminantForm) -> FormClassification:
    """
    Witt type from the isotropic line count, cross-checked against the
    anisotropic kernel of the greedy Witt decomposition

    Raises:
        InconsistencyError: the count matches neither type, or the two
            classifications disagree
    """
    logger = Logger.instance()
    p = form.prime
    counts = value_counts(form)
    lines = counts[0] // (p - 1)
    if form.rank % 2:
        witt_type = "odd"
        if lines != (p ** (form.rank - 1) - 1) // (p - 1):
            raise InconsistencyError(f"odd-rank form has {lines} isotropic lines")
    else:
        by_count = [t for t in ("plus", "minus")
                    if expected_isotropic_lines(form.rank, p, t) == lines]
        if not by_count:
            raise InconsistencyError(f"{lines} isotropic lines match neither plus nor minus type "
                                     f"in rank {form.rank} over F{p}")
        witt_type = by_count[0]
    witt = witt_decomposition(form)
    anisotropic = len(witt.anisotropic_basis)
    if anisotropic != {"plus": 0, "minus": 2, "odd": 1}[witt_type]:
        raise InconsistencyError(f"{witt_type} type by count but anisotropic kernel of dimension "
                                 f"{anisotropic}")
    d = int(det(Matrix(form.gram5.tolist(), Ring.INTEGER))) % p
    square = pow(d, (p - 1) // 2, p) == 1
    logger.debug(f"discriminant form rank {form.rank} over F{form.prime}: "
                 f"hyperbolic rank {witt.hyperbolic_rank}, {witt_type} type, {lines} isotropic lines")
    return FormClassification(form.rank, form.prime, witt.hyperbolic_rank, anisotropic,
                              witt_type, square, lines, counts)


def expected_isotropic_lines(rank: int, prime: int, witt_type: str) -> int:
    """Isotropic point count of a nondegenerate even-dimensional form of the given type"""
    if rank % 2:
        raise DimensionMismatchError("closed form only for even rank")
    m = rank // 2
    sign = 1 if witt_type == "plus" else -1
    return (prime ** m - sign) * (prime ** (m - 1) + sign) // (prime - 1)

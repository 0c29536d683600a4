"""
Norm shells and their root-system reports.

A Shell is a finite, duplicate-free set of ambient elements of one norm,
kept in a canonical total order (lexicographic on the normalized K
coordinates) so that listings, witnesses and hashes are reproducible.
"""

from dataclasses import dataclass, field
import random
from typing import Dict, Iterable, Optional, Tuple

import numpy as np

from src.models.algebra import Algebra, AlgebraElem
from src.models.orders.spec import OrderSpec, StructureTables, coordinates_of, verify_order
from src.utils.errors import (DimensionMismatchError, GoldenOrdersError, InconsistencyError,
                              NotInOrderError)
from src.utils.logger import Logger
from src.utils.math.golden import FieldElem, render_field
from src.utils.math.golden_array import DTYPE, as_golden_array, row_keys, structure_product


@dataclass(frozen=True, eq=False)
class Shell:
    algebra: Algebra
    norm_value: FieldElem
    elements: Tuple[AlgebraElem, ...]
    order: Optional[OrderSpec] = None
    name: str = ""
    coordinates: Optional[np.ndarray] = None
    details: Dict[str, object] = field(default_factory=dict)

    @classmethod
    def from_elements(cls, algebra: Algebra, norm_value, elements: Iterable[AlgebraElem],
                      order: Optional[OrderSpec] = None, name: str = "",
                      details: Optional[dict] = None) -> "Shell":
        """
        Canonically ordered shell; order coordinates are attached when an
        order is given.

        Raises:
            InconsistencyError: an element has the wrong norm
        """
        norm_value = FieldElem.coerce(norm_value)
        unique = sorted(set(elements), key=AlgebraElem.sort_key)
        for e in unique:
            if e.algebra is not algebra:
                raise DimensionMismatchError("shell element from another algebra")
            if e.norm() != norm_value:
                raise InconsistencyError(f"{name}: element {e.render()} has norm {e.norm()}")
        coordinates = None
        if order is not None:
            values = [c for e in unique for c in coordinates_of(e, order)]
            coordinates = as_golden_array(values, (len(unique), order.rank))
        return cls(algebra, norm_value, tuple(unique), order, name, coordinates, dict(details or {}))

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def as_set(self) -> frozenset:
        return frozenset(self.elements)


@dataclass(frozen=True)
class RootReport:
    cardinality: int
    centrally_symmetric: bool
    reflection_closed: bool
    reflections_involutive: bool
    cartan_sign_stable: bool
    cartan_values: Tuple[FieldElem, ...]
    cartan_in_ring: bool
    crystallographic: bool

    def is_root_shell(self) -> bool:
        return (self.centrally_symmetric and self.reflection_closed
                and self.reflections_involutive and self.cartan_in_ring)


def _gram_rows(algebra: Algebra):
    return [[(q, g) for q, g in enumerate(row) if g] for row in algebra.gram]


def verify_root_shell(shell: Shell) -> RootReport:
    """
    Reflect every element in every other, exactly over K.

    r_a(b) = b - (B(b, a) / N(a)) a, and B(b, a) / N(a) is the Cartan value
    2<b, a>/<a, a>.
    """
    logger = Logger.instance()
    elements = [e.coords for e in shell.elements]
    index = {c: i for i, c in enumerate(elements)}
    n = len(elements)
    if n == 0 or any(not any(c) for c in elements):
        raise GoldenOrdersError("root shells must be nonempty and avoid 0")

    central = all(tuple(-x for x in c) in index for c in elements)
    gram = _gram_rows(shell.algebra)
    reflections = [[-1] * n for _ in range(n)]
    cartan = [[None] * n for _ in range(n)]
    values = set()
    closed = True
    for a, alpha in enumerate(elements):
        # G alpha, so that B(beta, alpha) = beta . (G alpha)
        g_alpha = []
        for p in range(len(alpha)):
            acc = FieldElem(0)
            for q, g in gram[p]:
                if alpha[q]:
                    acc = acc + g * alpha[q]
            g_alpha.append(acc)
        inv_norm = shell.elements[a].norm().inverse()
        for b, beta in enumerate(elements):
            dot = FieldElem(0)
            for x, y in zip(beta, g_alpha):
                if x and y:
                    dot = dot + x * y
            c = dot * inv_norm
            cartan[b][a] = c
            values.add(c)
            image = tuple(x - c * y for x, y in zip(beta, alpha)) if c else beta
            j = index.get(image)
            if j is None:
                closed = False
            else:
                reflections[a][b] = j

    involutive = closed and all(reflections[a][reflections[a][b]] == b
                                for a in range(n) for b in range(n))
    sign_stable = closed and all(cartan[reflections[a][b]][a] == -cartan[b][a]
                                 for a in range(n) for b in range(n))
    ordered = tuple(sorted(values, key=lambda v: (v.na, v.nb, v.d)))
    report = RootReport(
        cardinality=n,
        centrally_symmetric=central,
        reflection_closed=closed,
        reflections_involutive=involutive,
        cartan_sign_stable=sign_stable,
        cartan_values=ordered,
        cartan_in_ring=all(v.is_golden() for v in values),
        crystallographic=all(v.is_integer() for v in values),
    )
    logger.debug(f"{shell.name or 'shell'}: {n} roots, {len(values)} Cartan values, "
                 f"closed={closed}, crystallographic={report.crystallographic}")
    return report


@dataclass(frozen=True)
class CoordinateSplit:
    """Orthogonal decomposition of the ambient into two coordinate blocks"""
    first: Tuple[int, ...]
    second: Tuple[int, ...]

    @classmethod
    def halves(cls, algebra: Algebra) -> "CoordinateSplit":
        """(base part, l part) of a doubled algebra"""
        if algebra.base is None:
            raise DimensionMismatchError(f"{algebra.name} is not a doubled algebra")
        m = algebra.base.dim
        return cls(tuple(range(m)), tuple(range(m, 2 * m)))

    def validate(self, algebra: Algebra):
        """
        Raises:
            DimensionMismatchError: blocks overlap, miss a coordinate or are
                not orthogonal under the polar form
        """
        if sorted(self.first + self.second) != list(range(algebra.dim)):
            raise DimensionMismatchError("split must partition the coordinates")
        if any(algebra.gram[p][q] for p in self.first for q in self.second):
            raise DimensionMismatchError("split blocks are not orthogonal")


@dataclass(frozen=True)
class MixedProjection:
    mixed_count: int
    decomposable: bool
    first_mixed: Optional[AlgebraElem] = None


def mixed_projection_report(shell: Shell, split: CoordinateSplit) -> MixedProjection:
    """Count roots with nonzero projection on both blocks"""
    split.validate(shell.algebra)
    mixed = [e for e in shell.elements
             if any(e.coords[p] for p in split.first) and any(e.coords[q] for q in split.second)]
    return MixedProjection(len(mixed), not mixed, mixed[0] if mixed else None)


@dataclass(frozen=True)
class NcAxiomReport:
    order_valid: bool
    finite: bool
    centrally_symmetric: bool
    single_norm_shell: bool
    reflection_closed: bool
    golden_cartan: bool

    def all_hold(self) -> bool:
        return all((self.order_valid, self.finite, self.centrally_symmetric,
                    self.single_norm_shell, self.reflection_closed, self.golden_cartan))


def verify_nc_axioms(spec: OrderSpec, shell: Shell,
                     report: Optional[RootReport] = None) -> NcAxiomReport:
    """Six clauses of an integral root-shell system over Z[phi]"""
    try:
        verify_order(spec)
        order_valid = True
    except GoldenOrdersError:
        order_valid = False
    try:
        in_order = all(coordinates_of(e, spec) is not None for e in shell.elements)
    except NotInOrderError:
        in_order = False
    report = report or verify_root_shell(shell)
    single = in_order and all(e.norm() == shell.norm_value for e in shell.elements)
    return NcAxiomReport(
        order_valid=order_valid,
        finite=len(shell) > 0,
        centrally_symmetric=report.centrally_symmetric,
        single_norm_shell=single,
        reflection_closed=report.reflection_closed,
        golden_cartan=report.cartan_in_ring,
    )


@dataclass(frozen=True)
class UnitObjectSummary:
    cardinality: int
    closed_under_multiplication: bool
    abelian: bool
    associative: bool


def unit_object_summary(shell: Shell, tables: StructureTables,
                        samples: int = 1000, seed: int = 0) -> UnitObjectSummary:
    """
    Multiplicative facts about a unit shell: closure, commutativity on all
    pairs, associativity on sampled triples.
    """
    coords = shell.coordinates
    table = tables.product_array()
    n = coords.shape[0]
    keys = set(row_keys(coords))
    left = np.repeat(coords, n, axis=0)
    right = np.tile(coords, (n, 1, 1))
    products = structure_product(left, right, table)
    swapped = structure_product(right, left, table)
    closed = all(k in keys for k in row_keys(products))
    abelian = bool(np.array_equal(products, swapped))
    rng = random.Random(seed)
    picks = np.array([[rng.randrange(n) for _ in range(3)] for _ in range(samples)], dtype=DTYPE)
    associative = True
    if samples:
        x, y, z = coords[picks[:, 0]], coords[picks[:, 1]], coords[picks[:, 2]]
        lhs = structure_product(structure_product(x, y, table), z, table)
        rhs = structure_product(x, structure_product(y, z, table), table)
        associative = bool(np.array_equal(lhs, rhs))
    return UnitObjectSummary(n, closed, abelian, associative)


def export_listing(shell: Shell) -> str:
    """One element per line in canonical order and rendering"""
    return "".join(e.render() + "\n" for e in shell.elements)


def render_cartan_values(report: RootReport) -> Tuple[str, ...]:
    return tuple(render_field(v) for v in report.cartan_values)

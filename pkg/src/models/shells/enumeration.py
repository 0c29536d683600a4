"""
Unit-shell enumeration by two independent strategies.

Closure: start from the norm-one basis elements and construction
generators with their negatives and conjugates, and multiply until no new
element appears. Box: Fincke-Pohst on the polar form (Z-orders) or on the
trace form over the interleaved Z-basis (Z[phi]-orders), keeping vectors of
exact form value and then exact norm one. The two sets must agree.
"""

from typing import List, Optional, Tuple

import numpy as np

from src.models.duality import polar_gram, trace_gram
from src.models.orders.spec import OrderSpec, StructureTables, coordinates_of, verify_order
from src.models.shells.shell import Shell
from src.utils.errors import InconsistencyError
from src.utils.logger import Logger
from src.utils.math.golden import FieldElem, GoldenInt, Ring
from src.utils.math.golden_array import (DTYPE, gmatmul, gdot, row_keys, structure_product)
from src.utils.math.lattice import coordinate_box, short_vectors, top_level_values
from src.utils.math.matrix import Matrix, inverse_over_field
from src.utils.parallel import run_partitioned, split_round_robin

# no unit shell in the catalog comes near this
CLOSURE_LIMIT = 100000


def _golden_row(spec: OrderSpec, coords) -> List[Tuple[int, int]]:
    if spec.ring is Ring.GOLDEN:
        return [(c.a, c.b) for c in coords]
    return [(int(c), 0) for c in coords]


def closure_strategy(spec: OrderSpec, tables: StructureTables) -> np.ndarray:
    """Multiplicative closure of the norm-one seeds, in order coordinates"""
    logger = Logger.instance()
    table = tables.product_array()
    conj = tables.conj_array()
    seeds = []
    for e in spec.basis + spec.generators:
        if e.norm() == 1:
            seeds.append(_golden_row(spec, coordinates_of(e, spec)))
    if not seeds:
        raise InconsistencyError(f"{spec.name}: no norm-one seed")
    start = np.array(seeds, dtype=DTYPE)
    start = np.concatenate((start, -start, gmatmul(start, conj), -gmatmul(start, conj)))

    known = {}
    frontier = []
    for key, row in zip(row_keys(start), start):
        if key not in known:
            known[key] = row
            frontier.append(row)
    rounds = 0
    while frontier:
        rounds += 1
        current = np.array(list(known.values()), dtype=DTYPE)
        new_rows = np.array(frontier, dtype=DTYPE)
        f, m = len(new_rows), len(current)
        left = np.repeat(new_rows, m, axis=0)
        right = np.tile(current, (f, 1, 1))
        products = np.concatenate((structure_product(left, right, table),
                                   structure_product(right, left, table)))
        frontier = []
        for key, row in zip(row_keys(products), products):
            if key not in known:
                known[key] = row
                frontier.append(row)
        if len(known) > CLOSURE_LIMIT:
            raise InconsistencyError(f"{spec.name}: unit closure exceeds {CLOSURE_LIMIT} elements")
    logger.debug(f"{spec.name}: closure of {len(seeds)} seeds reached {len(known)} units "
                 f"in {rounds} rounds")
    return np.array(list(known.values()), dtype=DTYPE)


def search_lattice(spec: OrderSpec) -> Tuple[List[List[int]], int]:
    """Integral Gram matrix searched by the box strategy and its exact target value"""
    target = 2 if spec.ring is Ring.INTEGER else 4
    return trace_gram(polar_gram(spec)), target


def _to_golden_rows(spec: OrderSpec, vectors: List[Tuple[int, ...]]) -> np.ndarray:
    n = spec.rank
    if not vectors:
        return np.zeros((0, n, 2), dtype=DTYPE)
    arr = np.array(vectors, dtype=DTYPE)
    if spec.ring is Ring.GOLDEN:
        return arr.reshape(len(vectors), n, 2)
    return np.stack((arr, np.zeros_like(arr)), axis=-1)


def box_strategy(spec: OrderSpec, workers: int = 1) -> Tuple[np.ndarray, dict]:
    """
    Fincke-Pohst enumeration of the unit shell; returns the units and the
    search statistics (form bound, coordinate box, vectors visited)
    """
    logger = Logger.instance()
    gram, target = search_lattice(spec)
    inverse = inverse_over_field(Matrix(gram, Ring.FIELD))
    box = coordinate_box([inverse[i, i].a for i in range(len(gram))], target)

    top = top_level_values(gram, target)
    parts = [p for p in split_round_robin(top, workers) if p]
    chunks = run_partitioned(lambda values: short_vectors(gram, target, values), parts, workers)
    vectors = sorted((v for chunk in chunks for v in chunk), key=lambda v: tuple(reversed(v)))
    visited = len(vectors)
    exact = [v for v in vectors
             if sum(gram[i][j] * v[i] * v[j] for i in range(len(v)) for j in range(len(v))) == target]
    rows = _to_golden_rows(spec, exact)

    # exact N = 1 through the golden polar form, N = B(x, x) / 2
    golden_gram = np.array([[(GoldenInt.coerce(v).a, GoldenInt.coerce(v).b) for v in r]
                            for r in polar_gram(spec).matrix.rows], dtype=DTYPE)
    norms2 = gdot(gmatmul(rows, golden_gram), rows) if len(rows) else np.zeros((0, 2), dtype=DTYPE)
    keep = (norms2[:, 0] == 2) & (norms2[:, 1] == 0)
    units = rows[keep]
    stats = {"bound": target, "box": list(box), "visited": visited, "form_exact": len(exact)}
    logger.debug(f"{spec.name}: box search visited {visited} vectors, {len(units)} units, box {box}")
    return units, stats


def enumerate_unit_shell(spec: OrderSpec, workers: int = 1,
                         tables: Optional[StructureTables] = None) -> Shell:
    """
    The norm-one shell of an order, enumerated twice and cross-checked

    Raises:
        InconsistencyError: the closure and box strategies disagree
    """
    logger = Logger.instance()
    tables = tables or verify_order(spec)
    closure = closure_strategy(spec, tables)
    units, stats = box_strategy(spec, workers)
    closure_keys = set(row_keys(closure))
    box_keys = set(row_keys(units))
    if closure_keys != box_keys:
        raise InconsistencyError(f"{spec.name}: closure found {len(closure_keys)} units, "
                                 f"box search found {len(box_keys)}")
    # conjugation preserves the shell
    conj_keys = set(row_keys(gmatmul(closure, tables.conj_array())))
    if conj_keys != closure_keys:
        raise InconsistencyError(f"{spec.name}: unit shell is not closed under conjugation")
    elements = [spec.element_from_pairs(row) for row in closure]
    stats["closure_size"] = len(closure)
    shell = Shell.from_elements(spec.algebra, FieldElem(1), elements, spec,
                                name=f"{spec.name} units", details=stats)
    logger.info(f"{spec.name}: {len(shell)} units")
    return shell

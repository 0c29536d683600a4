"""
Isotropic stable-closure search on the trace discriminant of G0.

The quotient (Z/5)^8 carries the induced form q and the induced actions
of conjugation, left and right multiplication by the eight basis elements
and multiplication by phi. A trace-integral gluing needs a nonzero
subspace stable under all of them on which q vanishes. For each isotropic
line the smallest stable subspace containing it is computed by batched
row reduction over F5.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Tuple

import numpy as np

from src.controllers.search.context import G0Context, g0_context
from src.controllers.search.report import FilterClass, SearchReport, classify
from src.models.duality import (DiscriminantForm, DiscriminantGroup, FormClassification,
                                discriminant_form, discriminant_form_classify,
                                discriminant_group, integer_form, isotropic_lines, scalar_map,
                                trace_gram)
from src.utils.errors import InconsistencyError
from src.utils.logger import Logger
from src.utils.math.golden import PHI, SQRT5
from src.utils.math.golden_array import gmul
from src.utils.math.normal_forms import batch_row_reduce_mod_p
from src.utils.math.projective import line_count, projective_points
from src.utils.parallel import run_partitioned, split_chunks

CHUNK_SIZE = 4096


@dataclass
class TowerReport:
    report: SearchReport
    classification: FormClassification
    divisors: Tuple[int, ...]
    lifts: List[str]
    phi_scalar: int
    sqrt5_annihilates: bool
    lifts_compatible: bool
    adjoint_compatible: bool
    dimension_histogram: Dict[int, int] = field(default_factory=dict)
    anisotropic_witness: Tuple[int, ...] = ()


def golden_maps(ctx: G0Context) -> Dict[str, np.ndarray]:
    """Column-convention golden matrices of the generating maps"""
    tables = ctx.tables
    maps = {"conj": tables.conjugation_matrix()}
    for m in range(ctx.rank):
        maps[f"L{m}"] = tables.left_multiplication(m)
    for m in range(ctx.rank):
        maps[f"R{m}"] = tables.right_multiplication(m)
    phi = np.zeros((ctx.rank, ctx.rank, 2), dtype=np.int64)
    for i in range(ctx.rank):
        phi[i, i] = (PHI.a, PHI.b)
    maps["phi"] = phi
    return maps


def adjoint_maps(ctx: G0Context, maps: Dict[str, np.ndarray]) -> Dict[str, np.ndarray]:
    """
    B(g x, y) = B(x, g' y): for x -> b_m x the adjoint is x -> conj(b_m) x,
    conj(b_m) = sum_k c_mk b_k read from the conjugation table. Conjugation
    and phi are self-adjoint.
    """
    out = {"conj": maps["conj"], "phi": maps["phi"]}
    for side in ("L", "R"):
        for m in range(ctx.rank):
            acc = np.zeros_like(maps[f"{side}{m}"])
            for k in range(ctx.rank):
                c = ctx.conj_table[m, k]
                if c.any():
                    acc = acc + gmul(c[None, None, :], maps[f"{side}{k}"])
            out[f"{side}{m}"] = acc
    return out


def _matvec(g: np.ndarray, y) -> List[Fraction]:
    return [sum((int(g[r, c]) * y[c] for c in range(len(y)) if y[c]), Fraction(0))
            for r in range(g.shape[0])]


def lift_action_consistent(group: DiscriminantGroup, g: np.ndarray, induced: np.ndarray) -> bool:
    """
    Lift each quotient basis vector as y_i and as y_i + e_k, apply g and
    reduce; every choice must give column i of the induced matrix
    """
    k = len(group.support)
    m = group.dimension
    for i in range(k):
        e = [0] * k
        e[i] = 1
        y = list(group.lift(e))
        expected = tuple(int(x) for x in induced[:, i])
        if group.reduce(_matvec(g, y)) != expected:
            return False
        for c in range(m):
            alt = list(y)
            alt[c] += 1
            if group.reduce(_matvec(g, alt)) != expected:
                return False
    return True


def _stable_closure(lines: np.ndarray, transposed: np.ndarray,
                    p: int) -> Tuple[np.ndarray, np.ndarray]:
    """Rank and reduced basis of the smallest stable subspace through each line"""
    dim = lines.shape[1]
    basis = lines[:, None, :] % p
    ranks = np.ones(len(lines), dtype=np.int64)
    while True:
        images = [basis] + [np.einsum("brc,cd->brd", basis, t) % p for t in transposed]
        reduced, rank = batch_row_reduce_mod_p(np.concatenate(images, axis=1), p)
        basis = reduced[:, :dim, :]
        if np.array_equal(rank, ranks):
            return rank, basis
        ranks = rank


def _totally_isotropic(form: DiscriminantForm, rows: np.ndarray) -> bool:
    return not np.any((rows @ form.gram5 @ rows.T) % form.prime)


class TowerSearch:
    """Stable isotropic closures on the trace discriminant form of the icosian double"""

    def __init__(self, workers: int = 1):
        self.logger = Logger.instance()
        self.workers = workers
        self.ctx = g0_context()

    def closures(self, lines: np.ndarray, transposed: np.ndarray,
                 p: int) -> Tuple[np.ndarray, np.ndarray]:
        """Closure ranks and bases of each line under the induced maps, on the worker pool"""
        chunks = split_chunks(lines, CHUNK_SIZE)
        results = run_partitioned(lambda chunk: _stable_closure(chunk, transposed, p), chunks,
                                  self.workers)
        return np.concatenate([r for r, _ in results]), np.concatenate([b for _, b in results])

    def run(self, full: bool = False) -> TowerReport:
        """
        Raises:
            InconsistencyError: an induced map is ill defined or the phi-action
                is not the expected scalar
        """
        ctx = self.ctx
        group = discriminant_group(trace_gram(ctx.gram))
        form = discriminant_form(group)
        classification = discriminant_form_classify(form)
        p = form.prime
        self.logger.info(f"tower search: discriminant {group.divisors}, "
                         f"{classification.witt_type} type, "
                         f"{classification.isotropic_line_count} isotropic lines")

        maps = golden_maps(ctx)
        adjoints = adjoint_maps(ctx, maps)
        induced = {}
        lifts_ok = True
        for name, golden in maps.items():
            g = integer_form(golden)
            if not group.lift_compatible(g.tolist()):
                raise InconsistencyError(f"{name} does not preserve G0 modulo the discriminant")
            induced[name] = group.induced_map(g.tolist())
            lifts_ok &= lift_action_consistent(group, g, induced[name])
        if not lifts_ok:
            raise InconsistencyError("induced maps disagree with the lifted integral maps")

        adjoint_ok = True
        for name, golden in adjoints.items():
            if name in ("conj", "phi"):
                a_adj = induced[name]
            else:
                a_adj = group.induced_map(integer_form(golden).tolist())
            lhs = (induced[name].T @ form.gram5) % p
            rhs = (form.gram5 @ a_adj) % p
            adjoint_ok &= bool(np.array_equal(lhs, rhs))

        identity = np.eye(form.rank, dtype=np.int64)
        phi_scalar = -1
        for s in range(p):
            if np.array_equal(induced["phi"], (s * identity) % p):
                phi_scalar = s
        if phi_scalar < 0:
            raise InconsistencyError("phi does not act as a scalar on the discriminant")
        sqrt5 = group.induced_map(scalar_map(SQRT5, ctx.rank).tolist())
        sqrt5_zero = not np.any(sqrt5 % p)

        lines = isotropic_lines(form)
        transposed = np.stack([induced[name].T for name in maps])
        ranks, bases = self.closures(lines, transposed, p)

        candidate = np.zeros(len(lines), dtype=bool)
        for i in np.nonzero(ranks < form.rank)[0]:
            candidate[i] = _totally_isotropic(form, bases[i, :ranks[i]])
        histogram = {int(d): int(np.count_nonzero(ranks == d)) for d in np.unique(ranks)}

        points = projective_points(form.rank, p)
        anisotropic = points[np.nonzero(form.q_batch(points))[0][0]]

        report = classify("p6-tower", lines, [(FilterClass.MULT_FAIL, candidate)],
                          lambda i: str(tuple(int(x) for x in lines[i])), full)
        report.extra.update({
            "projective_lines": line_count(form.rank, p),
            "isotropic_lines": len(lines),
            "closure_dim_8": histogram.get(form.rank, 0),
            "candidates": int(np.count_nonzero(candidate)),
            "hyperbolic_rank": classification.hyperbolic_rank,
        })
        lifts = []
        for i in range(len(group.support)):
            e = [0] * len(group.support)
            e[i] = 1
            coords = ",".join(f"{y.numerator}/{y.denominator}" for y in group.lift(e))
            lifts.append(f"({coords})")
        self.logger.info(f"tower search: closure dimensions {histogram}, "
                         f"{report.extra['candidates']} candidates")
        return TowerReport(report, classification, group.divisors, lifts, phi_scalar, sqrt5_zero,
                           lifts_ok, adjoint_ok, histogram, tuple(int(x) for x in anisotropic))


def tower_search(workers: int = 1, full: bool = False) -> TowerReport:
    return TowerSearch(workers).run(full)

"""
Denominator-two gluings of the icosian double.

A line v of F4^8 = G0 / 2 G0 (F4 = Z[phi]/2, codes a + 2b for a + b*phi)
proposes the module G_v = G0 + Z[phi] (v/2). Filters, in default order:

  F1 mixed       both quaternionic halves of v are nonzero
  F2 conj        conj(v) = lambda v mod 2 for some lambda in F4
  F3 pairing     B(v, g_i) = 0 mod 2 for every basis element g_i
  F4 norm        N(v/2) in Z[phi], i.e. v^T G v = 0 mod 8
  F5 products    (v/2) g_i and g_i (v/2) lie in G_v
  F6 square      (v/2)^2 lies in G_v

F4-F6 are evaluated on the lift with coefficients in {0, 1}.
"""

from typing import Dict, Sequence, Tuple

import numpy as np

from src.controllers.search.context import HALF_RANK, G0Context, g0_context
from src.controllers.search.report import FilterClass, SearchReport, classify
from src.utils.errors import InconsistencyError
from src.utils.logger import Logger
from src.utils.math.golden_array import (codes_to_f4_lift, gdot, gmatmul, mod2_codes,
                                         structure_product)
from src.utils.math.projective import F4_MUL, line_count, projective_points
from src.utils.parallel import run_partitioned, split_chunks

DEFAULT_FILTER_ORDER: Tuple[FilterClass, ...] = (
    FilterClass.NOT_MIXED, FilterClass.CONJ_FAIL, FilterClass.PAIRING_FAIL,
    FilterClass.NORM_FAIL, FilterClass.MULT_FAIL, FilterClass.SQUARE_FAIL,
)

CHUNK_SIZE = 4096


def in_f4_span(codes: np.ndarray, lines: np.ndarray) -> np.ndarray:
    """codes[n] is an F4 multiple of lines[n]"""
    spans = F4_MUL[np.arange(4)[None, :, None], lines[:, None, :]]
    return np.any(np.all(spans == codes[:, None, :], axis=2), axis=1)


def _filter_masks(ctx: G0Context, lines: np.ndarray) -> Dict[FilterClass, np.ndarray]:
    n = len(lines)
    lift = codes_to_f4_lift(lines)

    mixed = np.any(lines[:, :HALF_RANK] != 0, axis=1) & np.any(lines[:, HALF_RANK:] != 0, axis=1)

    conj_codes = mod2_codes(gmatmul(lift, ctx.conj_table))
    conj_stable = in_f4_span(conj_codes, lines)

    pairings = gmatmul(lift, ctx.gram_array)
    pairing = np.all(pairings % 2 == 0, axis=(1, 2))

    # v^T G v = 2 N(v), and N(v/2) = v^T G v / 8
    doubled_norm = gdot(pairings, lift)
    norm = np.all(doubled_norm % 8 == 0, axis=1)

    basis = ctx.basis_rows()
    products = np.ones(n, dtype=bool)
    for i in range(ctx.rank):
        g = np.broadcast_to(basis[i], lift.shape)
        for prod in (structure_product(lift, g, ctx.product_table),
                     structure_product(g, lift, ctx.product_table)):
            products &= in_f4_span(mod2_codes(prod), lines)

    square = structure_product(lift, lift, ctx.product_table)
    even = np.all(square % 2 == 0, axis=(1, 2))
    square_ok = even & in_f4_span(mod2_codes(square // 2), lines)

    return {
        FilterClass.NOT_MIXED: mixed,
        FilterClass.CONJ_FAIL: conj_stable,
        FilterClass.PAIRING_FAIL: pairing,
        FilterClass.NORM_FAIL: norm,
        FilterClass.MULT_FAIL: products,
        FilterClass.SQUARE_FAIL: square_ok,
    }


class Den2Search:
    """Classifies the lines of F4^8 over the icosian double by their first failing filter"""

    def __init__(self, workers: int = 1):
        self.logger = Logger.instance()
        self.workers = workers
        self.ctx = g0_context()
        self.logger.debug(f"den2 search initialized with {workers} worker(s)")

    def masks(self, lines: np.ndarray) -> Dict[FilterClass, np.ndarray]:
        """Pass masks of every filter, evaluated chunkwise on the worker pool"""
        chunks = split_chunks(lines, CHUNK_SIZE)
        parts = run_partitioned(lambda chunk: _filter_masks(self.ctx, chunk), chunks, self.workers)
        return {c: np.concatenate([p[c] for p in parts]) for c in DEFAULT_FILTER_ORDER}

    def run(self, filter_order: Sequence[FilterClass] = DEFAULT_FILTER_ORDER,
            full: bool = False) -> SearchReport:
        """Classify all 21845 lines of F4^8"""
        ctx = self.ctx
        lines = projective_points(ctx.rank, 4)
        if len(lines) != line_count(ctx.rank, 4):
            raise InconsistencyError("F4 line enumeration is incomplete")
        self.logger.info(f"den2 search over {len(lines)} lines of F4^{ctx.rank}, "
                         f"{self.workers} worker(s)")
        masks = self.masks(lines)

        def render(i: int) -> str:
            return ctx.render(codes_to_f4_lift(lines[i]))

        report = classify("p4-den2", lines, [(c, masks[c]) for c in filter_order], render, full)
        report.extra["mixed_lines"] = int(np.count_nonzero(masks[FilterClass.NOT_MIXED]))
        self.logger.info("den2 search: " + ", ".join(f"{c.value} {n}"
                                                     for c, n in report.counts.items()))
        return report


def den2_search(workers: int = 1, filter_order: Sequence[FilterClass] = DEFAULT_FILTER_ORDER,
                full: bool = False) -> SearchReport:
    return Den2Search(workers).run(filter_order, full)

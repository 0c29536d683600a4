"""
Mixed half-root candidates x = (a + b l)/2 with a, b in the H4 shell.

strict: N(x) must lie in Z[phi]; it is 1/2 for every pair.
trace:  Tr N(x) must be integral (it is 1), x must pair trace-integrally
        with G0, and the Z[phi]-module generated by x needs N(phi x)
        trace-integral too, i.e. N(x) in the lattice Z phi + Z/sqrt5.
Pairs are grouped into cosets of v = a + b l modulo 2 G0 and into
projective F4 lines.
"""

from fractions import Fraction
from typing import Optional

import numpy as np

from src.controllers.search.context import g0_context
from src.controllers.search.report import FilterClass, SearchReport, classify
from src.models.orders.catalog import catalog
from src.models.shells.enumeration import enumerate_unit_shell
from src.models.shells.shell import Shell
from src.utils.errors import InconsistencyError, UsageError
from src.utils.logger import Logger
from src.utils.math.golden import FieldElem, GoldenInt, lambda_member
from src.utils.math.golden_array import gdot, gmatmul, gtrace, mod2_codes
from src.utils.math.projective import normalize_f4

MODES = ("strict", "trace")


def half_root_vectors(h4: Shell) -> np.ndarray:
    """v = a + b l for all ordered pairs, a outer, in G0 coordinates"""
    coords = h4.coordinates
    n = len(coords)
    a = np.repeat(coords, n, axis=0)
    b = np.tile(coords, (n, 1, 1))
    return np.concatenate((a, b), axis=1)


def _distinct_rows(codes: np.ndarray) -> np.ndarray:
    return np.unique(codes, axis=0) if len(codes) else codes


class HalfRootScan:
    """Pairs (a + b l)/2 of H4 roots against the strict or trace integrality filters"""

    def __init__(self, h4: Optional[Shell] = None, workers: int = 1):
        self.logger = Logger.instance()
        self.workers = workers
        self.ctx = g0_context()
        self._h4 = h4

    @property
    def h4(self) -> Shell:
        if self._h4 is None:
            self._h4 = enumerate_unit_shell(catalog("icosian"), self.workers)
        return self._h4

    def run(self, mode: str = "strict", full: bool = False) -> SearchReport:
        """
        Raises:
            UsageError: unknown mode
            InconsistencyError: a pair with N(x) != 1/2 or a coset not of size 4
        """
        if mode not in MODES:
            raise UsageError(f"half-root mode must be one of {MODES}, got {mode!r}")
        ctx = self.ctx
        v = half_root_vectors(self.h4)
        pairs = len(v)
        self.logger.info(f"half-root scan ({mode}) over {pairs} pairs")

        pairings = gmatmul(v, ctx.gram_array)
        doubled_norm = gdot(pairings, v)
        # 2 N(v) = 8 N(v/2) = 4
        if not (np.all(doubled_norm[:, 0] == 4) and np.all(doubled_norm[:, 1] == 0)):
            raise InconsistencyError("a half-root pair does not have norm 1/2")
        norm_half = FieldElem(Fraction(1, 2))

        codes = mod2_codes(v)
        cosets, sizes = np.unique(codes, axis=0, return_counts=True)
        if np.any(sizes != 4):
            raise InconsistencyError(f"half-root coset sizes {sorted(set(sizes.tolist()))}, "
                                     f"expected 4")
        lines = _distinct_rows(normalize_f4(codes))

        mixed = np.ones(pairs, dtype=bool)
        if mode == "strict":
            integral = np.all(doubled_norm % 8 == 0, axis=1)
            filters = [(FilterClass.NOT_MIXED, mixed), (FilterClass.NORM_FAIL, integral)]
        else:
            # Tr(s/8) for s = 2N(v) = (a, b): (2a + b)/8
            trace_norm = gtrace(doubled_norm) % 8 == 0
            # Tr B(v/2, g_i) = (2a_i + b_i)/2
            polar = np.all(pairings[:, :, 1] % 2 == 0, axis=1)
            distinct = {tuple(int(x) for x in s) for s in doubled_norm}
            lattice = {s: lambda_member(FieldElem(GoldenInt(*s)) / 8) for s in distinct}
            phi_closed = np.array([lattice[(int(s[0]), int(s[1]))] for s in doubled_norm],
                                  dtype=bool)
            filters = [(FilterClass.NORM_FAIL, trace_norm), (FilterClass.PAIRING_FAIL, polar),
                       (FilterClass.NORM_FAIL, phi_closed)]

        def render(i: int) -> str:
            return (ctx.spec.element_from_pairs(v[i]) * Fraction(1, 2)).render()

        report = classify(f"half-root-{mode}", np.arange(pairs)[:, None], filters, render, full)
        report.extra.update({
            "pairs": pairs,
            "cosets": len(cosets),
            "lines": len(lines),
            "norm_half_numerator": norm_half.a.numerator,
            "norm_half_denominator": norm_half.a.denominator,
        })
        if mode == "trace":
            passing = filters[1][1]
            trace_values = {int(t) // 8 for t in gtrace(doubled_norm)}
            phi_trace = (GoldenInt(1, 1) * norm_half).trace()
            report.extra.update({
                "trace_norm_value": trace_values.pop() if len(trace_values) == 1 else -1,
                "phi_trace_numerator": phi_trace.numerator,
                "phi_trace_denominator": phi_trace.denominator,
                "polar_raw": int(np.count_nonzero(passing)),
                "polar_cosets": len(_distinct_rows(codes[passing])),
                "polar_lines": (len(_distinct_rows(normalize_f4(codes[passing])))
                                if passing.any() else 0),
            })
        self.logger.info(f"half-root scan ({mode}): {len(cosets)} cosets, "
                         f"{report.count(FilterClass.SURVIVOR)} survivors")
        return report


def half_root_scan(mode: str = "strict", h4: Optional[Shell] = None, workers: int = 1,
                   full: bool = False) -> SearchReport:
    return HalfRootScan(h4, workers).run(mode, full)

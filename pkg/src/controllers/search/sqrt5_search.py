"""
Ramified gluings G0 + Z[phi] (v / sqrt 5).

Lines of F5^8 = G0 / sqrt5 G0 (F5 = Z[phi]/sqrt5, phi = 3) are mixed when
both halves are nonzero and survive the pairing filter when
B(v, g_i) = 0 mod sqrt 5 for every basis element. The polar Gram is
nondegenerate mod sqrt 5, so no nonzero line can pass.
"""

import numpy as np

from src.controllers.search.context import HALF_RANK, G0Context, g0_context
from src.controllers.search.report import FilterClass, SearchReport, classify
from src.utils.errors import InconsistencyError
from src.utils.logger import Logger
from src.utils.math.golden_array import mod_sqrt5
from src.utils.math.normal_forms import rank_mod_p
from src.utils.math.projective import line_count, projective_points
from src.utils.parallel import run_partitioned, split_chunks

CHUNK_SIZE = 16384


def gram_mod_sqrt5(ctx: G0Context) -> np.ndarray:
    return mod_sqrt5(ctx.gram_array)


def _pairing_mask(gram5: np.ndarray, lines: np.ndarray) -> np.ndarray:
    return np.all((lines @ gram5) % 5 == 0, axis=1)


class Sqrt5Search:
    """Lines of F5^8 = G0 / sqrt5 G0 against the mixed and pairing filters"""

    def __init__(self, workers: int = 1):
        self.logger = Logger.instance()
        self.workers = workers
        self.ctx = g0_context()
        self.gram5 = gram_mod_sqrt5(self.ctx)

    def run(self, full: bool = False) -> SearchReport:
        """Mixed and pairing classification of all 97656 lines of F5^8"""
        ctx, gram5 = self.ctx, self.gram5
        rank = rank_mod_p(gram5.tolist(), 5)
        lines = projective_points(ctx.rank, 5)
        if len(lines) != line_count(ctx.rank, 5):
            raise InconsistencyError("F5 line enumeration is incomplete")
        self.logger.info(f"sqrt5 search over {len(lines)} lines, polar Gram rank {rank} mod sqrt 5")

        chunks = split_chunks(lines, CHUNK_SIZE)
        pairing = np.concatenate(run_partitioned(lambda chunk: _pairing_mask(gram5, chunk),
                                                 chunks, self.workers))
        mixed = (np.any(lines[:, :HALF_RANK] != 0, axis=1)
                 & np.any(lines[:, HALF_RANK:] != 0, axis=1))

        def render(i: int) -> str:
            row = np.stack((lines[i], np.zeros_like(lines[i])), axis=-1)
            return ctx.render(row)

        report = classify("p5-sqrt5", lines,
                          [(FilterClass.NOT_MIXED, mixed), (FilterClass.PAIRING_FAIL, pairing)],
                          render, full)
        report.extra["mixed_lines"] = int(np.count_nonzero(mixed))
        report.extra["pairing_passes"] = int(np.count_nonzero(pairing))
        report.extra["gram_rank_mod_sqrt5"] = rank
        self.logger.info(f"sqrt5 search: {report.extra['mixed_lines']} mixed, "
                         f"{report.count(FilterClass.SURVIVOR)} survivors")
        return report


def sqrt5_search(workers: int = 1, full: bool = False) -> SearchReport:
    return Sqrt5Search(workers).run(full)

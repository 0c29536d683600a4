"""
Shared data of the icosian double G0 for the searches.

Everything is in G0 order coordinates: an element is an (8, 2) golden
array over the basis (e1, .., e4, e1 l, .., e4 l).
"""

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from src.models.duality import GramData, polar_gram
from src.models.orders.catalog import catalog
from src.models.orders.spec import OrderSpec, StructureTables, verify_order
from src.utils.logger import Logger
from src.utils.math.golden_array import DTYPE, golden_matrix_array

HALF_RANK = 4


@dataclass(frozen=True)
class G0Context:
    spec: OrderSpec
    tables: StructureTables
    gram: GramData
    product_table: np.ndarray   # (8, 8, 8, 2)
    conj_table: np.ndarray      # (8, 8, 2), row convention
    gram_array: np.ndarray      # (8, 8, 2)

    @property
    def rank(self) -> int:
        return self.spec.rank

    def basis_rows(self) -> np.ndarray:
        """(8, 8, 2) unit coordinate vectors b_i"""
        rows = np.zeros((self.rank, self.rank, 2), dtype=DTYPE)
        for i in range(self.rank):
            rows[i, i, 0] = 1
        return rows

    def render(self, row: np.ndarray) -> str:
        return self.spec.element_from_pairs(row).render()


@lru_cache(maxsize=None)
def g0_context() -> G0Context:
    logger = Logger.instance()
    spec = catalog("icosian_double")
    tables = verify_order(spec)
    gram = polar_gram(spec)
    logger.debug("icosian double tables and polar Gram ready")
    return G0Context(spec, tables, gram, tables.product_array(), tables.conj_array(),
                     golden_matrix_array(gram.golden_entries()))

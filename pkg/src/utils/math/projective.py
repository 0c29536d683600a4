"""
Projective spaces over small finite fields.

A line is represented by its normalized vector: the first nonzero
coordinate is 1. Field elements are integer codes 0..q-1 (residues mod p
for F5, the codes a + 2b of a + b*phi for F4), so one enumerator serves
both fields.
"""

from itertools import product

import numpy as np

from src.utils.math.residue import F4_ELEMENTS


def line_count(dim: int, q: int) -> int:
    """(q^dim - 1) / (q - 1)"""
    return (q ** dim - 1) // (q - 1)


def projective_points(dim: int, q: int) -> np.ndarray:
    """Normalized representatives in lexicographic order, shape (line_count, dim)"""
    blocks = []
    for lead in range(dim):
        tail = dim - lead - 1
        rest = np.array(list(product(range(q), repeat=tail)), dtype=np.int64).reshape(q ** tail, tail)
        block = np.zeros((rest.shape[0], dim), dtype=np.int64)
        block[:, lead] = 1
        block[:, lead + 1:] = rest
        blocks.append(block)
    return np.concatenate(blocks[::-1], axis=0)


def f4_multiplication_table() -> np.ndarray:
    """MUL[x, y] = code of x*y for F4 codes"""
    table = np.zeros((4, 4), dtype=np.int64)
    for x in F4_ELEMENTS:
        for y in F4_ELEMENTS:
            table[x.code, y.code] = (x * y).code
    return table


F4_MUL = f4_multiplication_table()
F4_INVERSE = np.array([0] + [x.inverse().code for x in F4_ELEMENTS[1:]], dtype=np.int64)


def normalize_f4(codes: np.ndarray) -> np.ndarray:
    """Scale each nonzero row of F4 codes so its first nonzero entry is 1"""
    codes = np.asarray(codes, dtype=np.int64)
    nonzero = codes != 0
    first = np.argmax(nonzero, axis=1)
    lead = codes[np.arange(len(codes)), first]
    scale = F4_INVERSE[lead]
    return F4_MUL[scale[:, None], codes]


def normalize_mod_p(vectors: np.ndarray, p: int) -> np.ndarray:
    """Same normalization over F_p"""
    vectors = np.asarray(vectors, dtype=np.int64) % p
    first = np.argmax(vectors != 0, axis=1)
    lead = vectors[np.arange(len(vectors)), first]
    inverses = np.array([0] + [pow(x, p - 2, p) for x in range(1, p)], dtype=np.int64)
    return (vectors * inverses[lead][:, None]) % p

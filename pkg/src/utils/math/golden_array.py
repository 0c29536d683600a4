"""
Batched Z[phi] kernels on numpy integer arrays.

An array of golden integers has a trailing axis of length 2 holding
(a, b) for a + b*phi. The large enumerations run through these kernels;
the scalar classes in golden.py stay the reference they are tested
against.

Entries are int64. Every kernel bounds its intermediate values from the
largest input magnitudes before multiplying and raises instead of
letting numpy wrap around.
"""

from typing import Iterable, Sequence

import numpy as np

from src.utils.errors import InconsistencyError
from src.utils.math.golden import GoldenInt

DTYPE = np.int64
SAFE_BOUND = 2 ** 62


def magnitude(x: np.ndarray) -> int:
    """Largest absolute entry as a Python int, 0 for empty arrays"""
    x = np.asarray(x)
    if x.size == 0:
        return 0
    return max(abs(int(x.max())), abs(int(x.min())))


def check_range(bound: int, operation: str):
    """
    Raises:
        InconsistencyError: bound does not fit the int64 kernels
    """
    if bound >= SAFE_BOUND:
        raise InconsistencyError(f"{operation}: intermediate values up to {bound} overflow int64")


def as_golden_array(values: Iterable, shape=None) -> np.ndarray:
    """
    Pack ints / GoldenInt values into an (..., 2) array

    Raises:
        InconsistencyError: a coefficient does not fit int64
    """
    flat = []
    for v in values:
        g = GoldenInt.coerce(v)
        check_range(max(abs(g.a), abs(g.b)), "as_golden_array")
        flat.append((g.a, g.b))
    arr = np.array(flat, dtype=DTYPE).reshape(-1, 2)
    if shape is not None:
        arr = arr.reshape(tuple(shape) + (2,))
    return arr


def golden_matrix_array(rows: Sequence[Sequence]) -> np.ndarray:
    """Nested rows of ring values -> (m, n, 2) array"""
    m = len(rows)
    n = len(rows[0]) if m else 0
    return as_golden_array([v for row in rows for v in row], (m, n))


def gmul(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Elementwise product with broadcasting"""
    check_range(3 * magnitude(x) * magnitude(y), "gmul")
    xa, xb = x[..., 0], x[..., 1]
    ya, yb = y[..., 0], y[..., 1]
    bb = xb * yb
    return np.stack((xa * ya + bb, xa * yb + xb * ya + bb), axis=-1)


def gtrace(x: np.ndarray) -> np.ndarray:
    """Tr(a + b phi) = 2a + b"""
    check_range(3 * magnitude(x), "gtrace")
    return 2 * x[..., 0] + x[..., 1]


def gmatmul(x: np.ndarray, m: np.ndarray) -> np.ndarray:
    """
    Golden matrix product x @ m where both carry the trailing pair axis.

    x may be a batch of row vectors (..., n, 2) or matrices (..., k, n, 2);
    m is (n, p, 2).
    """
    check_range(3 * m.shape[0] * magnitude(x) * magnitude(m), "gmatmul")
    xa, xb = x[..., 0], x[..., 1]
    ma, mb = m[..., 0], m[..., 1]
    bb = xb @ mb
    return np.stack((xa @ ma + bb, xa @ mb + xb @ ma + bb), axis=-1)


def gdot(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Sum over the coordinate axis of the elementwise product"""
    check_range(3 * x.shape[-2] * magnitude(x) * magnitude(y), "gdot")
    return gmul(x, y).sum(axis=-2)


def structure_product(x: np.ndarray, y: np.ndarray, table: np.ndarray) -> np.ndarray:
    """
    Bilinear product through structure constants.

    x, y: (N, n, 2) coordinate batches; table: (n, n, n, 2) with
    table[i, j, k] the coefficient of basis k in b_i b_j.
    Returns (N, n, 2).
    """
    n = table.shape[0]
    pair = 3 * magnitude(x) * magnitude(y)
    check_range(3 * n * n * pair * magnitude(table), "structure_product")
    pa = x[:, :, None, 0] * y[:, None, :, 0] + x[:, :, None, 1] * y[:, None, :, 1]
    pb = x[:, :, None, 0] * y[:, None, :, 1] + x[:, :, None, 1] * y[:, None, :, 0] \
        + x[:, :, None, 1] * y[:, None, :, 1]
    count = x.shape[0]
    pa = pa.reshape(count, n * n)
    pb = pb.reshape(count, n * n)
    ca = table[..., 0].reshape(n * n, n)
    cb = table[..., 1].reshape(n * n, n)
    bb = pb @ cb
    return np.stack((pa @ ca + bb, pa @ cb + pb @ ca + bb), axis=-1)


def mod2_codes(x: np.ndarray) -> np.ndarray:
    """Reduce to F4 codes a + 2b with a, b taken mod 2"""
    return (x[..., 0] & 1) + 2 * (x[..., 1] & 1)


def codes_to_f4_lift(codes: np.ndarray) -> np.ndarray:
    """F4 codes -> golden lifts with coefficients in {0, 1}"""
    return np.stack((codes & 1, codes >> 1), axis=-1).astype(DTYPE)


def mod_sqrt5(x: np.ndarray) -> np.ndarray:
    """Reduce to F5 via phi -> 3"""
    return (x[..., 0] + 3 * x[..., 1]) % 5


def row_keys(arr: np.ndarray):
    """Hashable per-row keys for set membership of coordinate vectors"""
    flat = np.ascontiguousarray(arr.reshape(arr.shape[0], -1))
    return [row.tobytes() for row in flat]

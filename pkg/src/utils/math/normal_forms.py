"""
Integer normal forms and linear algebra over prime fields.

smith_normal_form returns unimodular U, V with U M V diagonal; the
pivot is always the entry of smallest absolute value met first in
row-major scan order, so transforms are reproducible run to run.
"""

from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np
from sympy import Matrix as SympyMatrix
from sympy.matrices.normalforms import invariant_factors

IntMatrix = List[List[int]]


@dataclass(frozen=True)
class SmithForm:
    """U @ M @ V = diag(divisors), divisors[i] | divisors[i + 1]"""
    divisors: Tuple[int, ...]
    left: Tuple[Tuple[int, ...], ...]
    right: Tuple[Tuple[int, ...], ...]


def _identity(n: int) -> IntMatrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def int_matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> IntMatrix:
    cols = list(zip(*b))
    return [[sum(x * y for x, y in zip(r, c)) for c in cols] for r in a]


def smith_normal_form(m: Sequence[Sequence[int]]) -> SmithForm:
    a = [list(map(int, r)) for r in m]
    nrows = len(a)
    ncols = len(a[0]) if nrows else 0
    u = _identity(nrows)
    v = _identity(ncols)

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]

    def add_row(target, source, factor):
        # row[target] += factor * row[source]
        a[target] = [x + factor * y for x, y in zip(a[target], a[source])]
        u[target] = [x + factor * y for x, y in zip(u[target], u[source])]

    def add_col(target, source, factor):
        for r in a:
            r[target] += factor * r[source]
        for r in v:
            r[target] += factor * r[source]

    for t in range(min(nrows, ncols)):
        while True:
            best = None
            for i in range(t, nrows):
                for j in range(t, ncols):
                    if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                break
            swap_rows(t, best[0])
            swap_cols(t, best[1])
            pivot = a[t][t]
            for i in range(t + 1, nrows):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // pivot))
            for j in range(t + 1, ncols):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // pivot))
            if any(a[i][t] for i in range(t + 1, nrows)) or any(a[t][j] for j in range(t + 1, ncols)):
                continue
            offender = next(((i, j) for i in range(t + 1, nrows) for j in range(t + 1, ncols)
                             if a[i][j] % pivot), None)
            if offender is None:
                break
            add_row(t, offender[0], 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]

    divisors = tuple(a[i][i] for i in range(min(nrows, ncols)))
    return SmithForm(divisors, tuple(map(tuple, u)), tuple(map(tuple, v)))


def sympy_invariant_factors(m: Sequence[Sequence[int]]) -> Tuple[int, ...]:
    """Invariant factors from sympy, for cross-checking smith_normal_form"""
    return tuple(int(f) for f in invariant_factors(SympyMatrix([list(r) for r in m])))


def hermite_normal_form(rows: Sequence[Sequence[int]]) -> IntMatrix:
    """
    Row-style Hermite normal form of the lattice generated by `rows`:
    echelon rows with positive pivots and entries above each pivot reduced
    into [0, pivot). Zero rows are dropped.
    """
    a = [list(map(int, r)) for r in rows]
    m = len(a)
    ncols = len(a[0]) if m else 0
    pivot_row = 0
    for col in range(ncols):
        if pivot_row >= m:
            break
        while True:
            nonzero = [i for i in range(pivot_row, m) if a[i][col]]
            if not nonzero:
                break
            best = min(nonzero, key=lambda i: (abs(a[i][col]), i))
            a[pivot_row], a[best] = a[best], a[pivot_row]
            if a[pivot_row][col] < 0:
                a[pivot_row] = [-x for x in a[pivot_row]]
            pivot = a[pivot_row][col]
            for i in range(pivot_row + 1, m):
                if a[i][col]:
                    q = a[i][col] // pivot
                    a[i] = [x - q * y for x, y in zip(a[i], a[pivot_row])]
            if not any(a[i][col] for i in range(pivot_row + 1, m)):
                break
        if not a[pivot_row][col]:
            continue
        pivot = a[pivot_row][col]
        for i in range(pivot_row):
            q = a[i][col] // pivot
            if q:
                a[i] = [x - q * y for x, y in zip(a[i], a[pivot_row])]
        pivot_row += 1
    return [r for r in a[:pivot_row]]


# ---------------------------------------------------------------------------
# Prime fields
# ---------------------------------------------------------------------------

def row_reduce_mod_p(rows: Sequence[Sequence[int]], p: int) -> Tuple[IntMatrix, List[int]]:
    """Reduced row echelon form over F_p; returns (nonzero rows, pivot columns)"""
    a = [[x % p for x in r] for r in rows]
    ncols = len(a[0]) if a else 0
    pivots = []
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(a)) if a[i][col]), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        inv = pow(a[r][col], p - 2, p)
        a[r] = [(x * inv) % p for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][col]:
                f = a[i][col]
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[r])]
        pivots.append(col)
        r += 1
        if r == len(a):
            break
    return a[:r], pivots


def rank_mod_p(rows: Sequence[Sequence[int]], p: int) -> int:
    return len(row_reduce_mod_p(rows, p)[1])


def nullspace_mod_p(rows: Sequence[Sequence[int]], p: int) -> IntMatrix:
    """Basis of {x : rows @ x = 0} over F_p"""
    ncols = len(rows[0])
    reduced, pivots = row_reduce_mod_p(rows, p)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [0] * ncols
        x[f] = 1
        for r, pc in zip(reduced, pivots):
            x[pc] = (-r[f]) % p
        basis.append(x)
    return basis


def batch_row_reduce_mod_p(stack: np.ndarray, p: int) -> Tuple[np.ndarray, np.ndarray]:
    """
    Reduced row echelon form of a batch of matrices over F_p.

    stack: (B, R, C) integer array. Returns the reduced stack (pivot rows
    first, remaining rows zero) and the rank of each matrix.
    """
    a = np.array(stack, dtype=np.int64) % p
    batch, nrows, ncols = a.shape
    inverses = np.array([0] + [pow(x, p - 2, p) for x in range(1, p)], dtype=np.int64)
    rank = np.zeros(batch, dtype=np.int64)
    row_index = np.arange(nrows)
    for col in range(ncols):
        candidates = (a[:, :, col] != 0) & (row_index[None, :] >= rank[:, None])
        has = candidates.any(axis=1)
        if not has.any():
            continue
        b = np.nonzero(has)[0]
        src = np.argmax(candidates[b], axis=1)
        dst = rank[b]
        pivot_rows = a[b, src].copy()
        a[b, src] = a[b, dst]
        a[b, dst] = pivot_rows
        scale = inverses[pivot_rows[:, col]]
        pivot_rows = (pivot_rows * scale[:, None]) % p
        a[b, dst] = pivot_rows
        factors = a[b, :, col].copy()
        factors[np.arange(len(b)), dst] = 0
        a[b] = (a[b] - factors[:, :, None] * pivot_rows[:, None, :]) % p
        rank[b] += 1
    return a, rank

"""
Tests for Smith and Hermite normal forms and linear algebra mod p.
"""

import random

import numpy as np
import pytest

from src.utils.math.normal_forms import (batch_row_reduce_mod_p, hermite_normal_form, int_matmul,
                                         nullspace_mod_p, rank_mod_p, row_reduce_mod_p,
                                         smith_normal_form, sympy_invariant_factors)


def _diag(divisors, nrows, ncols):
    return [[divisors[i] if i == j and i < len(divisors) else 0 for j in range(ncols)]
            for i in range(nrows)]


class TestSmithNormalForm:
    """U M V = diag(d) with d_i | d_(i+1)"""

    def test_known_case(self):
        form = smith_normal_form([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
        assert form.divisors == (2, 6, 12)

    def test_reconstruction_on_random_matrices(self):
        rng = random.Random(31)
        for _ in range(200):
            n, m = rng.randint(1, 5), rng.randint(1, 5)
            a = [[rng.randint(-9, 9) for _ in range(m)] for _ in range(n)]
            form = smith_normal_form(a)
            product = int_matmul(int_matmul(form.left, a), form.right)
            assert product == _diag(form.divisors, n, m)
            nonzero = [d for d in form.divisors if d]
            assert all(d > 0 for d in nonzero)
            assert all(b % a == 0 for a, b in zip(nonzero, nonzero[1:]))

    def test_unimodular_transforms(self):
        form = smith_normal_form([[4, 2], [2, 4]])
        assert abs(round(np.linalg.det(np.array(form.left, dtype=float)))) == 1
        assert abs(round(np.linalg.det(np.array(form.right, dtype=float)))) == 1

    def test_matches_sympy(self):
        rng = random.Random(32)
        for _ in range(30):
            a = [[rng.randint(-9, 9) for _ in range(4)] for _ in range(4)]
            ours = [d for d in smith_normal_form(a).divisors if d]
            theirs = [abs(d) for d in sympy_invariant_factors(a) if d]
            assert ours == theirs


class TestHermiteNormalForm:
    """Row echelon lattice bases"""

    def test_echelon(self):
        rows = hermite_normal_form([[2, 0], [1, 1], [0, 2]])
        assert rows == [[1, 1], [0, 2]]

    def test_drops_dependent_rows(self):
        assert hermite_normal_form([[1, 2], [2, 4]]) == [[1, 2]]

    def test_pivots_positive_and_reduced(self):
        rng = random.Random(33)
        for _ in range(50):
            rows = [[rng.randint(-6, 6) for _ in range(4)] for _ in range(5)]
            hnf = hermite_normal_form(rows)
            last = -1
            for k, r in enumerate(hnf):
                col = next(c for c, x in enumerate(r) if x)
                assert col > last and r[col] > 0
                for above in hnf[:k]:
                    assert 0 <= above[col] < r[col]
                last = col


class TestModP:
    """Row reduction over prime fields"""

    def test_rank(self):
        assert rank_mod_p([[1, 2], [2, 4]], 5) == 1
        assert rank_mod_p([[1, 2], [3, 1]], 5) == 1  # 3*(1, 2) = (3, 6) = (3, 1)
        assert rank_mod_p([[1, 0], [0, 1]], 5) == 2

    def test_nullspace(self):
        rows = [[1, 1, 0], [0, 1, 1]]
        basis = nullspace_mod_p(rows, 5)
        assert len(basis) == 1
        for x in basis:
            assert all(sum(a * b for a, b in zip(r, x)) % 5 == 0 for r in rows)

    def test_row_reduce(self):
        reduced, pivots = row_reduce_mod_p([[2, 4], [1, 3]], 5)
        assert pivots == [0, 1]
        assert reduced == [[1, 0], [0, 1]]

    def test_batch_matches_single(self):
        rng = np.random.default_rng(34)
        stack = rng.integers(0, 5, size=(40, 6, 8))
        stack[::3, 3:] = 0
        reduced, ranks = batch_row_reduce_mod_p(stack, 5)
        for b in range(len(stack)):
            single, _ = row_reduce_mod_p(stack[b].tolist(), 5)
            assert ranks[b] == len(single)
            assert reduced[b, :ranks[b]].tolist() == single
            assert not reduced[b, ranks[b]:].any()

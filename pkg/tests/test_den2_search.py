"""
Tests for the denominator-two line search.
"""

import numpy as np
import pytest

from src.controllers.search.den2_search import (DEFAULT_FILTER_ORDER, Den2Search, den2_search,
                                               in_f4_span)
from src.controllers.search.report import FilterClass
from src.utils.math.projective import projective_points

pytestmark = pytest.mark.slow


@pytest.fixture(scope="module")
def report():
    return Den2Search().run()


class TestInF4Span:
    """in_f4_span"""

    def test_multiples(self):
        lines = np.array([[1, 2, 0], [1, 2, 0], [1, 0, 3]])
        # 2 * (1, 2, 0) = (2, 3, 0) with F4 codes a + 2b
        codes = np.array([[2, 3, 0], [0, 0, 0], [1, 0, 2]])
        assert in_f4_span(codes, lines).tolist() == [True, True, False]


class TestDen2Search:
    """Classification of the lines of F4^8"""

    def test_total(self, report):
        assert report.total_lines == 21845
        assert sum(report.counts.values()) == 21845

    def test_class_counts(self, report):
        assert report.count(FilterClass.NOT_MIXED) == 170
        assert report.count(FilterClass.CONJ_FAIL) == 16320
        assert report.count(FilterClass.PAIRING_FAIL) == 5355
        assert report.count(FilterClass.SURVIVOR) == 0
        assert report.survivors == []

    def test_mixed_lines(self, report):
        assert report.extra["mixed_lines"] == 21845 - 170

    def test_witness_per_nonempty_class(self, report):
        for c in (FilterClass.NOT_MIXED, FilterClass.CONJ_FAIL, FilterClass.PAIRING_FAIL):
            assert report.witnesses[c].filter_class is c
            assert report.witnesses[c].witness

    def test_worker_independence(self, report):
        parallel = den2_search(workers=3)
        assert parallel.counts == report.counts
        assert parallel.witnesses == report.witnesses

    def test_reordered_filters_have_no_survivors(self):
        swapped = den2_search(filter_order=tuple(reversed(DEFAULT_FILTER_ORDER)))
        assert swapped.total_lines == 21845
        assert swapped.count(FilterClass.SURVIVOR) == 0

    def test_full_outcomes(self):
        full = den2_search(full=True)
        assert len(full.outcomes) == 21845


class TestDen2SearchWorkers:
    """Worker count does not change the masks"""

    def test_masks_independent_of_workers(self):
        lines = projective_points(8, 4)[:9000]
        single = Den2Search(workers=1).masks(lines)
        pooled = Den2Search(workers=3).masks(lines)
        assert set(single) == set(DEFAULT_FILTER_ORDER)
        for c in DEFAULT_FILTER_ORDER:
            assert single[c].shape == (9000,)
            assert np.array_equal(single[c], pooled[c])

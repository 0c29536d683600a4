"""
Tests for the sqrt 5 line search.
"""

import numpy as np
import pytest

from src.controllers.search.context import g0_context
from src.controllers.search.report import FilterClass
from src.controllers.search.sqrt5_search import Sqrt5Search, gram_mod_sqrt5, sqrt5_search
from src.utils.math.normal_forms import rank_mod_p

pytestmark = pytest.mark.slow


@pytest.fixture(scope="module")
def report():
    return Sqrt5Search().run()


class TestGramModSqrt5:
    """Reduction of the polar Gram"""

    def test_nondegenerate(self):
        gram5 = gram_mod_sqrt5(g0_context())
        assert gram5.shape == (8, 8)
        assert np.array_equal(gram5, gram5.T)
        assert rank_mod_p(gram5.tolist(), 5) == 8

    def test_search_holds_reduced_gram(self):
        search = Sqrt5Search(workers=2)
        assert search.workers == 2
        assert np.array_equal(search.gram5, gram_mod_sqrt5(g0_context()))


class TestSqrt5Search:
    """Classification of the lines of F5^8"""

    def test_counts(self, report):
        assert report.total_lines == 97656
        assert report.extra["mixed_lines"] == 97344
        assert report.count(FilterClass.NOT_MIXED) == 97656 - 97344
        assert report.count(FilterClass.PAIRING_FAIL) == 97344
        assert report.count(FilterClass.SURVIVOR) == 0

    def test_no_line_passes_pairing(self, report):
        assert report.extra["pairing_passes"] == 0
        assert report.extra["gram_rank_mod_sqrt5"] == 8

    def test_worker_independence(self, report):
        assert sqrt5_search(workers=4).counts == report.counts

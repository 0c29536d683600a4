"""
Tests for the half-root scans.
"""

import pytest

from src.controllers.search.half_root_scan import HalfRootScan, half_root_scan, half_root_vectors
from src.controllers.search.report import FilterClass
from src.utils.errors import UsageError

pytestmark = pytest.mark.slow


@pytest.fixture(scope="module")
def h4(unit_shell):
    return unit_shell("icosian")


@pytest.fixture(scope="module")
def strict(h4):
    return HalfRootScan(h4).run("strict")


@pytest.fixture(scope="module")
def trace(h4):
    return half_root_scan("trace", h4)


class TestHalfRootVectors:
    """Pair construction"""

    def test_shape(self, h4):
        v = half_root_vectors(h4)
        assert v.shape == (14400, 8, 2)


class TestStrictMode:
    """N(x) in Z[phi]"""

    def test_counts(self, strict):
        assert strict.extra["pairs"] == 14400
        assert strict.extra["cosets"] == 3600
        assert strict.extra["lines"] == 3600
        assert strict.count(FilterClass.NORM_FAIL) == 14400
        assert strict.count(FilterClass.SURVIVOR) == 0

    def test_norm_is_half(self, strict):
        assert strict.extra["norm_half_numerator"] == 1
        assert strict.extra["norm_half_denominator"] == 2


class TestTraceMode:
    """Trace-integral relaxation"""

    def test_trace_values(self, trace):
        assert trace.extra["trace_norm_value"] == 1
        assert trace.extra["phi_trace_numerator"] == 3
        assert trace.extra["phi_trace_denominator"] == 2

    def test_polar_filter(self, trace):
        assert trace.extra["polar_raw"] == 324
        assert trace.extra["polar_cosets"] == 81

    def test_no_module_survivor(self, trace):
        assert trace.count(FilterClass.SURVIVOR) == 0
        assert trace.count(FilterClass.PAIRING_FAIL) == 14400 - 324
        assert trace.count(FilterClass.NORM_FAIL) == 324

    def test_worker_independence(self, h4, trace):
        assert half_root_scan("trace", h4, workers=2).counts == trace.counts


class TestModes:
    """Mode validation"""

    def test_unknown_mode(self, h4):
        with pytest.raises(UsageError):
            half_root_scan("loose", h4)

    def test_unknown_mode_before_enumeration(self):
        scan = HalfRootScan()
        with pytest.raises(UsageError):
            scan.run("loose")
        assert scan._h4 is None

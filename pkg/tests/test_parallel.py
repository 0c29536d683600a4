"""
Tests for the partitioned thread-pool helpers.
"""

import pytest

from src.utils.errors import InconsistencyError
from src.utils.parallel import run_partitioned, split_chunks, split_round_robin


class TestSplitting:
    """Partition helpers"""

    def test_round_robin(self):
        assert split_round_robin(list(range(7)), 3) == [[0, 3, 6], [1, 4], [2, 5]]

    def test_round_robin_clamps_parts(self):
        assert split_round_robin([1, 2], 0) == [[1, 2]]

    def test_chunks(self):
        assert split_chunks(list(range(5)), 2) == [[0, 1], [2, 3], [4]]


class TestRunPartitioned:
    """run_partitioned"""

    @pytest.mark.parametrize("workers", [1, 2, 8])
    def test_results_in_partition_order(self, workers):
        parts = split_chunks(list(range(100)), 7)
        assert run_partitioned(sum, parts, workers) == [sum(p) for p in parts]

    def test_library_errors_propagate(self):
        def fail(part):
            if part == [3]:
                raise InconsistencyError("bad partition")
            return part

        with pytest.raises(InconsistencyError):
            run_partitioned(fail, [[1], [2], [3]], workers=3)

    def test_other_errors_wrapped(self):
        def fail(part):
            raise KeyError(part[0])

        with pytest.raises(RuntimeError):
            run_partitioned(fail, [[1], [2]], workers=2)

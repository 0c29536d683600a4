"""
Tests for the stable-closure search on the discriminant of the icosian double.
"""

import numpy as np
import pytest

from src.controllers.search.context import g0_context
from src.controllers.search.report import FilterClass
from src.controllers.search.tower_search import (TowerSearch, adjoint_maps, golden_maps,
                                                tower_search)

pytestmark = pytest.mark.slow


@pytest.fixture(scope="module")
def tower():
    return TowerSearch().run()


class TestGeneratingMaps:
    """Maps acting on G0"""

    def test_map_names(self):
        ctx = g0_context()
        maps = golden_maps(ctx)
        assert len(maps) == 2 + 2 * ctx.rank
        assert set(adjoint_maps(ctx, maps)) == set(maps)

    def test_closures_under_a_cyclic_shift(self):
        lines = np.array([[1, 0, 0], [1, 1, 1], [1, 4, 0]], dtype=np.int64)
        shift = np.roll(np.eye(3, dtype=np.int64), 1, axis=1)[None]
        for workers in (1, 2):
            ranks, bases = TowerSearch(workers).closures(lines, shift, 5)
            assert ranks.tolist() == [3, 1, 2]
            assert bases.shape == (3, 3, 3)


class TestTowerSearch:
    """Induced form and isotropic closures"""

    def test_form(self, tower):
        assert tower.divisors == (5,) * 8
        assert tower.classification.witt_type == "plus"
        assert tower.classification.hyperbolic_rank == 4
        assert tower.classification.isotropic_line_count == 19656

    def test_induced_actions(self, tower):
        assert tower.phi_scalar == 3
        assert tower.sqrt5_annihilates
        assert tower.lifts_compatible
        assert tower.adjoint_compatible
        assert len(tower.lifts) == 8

    def test_every_closure_is_everything(self, tower):
        assert tower.dimension_histogram == {8: 19656}
        assert tower.report.extra["candidates"] == 0
        assert tower.report.count(FilterClass.MULT_FAIL) == 19656
        assert tower.report.count(FilterClass.SURVIVOR) == 0

    def test_anisotropic_witness(self, tower):
        assert any(tower.anisotropic_witness)
        assert tower.report.extra["projective_lines"] == 97656

    def test_worker_independence(self, tower):
        assert tower_search(workers=2).report.counts == tower.report.counts

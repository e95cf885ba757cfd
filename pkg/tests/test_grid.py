import math

import numpy as np
import pytest

from app.errors import MemoryBudget, ResolutionTooCoarse
from app.operators.grid import Grid1D, ResolutionPolicy, next_power_of_two


def test_midpoints_and_weight():
    grid = Grid1D(0.0, 1.0, 4)
    np.testing.assert_allclose(grid.points, [0.125, 0.375, 0.625, 0.875])
    assert grid.weight == 0.25
    assert grid.to_dict() == {"lo": 0.0, "hi": 1.0, "count": 4}


@pytest.mark.parametrize("lo, hi, count", [(0.0, 1.0, 3), (0.0, 1.0, 0), (1.0, 1.0, 4)])
def test_invalid_grids(lo, hi, count):
    with pytest.raises(ValueError):
        Grid1D(lo, hi, count)


def test_weighted_norms():
    grid = Grid1D(-1.0, 1.0, 8)
    assert grid.norm(np.ones(8)) == pytest.approx(math.sqrt(2))
    assert grid.norm(np.ones(8), 1.0) == pytest.approx(2.0)
    assert grid.norm(np.arange(8.0), math.inf) == 7.0


def test_next_power_of_two():
    assert next_power_of_two(0.3) == 1
    assert next_power_of_two(5) == 8
    assert next_power_of_two(64) == 64


def test_policy_counts():
    policy = ResolutionPolicy(res_cap=4096)
    assert policy.required_count(1.0, 0.0, 1.0) == 64
    # 100 / (pi/4) is about 127.3
    assert policy.required_count(1.0, 100.0, 1.0) == 128
    assert policy.grid(0.0, 1.0, 100.0, 1.0).count == 128
    assert policy.grid(0.0, 1.0, 100.0, 1.0, count=256).count == 256


def test_policy_rejects_aliasing_counts():
    with pytest.raises(ResolutionTooCoarse):
        ResolutionPolicy(res_cap=4096).grid(0.0, 1.0, 100.0, 1.0, count=64)


def test_policy_memory_budget():
    with pytest.raises(MemoryBudget):
        ResolutionPolicy(res_cap=64).grid(0.0, 1.0, 1000.0, 1.0)

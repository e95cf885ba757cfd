import math

import numpy as np
import pytest

from app.errors import OutOfRange
from app.operators.fractional import default_dilations, fractional_apply, fractional_scaling_sweep
from app.operators.grid import Grid1D


def test_default_dilations():
    t_values = default_dilations()
    assert len(t_values) == 13
    assert t_values[0] == pytest.approx(1 / 8)
    assert t_values[-1] == pytest.approx(8)


def test_balanced_exponents_are_scale_invariant():
    # 1/2 = 1/4 + (4 - 3)/4
    report = fractional_scaling_sweep(3, 4, 2, 4, count=256)
    assert report.relation_holds
    assert report.drift < 1e-9
    assert report.interpretation == "||x|^a - |y|^a|^(-1/b)"


def test_unbalanced_exponents_drift_as_a_power():
    # ratios scale like t^(1/2 - 1/3 - 1/4) = t^(-1/12)
    report = fractional_scaling_sweep(3, 4, 2, 3, count=256)
    assert not report.relation_holds
    assert report.drift == pytest.approx(math.sqrt(2) - 1, rel=1e-6)
    assert all(b < a for a, b in zip(report.ratios, report.ratios[1:]))


def test_fractional_apply_is_positive_on_positive_input():
    grid = Grid1D(-2.0, 2.0, 64)
    image = fractional_apply(2, 3, grid, np.ones(grid.count))
    assert np.all(image > 0)
    assert np.all(np.isfinite(image))


@pytest.mark.parametrize("a, b", [(1, 2), (3, 2)])
def test_fractional_apply_domain(a, b):
    grid = Grid1D(-1.0, 1.0, 16)
    with pytest.raises(OutOfRange):
        fractional_apply(a, b, grid, np.ones(grid.count))


def test_sweep_domain():
    with pytest.raises(OutOfRange):
        fractional_scaling_sweep(3, 4, "1/2", 4)
    with pytest.raises(OutOfRange):
        fractional_scaling_sweep(3, 4, 2, 4, t_values=[1.0, -1.0])

import numpy as np
import pytest

from app.algebra.parser import parse_phase
from app.algebra.polynomial import BivariatePolynomial
from app.operators.grid import Grid1D
from app.operators.sharp import (
    classical_sharp,
    dyadic_cubes,
    sharp_comparison,
    sharp_function_E,
    twisted_mean_oscillation,
)


@pytest.fixture
def grid():
    return Grid1D(-1.0, 1.0, 64)


def test_dyadic_cubes():
    cubes = dyadic_cubes(Grid1D(0.0, 1.0, 16))
    assert len(cubes) == 7
    assert cubes[0] == (0, 16)
    assert (12, 16) in cubes


def test_constant_has_no_oscillation(grid):
    f = np.full(grid.count, 2.0 + 1.0j)
    assert twisted_mean_oscillation(grid, f, BivariatePolynomial.zero(), (0, 64)) == pytest.approx(0.0, abs=1e-14)


def test_untwisted_comparison_holds(grid):
    rng = np.random.default_rng(5)
    f = rng.normal(size=grid.count) + 1j * rng.normal(size=grid.count)
    result = sharp_comparison(grid, f, BivariatePolynomial.zero(), dyadic_cubes(grid))
    assert result["max_excess"] <= 0
    assert result["max_classical"] == pytest.approx(result["max_twisted"])


def test_twisted_comparison_can_fail(grid):
    # f matches the twist e^{i x_Q y} on the right half, x_Q = 1/2
    f = np.exp(0.5j * grid.points)
    P = parse_phase("x*y")
    cubes = [(32, 64)]
    assert sharp_function_E(grid, f, P, cubes)[40] == pytest.approx(0.0, abs=1e-12)
    assert classical_sharp(grid, f, cubes)[40] > 1e-2
    assert sharp_comparison(grid, f, P, cubes)["max_excess"] > 1e-2


def test_points_outside_every_cube_are_zero(grid):
    values = classical_sharp(grid, grid.points ** 2, [(0, 8)])
    assert np.all(values[8:] == 0)
    assert values[0] > 0


@pytest.mark.parametrize("cube", [(0, 65), (5, 5), (-1, 4)])
def test_bad_cubes(grid, cube):
    with pytest.raises(ValueError):
        sharp_function_E(grid, np.ones(grid.count), BivariatePolynomial.zero(), [cube])

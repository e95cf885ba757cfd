import math

import numpy as np
import pytest

from app.algebra.phase import HomogeneousPhase
from app.errors import MemoryBudget
from app.operators.discretize import DiscretizedOperator, discretize_T
from app.operators.grid import Grid1D, ResolutionPolicy
from app.operators.norms import (
    bump_trial_family,
    lp_norm_lower_bound,
    modulated_trial_family,
    operator_norm_L2,
    schur_bound,
)
from app.quadrature.cutoffs import SmoothCutoff


@pytest.fixture
def unit_grid():
    return Grid1D(0.0, 1.0, 256)


def test_constant_kernel_has_norm_one(unit_grid):
    op = DiscretizedOperator.from_function(lambda x, y: np.ones(np.broadcast(x, y).shape), unit_grid, unit_grid)
    estimate = operator_norm_L2(op)
    assert estimate.value == pytest.approx(1.0, abs=1e-9)
    assert estimate.converged


def test_rank_one_kernel(unit_grid):
    op = DiscretizedOperator.from_function(lambda x, y: x * y, unit_grid, unit_grid)
    assert operator_norm_L2(op).value == pytest.approx(1 / 3, abs=1e-4)


def test_power_iteration_matches_the_dense_norm():
    grid = Grid1D(-1.0, 1.0, 64)
    op = DiscretizedOperator.from_function(lambda x, y: np.exp(-(x - y) ** 2), grid, grid)
    dense = np.linalg.norm(op.kernel, 2) * op.continuum_scale
    assert operator_norm_L2(op, tol=1e-12).value == pytest.approx(dense, rel=1e-5)


def test_schur_dominates_the_singular_value():
    rng = np.random.default_rng(3)
    grid = Grid1D(0.0, 1.0, 64)
    op = DiscretizedOperator(grid, grid, rng.uniform(0, 1, (64, 64)) * grid.weight)
    dense = np.linalg.norm(op.kernel, 2)
    assert schur_bound(op).value >= dense * (1 - 1e-12)


def test_schur_bound_of_the_half_power_kernel():
    # both sums peak at the midpoint: 2 * 2 * sqrt(1/2)
    op = DiscretizedOperator.from_function(lambda x, y: np.abs(x - y) ** -0.5,
                                           Grid1D(0.0, 1.0, 2048), Grid1D(0.0, 1.0, 4096))
    assert schur_bound(op).value == pytest.approx(2 * math.sqrt(2), abs=0.05)


def test_trial_lower_bound_stays_below_the_norm():
    op = discretize_T(HomogeneousPhase.parse("x^3*y + x*y^3"), SmoothCutoff.tensor(), 16.0)
    dense = np.linalg.norm(op.kernel, 2) * op.continuum_scale
    plain = lp_norm_lower_bound(op, 2)
    modulated = lp_norm_lower_bound(op, "2", modulated_trial_family(op))
    assert 0 < plain.value <= dense * (1 + 1e-9)
    assert 0 < modulated.value <= dense * (1 + 1e-9)
    assert plain.method == "trial_lower_bound"
    with pytest.raises(ValueError):
        lp_norm_lower_bound(op, "1/2")


def test_trial_family_fits_the_grid(unit_grid):
    family = bump_trial_family(unit_grid)
    assert family
    assert all(trial.shape == (256,) for trial in family)


def test_norm_is_stable_under_grid_refinement():
    phase = HomogeneousPhase.parse("x^3*y + x*y^3")
    coarse = operator_norm_L2(discretize_T(phase, SmoothCutoff.tensor(), 16.0), tol=1e-10)
    fine = operator_norm_L2(discretize_T(phase, SmoothCutoff.tensor(), 16.0, row_count=256, col_count=256), tol=1e-10)
    assert coarse.resolution == [64, 64]
    assert abs(coarse.value - fine.value) / fine.value < 1e-2


def test_memory_budget():
    with pytest.raises(MemoryBudget):
        discretize_T(HomogeneousPhase.parse("x^3*y + x*y^3"), SmoothCutoff.tensor(), 1e4,
                     policy=ResolutionPolicy(res_cap=256))


def test_conjugation_and_transposition_keep_the_norm():
    phase = HomogeneousPhase.parse("2*x^3*y - x*y^3")
    cutoff = SmoothCutoff.tensor()
    norms = [np.linalg.norm(op.kernel, 2) * op.continuum_scale for op in (
        discretize_T(phase, cutoff, 16.0),
        discretize_T(phase, cutoff, -16.0),
        discretize_T(phase.transpose(), cutoff, 16.0),
    )]
    assert norms[1] == pytest.approx(norms[0], rel=1e-10)
    assert norms[2] == pytest.approx(norms[0], rel=1e-10)

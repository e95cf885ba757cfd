"""The polynomial-twisted sharp function f♯_E on grid functions."""

import logging
from typing import Dict, Sequence, Tuple

import numpy as np

from app.algebra.polynomial import BivariatePolynomial
from app.operators.grid import Grid1D

logger = logging.getLogger(__name__)

Cube = Tuple[int, int]


def _check_cubes(grid: Grid1D, cubes: Sequence[Cube]):
    for start, stop in cubes:
        if not 0 <= start < stop <= grid.count:
            raise ValueError(f"cube [{start}, {stop}) is not a nonempty index range of the grid")


def twisted_mean_oscillation(grid: Grid1D, f: np.ndarray, P: BivariatePolynomial, cube: Cube) -> float:
    """avg_Q |f - f_Q^E| with f_Q^E(x) = e^{iP(x_Q,x)} · avg_Q(e^{-iP(x_Q,y)} f(y))."""
    start, stop = cube
    xs = grid.points[start:stop]
    values = np.asarray(f)[start:stop]
    x_q = float(xs.mean())
    twist = np.exp(1j * P.evaluate_points(np.full_like(xs, x_q), xs))
    average = np.mean(values / twist)
    return float(np.mean(np.abs(values - twist * average)))


def sharp_function_E(grid: Grid1D, f: np.ndarray, P: BivariatePolynomial, cubes: Sequence[Cube]) -> np.ndarray:
    """f♯_E(x) = max over the cubes containing x of avg_Q |f - f_Q^E|; 0 outside every cube.

    Cubes are half-open index ranges [start, stop) of the grid, so the cell
    averages are exact grid averages.
    """
    _check_cubes(grid, cubes)
    out = np.zeros(grid.count)
    for cube in cubes:
        oscillation = twisted_mean_oscillation(grid, f, P, cube)
        start, stop = cube
        np.maximum(out[start:stop], oscillation, out=out[start:stop])
    return out


def classical_sharp(grid: Grid1D, f: np.ndarray, cubes: Sequence[Cube]) -> np.ndarray:
    """The untwisted sharp function, avg_Q |f - avg_Q f|."""
    return sharp_function_E(grid, f, BivariatePolynomial.zero(), cubes)


def sharp_comparison(grid: Grid1D, f: np.ndarray, P: BivariatePolynomial,
                     cubes: Sequence[Cube]) -> Dict[str, float]:
    """Pointwise comparison of f♯ against 2·f♯_E.

    `max_excess` = max(f♯ - 2 f♯_E); nonpositive means the comparison held
    on every grid point.
    """
    classical = classical_sharp(grid, f, cubes)
    twisted = sharp_function_E(grid, f, P, cubes)
    excess = float(np.max(classical - 2 * twisted))
    if excess > 1e-12:
        logger.info(f"f# exceeds 2 f#_E by {excess:.3e} for P = {P}")
    return {
        "max_classical": float(classical.max(initial=0.0)),
        "max_twisted": float(twisted.max(initial=0.0)),
        "max_excess": excess,
    }


def dyadic_cubes(grid: Grid1D, min_cells: int = 4) -> list:
    """All dyadic index ranges of the grid down to min_cells cells."""
    cubes = []
    size = grid.count
    while size >= min_cells:
        cubes.extend((start, start + size) for start in range(0, grid.count, size))
        size //= 2
    return cubes

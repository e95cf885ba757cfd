"""Norm estimates for discretized operators: power iteration, Schur test, trial families."""

import logging
import math
from typing import Iterable, List, Optional, Sequence

import numpy as np

from app.algebra.rational import RationalLike, format_rational, to_rational
from app.config.env_config import config
from app.models.report_models import NormEstimate
from app.operators.discretize import DiscretizedOperator
from app.operators.grid import Grid1D
from app.quadrature.cutoffs import bump

logger = logging.getLogger(__name__)


def operator_norm_L2(op: DiscretizedOperator, tol: Optional[float] = None,
                     max_iter: Optional[int] = None) -> NormEstimate:
    """Largest singular value by iteration on K*K from the normalized all-ones vector.

    Stops when successive Rayleigh quotients differ by less than tol relative.
    The matrix value is scaled by sqrt(w_row/w_col) to approximate the L² norm.
    Hitting max_iter returns the last value with converged=False.
    """
    tol = config.tol if tol is None else tol
    max_iter = config.max_iter if max_iter is None else max_iter
    kernel = op.kernel
    v = np.ones(kernel.shape[1], dtype=kernel.dtype if np.iscomplexobj(kernel) else float)
    v /= np.linalg.norm(v)

    previous = 0.0
    quotient = 0.0
    residual = math.inf
    iterations = 0
    for iterations in range(1, max_iter + 1):
        u = kernel @ v
        w = kernel.conj().T @ u
        quotient = float(np.vdot(v, w).real)
        norm_w = np.linalg.norm(w)
        if norm_w == 0:
            quotient, residual = 0.0, 0.0
            break
        v = w / norm_w
        residual = abs(quotient - previous) / quotient if quotient > 0 else 0.0
        if residual < tol:
            break
        previous = quotient

    converged = residual < tol
    value = math.sqrt(max(quotient, 0.0)) * op.continuum_scale
    if not converged:
        logger.warning(f"Power iteration stopped at the cap of {max_iter} iterations, residual {residual:.3e}")
    logger.debug(f"Singular value estimate {value:.6g} after {iterations} iterations")
    return NormEstimate(
        p="2",
        value=value,
        method="singular_value",
        iterations=iterations,
        residual=float(residual),
        converged=converged,
        resolution=[op.row_grid.count, op.col_grid.count],
    )


def schur_bound(op: DiscretizedOperator) -> NormEstimate:
    """√(A·B): A = max row sum and B = max column sum of |kernel| with quadrature weights."""
    magnitude = np.abs(op.kernel)
    row_sums = magnitude.sum(axis=1)
    col_sums = magnitude.sum(axis=0) * op.row_grid.weight / op.col_grid.weight
    value = math.sqrt(float(row_sums.max(initial=0.0)) * float(col_sums.max(initial=0.0)))
    return NormEstimate(p="2", value=value, method="schur", resolution=[op.row_grid.count, op.col_grid.count])


def bump_trial_family(grid: Grid1D, widths: Optional[Sequence[float]] = None,
                      positions: int = 9) -> List[np.ndarray]:
    """Bumps of dyadic widths placed at evenly spaced centers across the grid."""
    length = grid.hi - grid.lo
    if widths is None:
        widths = [length * 2.0 ** -m for m in range(1, 9) if length * 2.0 ** -m >= 2 * grid.spacing]
    xs = grid.points
    family = []
    for width in widths:
        for center in np.linspace(grid.lo + width, grid.hi - width, positions):
            trial = bump(xs, center, width)
            if np.any(trial > 0):
                family.append(trial)
    return family


def lp_norm_lower_bound(op: DiscretizedOperator, p: RationalLike,
                        trials: Optional[Iterable[np.ndarray]] = None) -> NormEstimate:
    """max over trials of ‖Kf‖_p / ‖f‖_p with weighted discrete norms."""
    p_exact = to_rational(p)
    if p_exact < 1:
        raise ValueError("p must be at least 1")
    exponent = float(p_exact)
    trials = bump_trial_family(op.col_grid) if trials is None else trials
    best = 0.0
    count = 0
    for f in trials:
        source = op.col_grid.norm(f, exponent)
        if source == 0:
            continue
        count += 1
        best = max(best, op.row_grid.norm(op.apply(f), exponent) / source)
    return NormEstimate(
        p=format_rational(p_exact),
        value=best,
        method="trial_lower_bound",
        iterations=count,
        resolution=[op.row_grid.count, op.col_grid.count],
    )


def modulated_trial_family(op: DiscretizedOperator, base: Optional[List[np.ndarray]] = None) -> List[np.ndarray]:
    """Bumps multiplied by the conjugate kernel phase along the row where they peak."""
    base = bump_trial_family(op.col_grid) if base is None else base
    family = []
    for trial in base:
        row = int(np.argmax(np.abs(op.kernel) @ np.abs(trial)))
        phase = np.exp(-1j * np.angle(op.kernel[row]))
        family.append(trial * phase)
    return family

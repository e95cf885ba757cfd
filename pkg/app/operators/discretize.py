"""Dense discretizations of T_λ f(x) = ∫ e^{iλS(x,y)} φ(x,y) f(y) dy and its damped variants."""

import logging
import math
from dataclasses import dataclass, field, replace
from typing import Any, Dict, Optional, Union

import numpy as np

from app.algebra.phase import HomogeneousPhase
from app.algebra.polynomial import BivariatePolynomial
from app.algebra.rational import format_rational
from app.errors import SingularDamping
from app.exponents.damping import DampingSpec
from app.operators.grid import Grid1D, ResolutionPolicy
from app.quadrature.cutoffs import SmoothCutoff

logger = logging.getLogger(__name__)

PhaseLike = Union[HomogeneousPhase, BivariatePolynomial]

_ROW_BLOCK = 256
_PROBE = 257


@dataclass(frozen=True)
class DiscretizedOperator:
    """K[i, j] = kernel(x_i, y_j) · w_col on paired midpoint grids."""

    row_grid: Grid1D
    col_grid: Grid1D
    kernel: np.ndarray = field(repr=False)
    metadata: Dict[str, Any] = field(default_factory=dict)

    @property
    def shape(self):
        return self.kernel.shape

    @property
    def continuum_scale(self) -> float:
        """Factor turning the matrix 2-norm into the L² operator norm."""
        return math.sqrt(self.row_grid.weight / self.col_grid.weight)

    def apply(self, f: np.ndarray) -> np.ndarray:
        return self.kernel @ f

    def adjoint_apply(self, g: np.ndarray) -> np.ndarray:
        return self.kernel.conj().T @ g

    def absolute(self) -> "DiscretizedOperator":
        return replace(self, kernel=np.abs(self.kernel), metadata={**self.metadata, "absolute": True})

    def with_kernel(self, kernel: np.ndarray, **metadata) -> "DiscretizedOperator":
        return replace(self, kernel=kernel, metadata={**self.metadata, **metadata})

    @classmethod
    def from_function(cls, kernel_fn, row_grid: Grid1D, col_grid: Grid1D, **metadata) -> "DiscretizedOperator":
        """Sample kernel_fn(x, y) on the tensor grid (broadcast arrays)."""
        xs, ys = row_grid.points, col_grid.points
        kernel = np.asarray(kernel_fn(xs[:, None], ys[None, :])) * col_grid.weight
        return cls(row_grid=row_grid, col_grid=col_grid, kernel=kernel, metadata=metadata)


def _as_polynomial(phase: PhaseLike) -> BivariatePolynomial:
    return phase.to_polynomial() if isinstance(phase, HomogeneousPhase) else phase


def max_partials(poly: BivariatePolynomial, box) -> tuple:
    """(max|∂_x S|, max|∂_y S|) sampled on a box."""
    (x_lo, x_hi), (y_lo, y_hi) = box
    xs = np.linspace(x_lo, x_hi, _PROBE)
    ys = np.linspace(y_lo, y_hi, _PROBE)
    dx = np.abs(poly.derivative_x().evaluate_grid(xs, ys)).max(initial=0.0)
    dy = np.abs(poly.derivative_y().evaluate_grid(xs, ys)).max(initial=0.0)
    return float(dx), float(dy)


def _grids(poly: BivariatePolynomial, cutoff: SmoothCutoff, lam: float, policy: ResolutionPolicy,
           row_count: Optional[int], col_count: Optional[int]):
    if cutoff.kind != "tensor_bump":
        raise ValueError("operators need a tensor_bump cutoff")
    box = cutoff.support()
    grad_x, grad_y = max_partials(poly, box)
    # x spacing sees ∂_x S, y spacing sees ∂_y S
    row_grid = policy.grid(box[0][0], box[0][1], lam, grad_x, row_count)
    col_grid = policy.grid(box[1][0], box[1][1], lam, grad_y, col_count)
    return row_grid, col_grid


def _build(poly: BivariatePolynomial, cutoff: SmoothCutoff, lam: float, row_grid: Grid1D,
           col_grid: Grid1D, weight_fn=None) -> np.ndarray:
    xs, ys = row_grid.points, col_grid.points
    kernel = np.empty((xs.size, ys.size), dtype=complex)
    for start in range(0, xs.size, _ROW_BLOCK):
        block = slice(start, start + _ROW_BLOCK)
        values = np.exp(1j * lam * poly.evaluate_grid(xs[block], ys)) * cutoff.grid_values(xs[block], ys)
        if weight_fn is not None:
            values = values * weight_fn(xs[block], ys)
        kernel[block] = values * col_grid.weight
    return kernel


def discretize_T(phase: PhaseLike, cutoff: SmoothCutoff, lam: float, policy: Optional[ResolutionPolicy] = None,
                 row_count: Optional[int] = None, col_count: Optional[int] = None) -> DiscretizedOperator:
    """K[i, j] = e^{iλS(x_i, y_j)} φ(x_i, y_j) w_col.

    Raises:
        ResolutionTooCoarse: for explicit counts that alias.
        MemoryBudget: when the Nyquist grid exceeds the resolution cap.
    """
    policy = policy or ResolutionPolicy.default()
    poly = _as_polynomial(phase)
    row_grid, col_grid = _grids(poly, cutoff, lam, policy, row_count, col_count)
    kernel = _build(poly, cutoff, lam, row_grid, col_grid)
    logger.debug(f"T_lambda for {poly} at lambda={lam}: {row_grid.count}x{col_grid.count}")
    return DiscretizedOperator(row_grid, col_grid, kernel,
                               {"phase": str(poly), "lambda": lam, "cutoff": cutoff.to_dict(), "damping": None})


def damping_weight(damping: DampingSpec, z_im: float, lam: float):
    """|D|^{re_z + i z_im} as a function on tensor grids; zeros of D map to 0 for re_z > 0."""
    re_z = float(damping.re_z)

    def weight(xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
        if re_z == 0 and z_im == 0:
            return np.ones((xs.size, ys.size))
        magnitude = damping.evaluate_abs(xs, ys, lam)
        positive = magnitude > 0
        logs = np.log(np.where(positive, magnitude, 1.0))
        return np.where(positive, np.exp((re_z + 1j * z_im) * logs), 0.0)

    return weight


def check_damping_support(damping: DampingSpec, cutoff: SmoothCutoff, lam: float):
    """Reject negative Re z when the cutoff support meets {D = 0}.

    Raises:
        SingularDamping: if D vanishes or changes sign on the support.
    """
    if damping.re_z >= 0 or damping.has_pedestal:
        return
    (x_lo, x_hi), (y_lo, y_hi) = cutoff.support()
    values = damping.evaluate_signed(np.linspace(x_lo, x_hi, _PROBE), np.linspace(y_lo, y_hi, _PROBE), lam)
    if np.any(values == 0) or (values.min() < 0 < values.max()):
        raise SingularDamping(f"Re z = {format_rational(damping.re_z)} < 0 and the cutoff support meets "
                              f"the zero set of {damping.describe()}")


def discretize_damped(phase: PhaseLike, damping: DampingSpec, z_im: float, lam: float, cutoff: SmoothCutoff,
                      policy: Optional[ResolutionPolicy] = None, row_count: Optional[int] = None,
                      col_count: Optional[int] = None) -> DiscretizedOperator:
    """The kernel of discretize_T times |D(x_i, y_j)|^{re_z + i z_im}."""
    policy = policy or ResolutionPolicy.default()
    poly = _as_polynomial(phase)
    check_damping_support(damping, cutoff, lam)
    row_grid, col_grid = _grids(poly, cutoff, lam, policy, row_count, col_count)
    kernel = _build(poly, cutoff, lam, row_grid, col_grid, damping_weight(damping, z_im, lam))
    return DiscretizedOperator(row_grid, col_grid, kernel, {
        "phase": str(poly),
        "lambda": lam,
        "cutoff": cutoff.to_dict(),
        "damping": damping.to_dict(),
        "z_im": z_im,
    })

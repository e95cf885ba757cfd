"""Dyadic decomposition W_{k,l} of a discretized operator by the sizes of |x| and |y|."""

import logging
import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import numpy as np

from app.errors import OutOfRange
from app.operators.discretize import DiscretizedOperator
from app.operators.grid import Grid1D
from app.quadrature.cutoffs import DyadicPartition

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DyadicPiece:
    """Block of W_{k,l} = K · Φ(2^k|x|) Φ(2^l|y|) on the rows and columns where it is nonzero."""

    k: int
    l: int
    rows: np.ndarray = field(repr=False)
    cols: np.ndarray = field(repr=False)
    block: np.ndarray = field(repr=False)
    row_weight: float
    col_weight: float

    def x_range(self, grid: Grid1D) -> Tuple[float, float]:
        xs = np.abs(grid.points[self.rows])
        return float(xs.min()), float(xs.max())

    def schur(self) -> float:
        """√(A·B) for the piece, with the same weights as the full operator."""
        magnitude = np.abs(self.block)
        a = magnitude.sum(axis=1).max(initial=0.0)
        b = (magnitude.sum(axis=0) * self.row_weight / self.col_weight).max(initial=0.0)
        return math.sqrt(float(a) * float(b))

    def dense(self, shape) -> np.ndarray:
        out = np.zeros(shape, dtype=self.block.dtype)
        out[np.ix_(self.rows, self.cols)] = self.block
        return out


@dataclass(frozen=True)
class DyadicDecomposition:
    pieces: List[DyadicPiece]
    k_range: Tuple[int, int]
    reconstruction_error: float

    def by_index(self) -> Dict[Tuple[int, int], DyadicPiece]:
        return {(piece.k, piece.l): piece for piece in self.pieces}


def covering_range(grid: Grid1D) -> Tuple[int, int]:
    """(k_lo, k_hi) with Σ_k Φ(2^k|x|) = 1 at every nonzero grid point.

    Raises:
        OutOfRange: when every grid point sits at the origin.
    """
    magnitudes = np.abs(grid.points)
    magnitudes = magnitudes[magnitudes > 0]
    if magnitudes.size == 0:
        raise OutOfRange("no nonzero grid point to cover")
    k_lo = -math.ceil(math.log2(magnitudes.max()))
    k_hi = math.ceil(-math.log2(magnitudes.min()))
    return k_lo, k_hi


def _windows(partition: DyadicPartition, grid: Grid1D) -> Dict[int, np.ndarray]:
    """Φ(2^k|x|) per k; the partition indexes j = -k."""
    magnitudes = np.abs(grid.points)
    return {-j: partition.window(j, magnitudes) for j in range(partition.j_lo, partition.j_hi + 1)}


def dyadic_pieces(op: DiscretizedOperator, truncation: Optional[int] = None,
                  partition: Optional[DyadicPartition] = None) -> DyadicDecomposition:
    """Split K into pieces W_{k,l} with k, l ≤ truncation; |x|, |y| fold the four quadrants together.

    An explicit `partition` fixes the windows Φ_j, j = -k, and overrides `truncation`.
    Points at the origin get no window. The reconstruction error is ‖Σ W_{k,l} - K‖
    in the Frobenius bound of the L² operator norm.
    """
    if partition is None:
        k_lo_x, k_hi_x = covering_range(op.row_grid)
        k_lo_y, k_hi_y = covering_range(op.col_grid)
        k_lo = min(k_lo_x, k_lo_y)
        k_hi = max(k_hi_x, k_hi_y) if truncation is None else truncation
        partition = DyadicPartition(j_lo=-k_hi, j_hi=-k_lo)
    else:
        k_lo, k_hi = -partition.j_hi, -partition.j_lo
    row_windows = _windows(partition, op.row_grid)
    col_windows = _windows(partition, op.col_grid)

    pieces: List[DyadicPiece] = []
    total = np.zeros_like(op.kernel)
    for k, row_window in row_windows.items():
        rows = np.nonzero(row_window)[0]
        if rows.size == 0:
            continue
        for l, col_window in col_windows.items():
            cols = np.nonzero(col_window)[0]
            if cols.size == 0:
                continue
            block = op.kernel[np.ix_(rows, cols)] * np.multiply.outer(row_window[rows], col_window[cols])
            pieces.append(DyadicPiece(k=k, l=l, rows=rows, cols=cols, block=block,
                                      row_weight=op.row_grid.weight, col_weight=op.col_grid.weight))
            total[np.ix_(rows, cols)] += block

    error = float(np.linalg.norm(total - op.kernel)) * op.continuum_scale
    logger.info(f"Dyadic split into {len(pieces)} pieces, k in [{k_lo}, {k_hi}], reconstruction error {error:.3e}")
    return DyadicDecomposition(pieces=pieces, k_range=(k_lo, k_hi), reconstruction_error=error)

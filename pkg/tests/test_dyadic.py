import numpy as np
import pytest

from app.algebra.phase import HomogeneousPhase
from app.operators.discretize import discretize_T
from app.errors import OutOfRange
from app.operators.dyadic import covering_range, dyadic_pieces
from app.operators.grid import Grid1D
from app.quadrature.cutoffs import DyadicPartition, SmoothCutoff


@pytest.fixture(scope="module")
def op():
    return discretize_T(HomogeneousPhase.parse("x^3*y + x*y^3"), SmoothCutoff.tensor(), 8.0)


def test_covering_range(op):
    # |x| runs from half a cell (0.009375) to just under 0.6
    assert covering_range(op.row_grid) == (0, 7)


def test_covering_range_skips_the_origin():
    # midpoints 0 and 1
    assert covering_range(Grid1D(-0.5, 1.5, 2)) == (0, 0)
    with pytest.raises(OutOfRange):
        covering_range(Grid1D(-1.0, 1.0, 1))


def test_pieces_reconstruct_the_operator(op):
    split = dyadic_pieces(op)
    assert split.reconstruction_error < 1e-10
    assert split.k_range == (0, 7)
    total = sum(piece.dense(op.shape) for piece in split.pieces)
    np.testing.assert_allclose(total, op.kernel, atol=1e-12)


def test_pieces_live_on_dyadic_shells(op):
    split = dyadic_pieces(op)
    for piece in split.pieces:
        lo, hi = piece.x_range(op.row_grid)
        assert 2.0 ** (-piece.k - 1) <= lo
        assert hi <= 2.0 ** (1 - piece.k)
        assert piece.schur() >= 0


def test_truncation_drops_the_pieces_near_the_axes(op):
    split = dyadic_pieces(op, truncation=3)
    assert split.k_range == (0, 3)
    assert max(k for k, _ in split.by_index()) <= 3
    assert split.reconstruction_error > 1e-6


def test_explicit_partition(op):
    split = dyadic_pieces(op, partition=DyadicPartition(-7, 0))
    assert split.k_range == (0, 7)
    assert split.reconstruction_error < 1e-10
    assert split.by_index().keys() == dyadic_pieces(op).by_index().keys()
    narrow = dyadic_pieces(op, partition=DyadicPartition(-3, 0))
    assert narrow.k_range == (0, 3)
    assert narrow.by_index().keys() == dyadic_pieces(op, truncation=3).by_index().keys()

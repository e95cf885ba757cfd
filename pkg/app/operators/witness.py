"""Growth witness for the alternate damping factor used with β = 0.

W f(x) = ∫ e^{i(x-y)^n} |x (x-y)^{n-3}|^{1/2} f(y) dy applied to the indicator
of (N, N + (π/16)^{1/n}) stays large on a window to the right of the interval,
with |Wf| ≳ N^{1/2}, so W cannot be bounded on L².
"""

import logging
import math
from typing import Optional, Sequence

import numpy as np
from scipy import integrate

from app.errors import OutOfRange
from app.models.report_models import WitnessReport
from app.operators.decay import log_log_fit

logger = logging.getLogger(__name__)

_SOURCE_NODES = 64
_WINDOW_POINTS = 257


def witness_kernel(n: int, x, y) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    d = x - y
    return np.exp(1j * d ** n) * np.sqrt(np.abs(x * d ** (n - 3)))


def witness_window(n: int, N: float):
    """(source interval, target window) for the offset N."""
    source = (N, N + (math.pi / 16) ** (1 / n))
    target = (N + (math.pi / 8) ** (1 / n), N + (math.pi / 4) ** (1 / n))
    return source, target


def apply_witness(n: int, N: float, xs: np.ndarray) -> np.ndarray:
    """W applied to the indicator of the source interval, at the points xs."""
    (a, b), _ = witness_window(n, N)
    t, w = np.polynomial.legendre.leggauss(_SOURCE_NODES)
    ys = (a + b) / 2 + (b - a) / 2 * t
    values = witness_kernel(n, np.asarray(xs, float)[:, None], ys[None, :])
    return values @ (w * (b - a) / 2)


def unboundedness_witness(n: int, offsets: Optional[Sequence[float]] = None) -> WitnessReport:
    """min |Wf| on the target window along the offset ladder, with a log-log slope.

    Raises:
        OutOfRange: for n < 3 or fewer than three offsets.
    """
    if n < 3:
        raise OutOfRange(f"the witness needs n >= 3, got {n}")
    offsets = [2.0 ** e for e in range(4, 11)] if offsets is None else [float(N) for N in offsets]
    if len(offsets) < 3 or any(N <= 0 for N in offsets):
        raise OutOfRange("the witness needs at least three positive offsets")

    min_abs, f_l2, ratios = [], [], []
    for N in offsets:
        (a, b), (lo, hi) = witness_window(n, N)
        xs = np.linspace(lo, hi, _WINDOW_POINTS)
        magnitude = np.abs(apply_witness(n, N, xs))
        source_norm = math.sqrt(b - a)
        # trapezoid over the window bounds ‖Wf‖₂ from below
        window_norm = math.sqrt(float(integrate.trapezoid(magnitude ** 2, xs)))
        min_abs.append(float(magnitude.min()))
        f_l2.append(source_norm)
        ratios.append(window_norm / source_norm)
        logger.debug(f"witness n={n} N={N:g}: min|Wf| = {min_abs[-1]:.5g}")

    slope, intercept, stderr = log_log_fit(offsets, min_abs)
    logger.info(f"Witness for n={n}: slope {slope:.4f} ± {stderr:.4f} over N in [{offsets[0]:g}, {offsets[-1]:g}]")
    return WitnessReport(
        n=n,
        offsets=offsets,
        min_abs=min_abs,
        f_l2=f_l2,
        l2_ratios=ratios,
        slope=slope,
        intercept=intercept,
        stderr=stderr,
    )

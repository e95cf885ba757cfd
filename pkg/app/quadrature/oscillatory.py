"""Composite Gauss-Legendre evaluation of ∫ e^{iλφ(t)} a(t) dt with a Nyquist start."""

import logging
import math
from typing import Callable, Optional, Sequence, Tuple

import numpy as np

from app.config.env_config import config
from app.errors import BudgetExceeded, OutOfRange
from app.models.report_models import QuadratureResult, VdcReport

logger = logging.getLogger(__name__)

NODES_PER_PANEL = 16
SAMPLES_PER_OSCILLATION = 8
_CHUNK_PANELS = 1 << 15

_NODES, _WEIGHTS = np.polynomial.legendre.leggauss(NODES_PER_PANEL)

RealFunction = Callable[[np.ndarray], np.ndarray]


def max_abs_derivative(phase_fn: RealFunction, interval: Tuple[float, float],
                       phase_derivative: Optional[RealFunction] = None, samples: int = 4097) -> float:
    """max |φ'| on the interval, sampled (central differences without an explicit φ')."""
    lo, hi = interval
    ts = np.linspace(lo, hi, samples)
    if phase_derivative is not None:
        return float(np.max(np.abs(phase_derivative(ts))))
    return float(np.max(np.abs(np.gradient(phase_fn(ts), ts))))


def initial_panels(lam: float, slope: float, interval: Tuple[float, float]) -> int:
    """8·⌈λ·max|φ'|·|I|/(2π)⌉ panels, at least 8."""
    length = interval[1] - interval[0]
    oscillations = math.ceil(abs(lam) * slope * length / (2 * math.pi))
    return SAMPLES_PER_OSCILLATION * max(oscillations, 1)


def _composite_rule(phase_fn: RealFunction, amplitude_fn: RealFunction, lam: float,
                    interval: Tuple[float, float], panels: int) -> complex:
    lo, hi = interval
    width = (hi - lo) / panels
    total = 0j
    for start in range(0, panels, _CHUNK_PANELS):
        stop = min(start + _CHUNK_PANELS, panels)
        left = lo + width * np.arange(start, stop)
        ts = (left[:, None] + width * (_NODES[None, :] + 1.0) / 2.0).ravel()
        values = np.exp(1j * lam * phase_fn(ts)) * amplitude_fn(ts)
        total += np.sum(values.reshape(-1, NODES_PER_PANEL) @ _WEIGHTS)
    return total * width / 2.0


def oscillatory_integral(phase_fn: RealFunction, amplitude_fn: RealFunction, lam: float,
                         interval: Tuple[float, float], tol: Optional[float] = None,
                         eval_cap: Optional[int] = None,
                         phase_derivative: Optional[RealFunction] = None) -> QuadratureResult:
    """Integrate e^{iλφ} a over the interval, doubling panels until two values agree.

    Args:
        phase_fn: Real phase φ, vectorized.
        amplitude_fn: Amplitude a, vectorized; supported in the interval.
        lam: Frequency λ.
        interval: (lo, hi).
        tol: Absolute agreement between successive refinements.
        eval_cap: Evaluation budget.
        phase_derivative: φ', when known; otherwise sampled.

    Raises:
        BudgetExceeded: when the next refinement would pass the evaluation budget.
    """
    tol = config.tol if tol is None else tol
    eval_cap = config.eval_cap if eval_cap is None else eval_cap
    if tol <= 0:
        raise ValueError("tol must be positive")

    slope = max_abs_derivative(phase_fn, interval, phase_derivative)
    panels = initial_panels(lam, slope, interval)
    evaluations = panels * NODES_PER_PANEL
    if evaluations > eval_cap:
        raise BudgetExceeded(f"{evaluations} evaluations needed at lambda={lam}, budget {eval_cap}")
    previous = _composite_rule(phase_fn, amplitude_fn, lam, interval, panels)

    while True:
        panels *= 2
        if evaluations + panels * NODES_PER_PANEL > eval_cap:
            raise BudgetExceeded(f"quadrature at lambda={lam} did not reach tol={tol} within {eval_cap} evaluations")
        evaluations += panels * NODES_PER_PANEL
        value = _composite_rule(phase_fn, amplitude_fn, lam, interval, panels)
        difference = abs(value - previous)
        logger.debug(f"lambda={lam}: {panels} panels, change {difference:.3e}")
        if difference < tol:
            break
        previous = value

    return QuadratureResult(
        value_real=value.real,
        value_imag=value.imag,
        estimated_error=difference,
        evaluations=evaluations,
        panels=panels,
    )


def vdc_check(phase_fn: RealFunction, k: int, lambdas: Sequence[float], amplitude_fn: RealFunction,
              interval: Tuple[float, float] = (0.0, 1.0), reference: Optional[float] = None,
              tol: Optional[float] = None, phase_derivative: Optional[RealFunction] = None) -> VdcReport:
    """λ^{1/k}|I(λ)| along an increasing ladder.

    The terminal variation is (max - min)/max of the scaled values whose λ lies
    in the last decade, λ ≥ λ_max/10.
    """
    if k < 1:
        raise OutOfRange("k must be a positive integer")
    lambdas = [float(lam) for lam in lambdas]
    if not lambdas:
        raise OutOfRange("the lambda ladder is empty")
    if any(b <= a for a, b in zip(lambdas, lambdas[1:])):
        raise OutOfRange("the lambda ladder must be strictly increasing")

    scaled = []
    evaluations = 0
    for lam in lambdas:
        result = oscillatory_integral(phase_fn, amplitude_fn, lam, interval, tol=tol,
                                      phase_derivative=phase_derivative)
        evaluations += result.evaluations
        scaled.append(lam ** (1.0 / k) * abs(result.value))
        logger.info(f"vdc k={k}: lambda={lam:g}, scaled={scaled[-1]:.6f}")

    last_decade = [s for lam, s in zip(lambdas, scaled) if lam >= lambdas[-1] / 10]
    variation = (max(last_decade) - min(last_decade)) / max(last_decade) if max(last_decade) > 0 else 0.0
    reference_error = None
    if reference is not None:
        reference_error = abs(scaled[-1] - reference) / abs(reference)

    return VdcReport(
        k=k,
        lambdas=lambdas,
        scaled=scaled,
        sup_scaled=max(scaled),
        terminal_variation=variation,
        reference=reference,
        reference_error=reference_error,
        evaluations=evaluations,
    )

"""Decay-rate experiments along λ ladders."""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np
from scipy import stats

from app.algebra.phase import HomogeneousPhase
from app.algebra.rational import RationalLike, format_rational, to_rational
from app.config.env_config import config
from app.errors import OutOfRange
from app.exponents.damping import DampingSpec
from app.exponents.newton import newton_decay_rate, reduced_newton_polyhedron
from app.models.report_models import DecayReport, ImaginarySweepReport, NormEstimate
from app.operators.discretize import discretize_T, discretize_damped
from app.operators.grid import ResolutionPolicy
from app.operators.norms import lp_norm_lower_bound, modulated_trial_family, operator_norm_L2
from app.quadrature.cutoffs import SmoothCutoff

logger = logging.getLogger(__name__)

ESTIMATORS = ("singular_value", "trial_lower_bound")


def log_log_fit(xs: Sequence[float], ys: Sequence[float]) -> Tuple[float, float, float]:
    """(slope, intercept, stderr) of log y against log x."""
    fit = stats.linregress(np.log(np.asarray(xs, float)), np.log(np.asarray(ys, float)))
    return float(fit.slope), float(fit.intercept), float(fit.stderr)


def dyadic_ladder(lo_exponent: int, hi_exponent: int, steps: Optional[int] = None) -> List[float]:
    """2^lo .. 2^hi; with steps, that many log-spaced points."""
    if hi_exponent <= lo_exponent:
        raise OutOfRange("the lambda ladder needs lo < hi")
    if steps is None:
        return [2.0 ** e for e in range(lo_exponent, hi_exponent + 1)]
    return [float(v) for v in np.logspace(lo_exponent, hi_exponent, steps, base=2.0)]


def theory_slope(phase: HomogeneousPhase, p: RationalLike, damping: Optional[DampingSpec]) -> Fraction:
    """-decay of the damped family, or minus the Newton rate along the ray of p."""
    if damping is not None:
        return -damping.decay_exponent
    return -newton_decay_rate(reduced_newton_polyhedron(phase.to_polynomial()), p)


def run_ladder(task: Callable[[float], NormEstimate], lambdas: Sequence[float],
               workers: Optional[int] = None) -> List[NormEstimate]:
    """Evaluate task on every λ concurrently; results keep ladder order."""
    workers = config.workers if workers is None else workers
    with ThreadPoolExecutor(max_workers=max(1, workers)) as executor:
        return list(executor.map(task, lambdas))


def decay_fit(phase: HomogeneousPhase, p: RationalLike, lambdas: Sequence[float],
              cutoff: Optional[SmoothCutoff] = None, damping: Optional[DampingSpec] = None,
              estimator: str = "singular_value", policy: Optional[ResolutionPolicy] = None,
              tol: Optional[float] = None, workers: Optional[int] = None) -> DecayReport:
    """Fit the log-log slope of ‖T_λ‖ along the ladder.

    Args:
        phase: Homogeneous phase S.
        p: Lebesgue exponent; the singular-value estimator needs p = 2.
        lambdas: At least five strictly increasing frequencies.
        cutoff: Tensor bump amplitude; centered radius 0.6 by default.
        damping: Optional damping factor, evaluated at Im z = 0.
        estimator: "singular_value" or "trial_lower_bound".

    Raises:
        OutOfRange: for a bad ladder, estimator or p.
    """
    p_exact = to_rational(p)
    lambdas = [float(lam) for lam in lambdas]
    if len(lambdas) < 5 or any(b <= a for a, b in zip(lambdas, lambdas[1:])):
        raise OutOfRange("decay fits need at least five strictly increasing lambdas")
    if estimator not in ESTIMATORS:
        raise OutOfRange(f"unknown estimator {estimator!r}")
    if estimator == "singular_value" and p_exact != 2:
        raise OutOfRange("the singular-value estimator only measures p = 2")
    cutoff = cutoff or SmoothCutoff.tensor()
    policy = policy or ResolutionPolicy.default()

    def measure(lam: float) -> NormEstimate:
        if damping is None:
            op = discretize_T(phase, cutoff, lam, policy)
        else:
            op = discretize_damped(phase, damping, 0.0, lam, cutoff, policy)
        if estimator == "singular_value":
            estimate = operator_norm_L2(op, tol=tol)
        else:
            estimate = lp_norm_lower_bound(op, p_exact, modulated_trial_family(op))
        logger.info(f"{phase} lambda={lam:g}: norm {estimate.value:.6g} on {op.row_grid.count}x{op.col_grid.count}")
        return estimate

    estimates = run_ladder(measure, lambdas, workers)
    norms = [e.value for e in estimates]
    slope, intercept, stderr = log_log_fit(lambdas, norms)
    expected = theory_slope(phase, p_exact, damping)
    logger.info(f"Decay fit for {phase}: slope {slope:.4f} ± {stderr:.4f}, theory {format_rational(expected)}")
    return DecayReport(
        phase=str(phase),
        p=format_rational(p_exact),
        estimator=estimator,
        damping=damping.to_dict() if damping is not None else None,
        lambdas=lambdas,
        norms=norms,
        resolutions=[e.resolution for e in estimates],
        converged=[e.converged for e in estimates],
        slope=slope,
        intercept=intercept,
        stderr=stderr,
        theory_slope=format_rational(expected),
        theory_slope_value=float(expected),
    )


def imaginary_sweep(phase: HomogeneousPhase, damping: DampingSpec, lam: float, z_im_values: Sequence[float],
                    cutoff: Optional[SmoothCutoff] = None, policy: Optional[ResolutionPolicy] = None,
                    tol: Optional[float] = None, workers: Optional[int] = None) -> ImaginarySweepReport:
    """Damped L² norms for several Im z at Re z = damping.re_z, normalized by (1+|Im z|)²."""
    cutoff = cutoff or SmoothCutoff.tensor()
    policy = policy or ResolutionPolicy.default()
    values = sorted(set(float(t) for t in z_im_values) | {0.0})

    def measure(z_im: float) -> NormEstimate:
        return operator_norm_L2(discretize_damped(phase, damping, z_im, lam, cutoff, policy), tol=tol)

    estimates = run_ladder(measure, values, workers)
    norms = [e.value for e in estimates]
    base = norms[values.index(0.0)]
    ratios = [n / ((1 + abs(t)) ** 2 * base) if base > 0 else math.inf for t, n in zip(values, norms)]
    return ImaginarySweepReport(
        lam=lam,
        re_z=format_rational(damping.re_z),
        z_im=values,
        norms=norms,
        base_norm=base,
        ratios=ratios,
        max_ratio=max(ratios),
    )

"""Fractional integrals W_{a,b} and dilation sweeps for their exponent relations.

W_{a,b} f(x) = ∫ ||x|^a - |y|^a|^{-1/b} f(y) dy is homogeneous of degree -a/b,
so ‖W f_t‖_q / ‖f_t‖_p with f_t(x) = f(tx) is constant in t exactly when
1/p = 1/q + (b-a)/b.
"""

import logging
import math
from typing import Callable, Optional, Sequence

import numpy as np
from scipy import integrate, special

from app.algebra.rational import RationalLike, format_rational, to_rational
from app.errors import OutOfRange
from app.exponents.pitt import monomial_kernel_exponents, pitt_exponents
from app.models.report_models import PittReport, ScalingReport
from app.operators.grid import Grid1D
from app.quadrature.cutoffs import bump

logger = logging.getLogger(__name__)

INTERPRETATION = "||x|^a - |y|^a|^(-1/b)"

_ROW_BLOCK = 512


def default_dilations() -> list:
    return [2.0 ** (e / 2) for e in range(-6, 7)]


def fractional_kernel(a: float, b: float, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
    with np.errstate(divide="ignore"):
        return np.abs(np.abs(xs) ** a - np.abs(ys) ** a) ** (-1.0 / b)


def fractional_apply(a: float, b: float, grid: Grid1D, f: np.ndarray) -> np.ndarray:
    """W_{a,b} f at the grid points, dropping the diagonal cell and its mirror y = -x.

    Raises:
        OutOfRange: unless b ≥ a > 1.
    """
    a, b = float(a), float(b)
    if not (a > 1 and b >= a):
        raise OutOfRange(f"need b >= a > 1, got a={a:g}, b={b:g}")
    f = np.asarray(f)
    xs = grid.points
    count = grid.count
    out = np.empty(count, dtype=np.result_type(f, float))
    for start in range(0, count, _ROW_BLOCK):
        rows = np.arange(start, min(start + _ROW_BLOCK, count))
        kernel = fractional_kernel(a, b, xs[rows, None], xs[None, :])
        # |x_i| = |y_j| exactly on j = i and j = count - 1 - i
        kernel[np.arange(rows.size), rows] = 0.0
        kernel[np.arange(rows.size), count - 1 - rows] = 0.0
        out[rows] = kernel @ f * grid.weight
    return out


def _drift(ratios: Sequence[float]) -> float:
    return (max(ratios) - min(ratios)) / min(ratios)


def fractional_scaling_sweep(a: RationalLike, b: RationalLike, p: RationalLike, q: RationalLike,
                             t_values: Optional[Sequence[float]] = None,
                             profile: Optional[Callable[[np.ndarray], np.ndarray]] = None,
                             count: int = 2048, half_length: float = 4.0) -> ScalingReport:
    """Ratio ‖W_{a,b} f_t‖_q / ‖f_t‖_p over dilations t.

    Each f_t is sampled on the base grid dilated by 1/t, so every t sees the
    same cells relative to its own scale.
    """
    a_exact, b_exact, p_exact, q_exact = (to_rational(v) for v in (a, b, p, q))
    if p_exact < 1 or q_exact < 1:
        raise OutOfRange("p and q must be at least 1")
    t_values = default_dilations() if t_values is None else [float(t) for t in t_values]
    if any(t <= 0 for t in t_values):
        raise OutOfRange("dilations must be positive")
    profile = profile or (lambda x: bump(x, 1.0, 0.5))

    ratios = []
    for t in t_values:
        grid = Grid1D(-half_length / t, half_length / t, count)
        f_t = profile(t * grid.points)
        image = fractional_apply(float(a_exact), float(b_exact), grid, f_t)
        ratios.append(grid.norm(image, float(q_exact)) / grid.norm(f_t, float(p_exact)))

    holds = 1 / p_exact == 1 / q_exact + (b_exact - a_exact) / b_exact
    drift = _drift(ratios)
    logger.info(f"W_(a={format_rational(a_exact)}, b={format_rational(b_exact)}) p={format_rational(p_exact)} "
                f"q={format_rational(q_exact)}: drift {drift:.3e}, relation {'holds' if holds else 'fails'}")
    return ScalingReport(
        a=float(a_exact),
        b=float(b_exact),
        p=float(p_exact),
        q=float(q_exact),
        interpretation=INTERPRETATION,
        t_values=t_values,
        ratios=ratios,
        drift=drift,
        relation_holds=holds,
    )


# ------------------------------------------------------------
# Pitt
# ------------------------------------------------------------
def _gaussian_moment(s: float, c: float) -> float:
    """∫_R |x|^s e^{-c x²} dx = Γ((s+1)/2) / c^{(s+1)/2}."""
    return special.gamma((s + 1) / 2) / c ** ((s + 1) / 2)


def _weighted_gaussian_norm(weight_power: float, exponent: float, t: float) -> float:
    """‖|x|^{w} e^{-π(x/t)²}‖_r by quadrature, r = exponent."""
    c = math.pi * exponent / t ** 2
    s = weight_power * exponent

    def integrand(x):
        return x ** s * math.exp(-c * x * x)

    # split at the Gaussian scale
    scale = 1 / math.sqrt(c)
    head, _ = integrate.quad(integrand, 0.0, scale, limit=200)
    tail, _ = integrate.quad(integrand, scale, math.inf, limit=200)
    return (2 * (head + tail)) ** (1 / exponent)


def pitt_dilation_sweep(p: RationalLike, q: RationalLike, alpha: RationalLike, beta: RationalLike,
                        t_values: Optional[Sequence[float]] = None) -> PittReport:
    """‖|ξ|^{-α} f̂_t‖_q / ‖|x|^β f_t‖_p for f(x) = e^{-πx²} on the line.

    f̂_t(ξ) = t^{-1} e^{-π(ξ/t)²}, so both norms are weighted Gaussian integrals.
    Each is computed by quadrature and checked against the Gamma-function value.
    """
    p_exact, q_exact, alpha_exact, beta_exact = (to_rational(v) for v in (p, q, alpha, beta))
    if p_exact <= 1 or q_exact <= 1:
        raise OutOfRange("the dilation sweep needs p, q > 1")
    if alpha_exact * q_exact >= 1:
        raise OutOfRange("|ξ|^(-alpha q) must be integrable at 0")
    t_values = default_dilations() if t_values is None else [float(t) for t in t_values]

    pf, qf, af, bf = float(p_exact), float(q_exact), float(alpha_exact), float(beta_exact)
    ratios, worst = [], 0.0
    for t in t_values:
        target = _weighted_gaussian_norm(-af, qf, t) / t
        source = _weighted_gaussian_norm(bf, pf, 1 / t)
        exact_target = _gaussian_moment(-af * qf, math.pi * qf / t ** 2) ** (1 / qf) / t
        exact_source = _gaussian_moment(bf * pf, math.pi * pf * t ** 2) ** (1 / pf)
        worst = max(worst, abs(target - exact_target) / exact_target, abs(source - exact_source) / exact_source)
        ratios.append(target / source)

    drift = _drift(ratios)
    logger.info(f"Pitt sweep p={format_rational(p_exact)} q={format_rational(q_exact)}: drift {drift:.3e}, "
                f"closed-form gap {worst:.2e}")
    return pitt_report(1, p_exact, q_exact, alpha_exact, beta_exact).model_copy(update={
        "t_values": t_values,
        "ratios": ratios,
        "drift": drift,
        "closed_form_error": worst,
    })


def pitt_report(n_dim: int, p: RationalLike, q: RationalLike, alpha: RationalLike,
                beta: RationalLike) -> PittReport:
    """Exact verdict only, for any dimension."""
    p_exact, q_exact, alpha_exact, beta_exact = (to_rational(v) for v in (p, q, alpha, beta))
    verdict = pitt_exponents(n_dim, p_exact, q_exact, alpha_exact, beta_exact)
    try:
        monomial = [format_rational(v) for v in monomial_kernel_exponents(p_exact, q_exact, alpha_exact, beta_exact)]
    except OutOfRange:
        monomial = None
    return PittReport(
        n_dim=n_dim,
        p=format_rational(p_exact),
        q=format_rational(q_exact),
        alpha=format_rational(alpha_exact),
        beta=format_rational(beta_exact),
        verdict=verdict.to_dict(),
        monomial_exponents=monomial,
    )

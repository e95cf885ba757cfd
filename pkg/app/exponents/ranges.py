"""Sharp L^p ranges of homogeneous phases and the duality transforms on them."""

import logging
from dataclasses import dataclass
from fractions import Fraction

from app.algebra.phase import HomogeneousPhase, k_extremes
from app.algebra.rational import RationalLike, format_rational, to_rational
from app.errors import OutOfHypothesis, OutOfRange

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LpRange:
    """Closed interval [p_lo, p_hi] of Lebesgue exponents, 1 < p_lo ≤ p_hi < ∞."""

    p_lo: Fraction
    p_hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "p_lo", Fraction(self.p_lo))
        object.__setattr__(self, "p_hi", Fraction(self.p_hi))
        if not 1 < self.p_lo <= self.p_hi:
            raise OutOfRange(f"invalid L^p range [{self.p_lo}, {self.p_hi}]")

    def contains(self, p: RationalLike) -> bool:
        p = to_rational(p)
        return self.p_lo <= p <= self.p_hi

    def __contains__(self, p) -> bool:
        return self.contains(p)

    def to_list(self) -> list:
        return [format_rational(self.p_lo), format_rational(self.p_hi)]

    def __str__(self) -> str:
        return f"[{format_rational(self.p_lo)}, {format_rational(self.p_hi)}]"


def conjugate_exponent(p: RationalLike) -> Fraction:
    """p' with 1/p + 1/p' = 1.

    Raises:
        OutOfRange: for p ≤ 1.
    """
    p = to_rational(p)
    if p <= 1:
        raise OutOfRange(f"conjugate exponent needs p > 1, got {format_rational(p)}")
    return p / (p - 1)


def dual_range(lp_range: LpRange) -> LpRange:
    return LpRange(conjugate_exponent(lp_range.p_hi), conjugate_exponent(lp_range.p_lo))


def sharp_lp_range(phase: HomogeneousPhase) -> LpRange:
    """[n/(n-k_min), n/(n-k_max)].

    Raises:
        DegeneratePhase: when no mixed coefficient is nonzero.
    """
    n = phase.degree
    k_min, k_max = k_extremes(phase)
    return LpRange(Fraction(n, n - k_min), Fraction(n, n - k_max))


def weighted_endpoint(n: int, k: int, m1: int) -> Fraction:
    """((n-k)m1 + k) / ((n-k)m1), the one-sided exponent from the weighted interpolation."""
    if not 1 <= k <= n - 1 or m1 < 1:
        raise OutOfRange(f"weighted endpoint needs 1 ≤ k ≤ n-1 and m1 ≥ 1 (n={n}, k={k}, m1={m1})")
    return Fraction((n - k) * m1 + k, (n - k) * m1)


def interpolation_weight_exponent(p: RationalLike, q0: RationalLike) -> Fraction:
    """Power of the weight x^{(p-q0)/(q0-1)} used in the interpolation step."""
    p, q0 = to_rational(p), to_rational(q0)
    if q0 == 1:
        raise OutOfRange("q0 must differ from 1")
    return (p - q0) / (q0 - 1)


def sharp_lp_range_m(phase: HomogeneousPhase, m1: int, m2: int) -> LpRange:
    """Range of T_{m1,m2}: [k_min m2/((n-k_min)m1) + 1, k_max m2/((n-k_max)m1) + 1].

    Each endpoint is the one-sided weighted endpoint stretched by m2.
    """
    if m1 < 1 or m2 < 1:
        raise OutOfRange(f"m1 and m2 must be positive, got ({m1}, {m2})")
    n = phase.degree
    k_min, k_max = k_extremes(phase)
    lo = 1 + m2 * (weighted_endpoint(n, k_min, m1) - 1)
    hi = 1 + m2 * (weighted_endpoint(n, k_max, m1) - 1)
    return LpRange(lo, hi)


def l2_source_exponent(phase: HomogeneousPhase) -> Fraction:
    """p = 2(n-k_min)/(2n-3k_min), for which T maps L^p into L^2.

    Raises:
        OutOfHypothesis: if k_min > n/2.
    """
    n = phase.degree
    k_min, _ = k_extremes(phase)
    if 2 * k_min > n:
        raise OutOfHypothesis(f"k_min={k_min} exceeds n/2 for n={n}")
    return Fraction(2 * (n - k_min), 2 * n - 3 * k_min)

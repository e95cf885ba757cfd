"""Pitt and fractional-integral exponent relations, in exact arithmetic."""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Tuple

from app.algebra.rational import RationalLike, format_rational, to_rational
from app.errors import OutOfRange
from app.exponents.ranges import conjugate_exponent

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PittVerdict:
    valid: bool
    balance: Fraction
    violations: Tuple[str, ...] = field(default_factory=tuple)

    def to_dict(self) -> dict:
        return {
            "valid": self.valid,
            "balance": format_rational(self.balance),
            "violations": list(self.violations),
        }


def pitt_exponents(n_dim: int, p: RationalLike, q: RationalLike,
                   alpha: RationalLike, beta: RationalLike) -> PittVerdict:
    """Check 1 < p ≤ q < ∞, 0 ≤ α < n/q, 0 ≤ β < n/p' and n/p + n/q + β - α = n.

    `balance` is n/p + n/q + β - α - n, zero exactly on the relation.
    """
    p, q, alpha, beta = (to_rational(v) for v in (p, q, alpha, beta))
    violations: List[str] = []
    if n_dim < 1:
        violations.append("dimension must be positive")
    if not 1 < p <= q:
        violations.append("need 1 < p <= q")
    if not 0 <= alpha:
        violations.append("need alpha >= 0")
    elif q > 0 and not alpha < n_dim / q:
        violations.append("need alpha < n/q")
    if not 0 <= beta:
        violations.append("need beta >= 0")
    elif p > 1 and not beta < n_dim / conjugate_exponent(p):
        violations.append("need beta < n/p'")
    balance = n_dim / p + n_dim / q + beta - alpha - n_dim if p > 0 and q > 0 else Fraction(0)
    if p > 0 and q > 0 and balance != 0:
        violations.append("n/p + n/q + beta - alpha != n")
    return PittVerdict(valid=not violations, balance=balance, violations=tuple(violations))


def monomial_kernel_exponents(p: RationalLike, q: RationalLike,
                              alpha: RationalLike, beta: RationalLike) -> Tuple[Fraction, Fraction]:
    """(a, b) = (1/(1 - qα), 1/(1 - p'β)) for the monomial kernel reformulation.

    Raises:
        OutOfRange: when qα ≥ 1 or p'β ≥ 1.
    """
    p, q, alpha, beta = (to_rational(v) for v in (p, q, alpha, beta))
    p_conj = conjugate_exponent(p)
    if q * alpha >= 1:
        raise OutOfRange(f"q*alpha = {format_rational(q * alpha)} must be below 1")
    if p_conj * beta >= 1:
        raise OutOfRange(f"p'*beta = {format_rational(p_conj * beta)} must be below 1")
    return 1 / (1 - q * alpha), 1 / (1 - p_conj * beta)


def monomial_kernel_relation(p: RationalLike, q: RationalLike,
                             alpha: RationalLike, beta: RationalLike) -> bool:
    """Whether 1/p = 1 - b/(a q) for the monomial kernel exponents."""
    p, q = to_rational(p), to_rational(q)
    a, b = monomial_kernel_exponents(p, q, alpha, beta)
    return 1 / p == 1 - b / (a * q)


def fractional_mapping(a: RationalLike, b: RationalLike, p: RationalLike) -> Fraction:
    """q with 1/p = 1/q + (b-a)/b, the target exponent of W_{a,b} on L^p.

    Raises:
        OutOfRange: unless b ≥ a > 1 and 1 < p < b/(b-a).
    """
    a, b, p = to_rational(a), to_rational(b), to_rational(p)
    if not (a > 1 and b >= a):
        raise OutOfRange(f"need b >= a > 1, got a={format_rational(a)}, b={format_rational(b)}")
    if p <= 1:
        raise OutOfRange(f"need p > 1, got {format_rational(p)}")
    if b > a and p >= b / (b - a):
        raise OutOfRange(f"need p < b/(b-a) = {format_rational(b / (b - a))}")
    return 1 / (1 / p - (b - a) / b)

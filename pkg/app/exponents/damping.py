"""Damping exponents a_β and the damping factors inserted into the kernel."""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

import numpy as np

from app.algebra.polynomial import BivariatePolynomial
from app.algebra.rational import format_rational
from app.errors import NonpositiveArgument, OutOfRange, UndefinedExponent

logger = logging.getLogger(__name__)


def damping_exponent(n: int, beta: int) -> Tuple[Fraction, Fraction]:
    """(a_β, decay) with a_β = (1/(2(β+1))) (n - 2(β+1))/(n - β - 2) and decay = 1/(2(β+1)).

    Raises:
        OutOfRange: unless 0 ≤ β ≤ n - 2.
        UndefinedExponent: at β = n - 2.
    """
    if not 0 <= beta <= n - 2:
        raise OutOfRange(f"beta must lie in [0, {n - 2}], got {beta}")
    if beta == n - 2:
        raise UndefinedExponent(f"a_beta is not defined for beta = n - 2 = {beta}")
    decay = Fraction(1, 2 * (beta + 1))
    a_beta = decay * Fraction(n - 2 * (beta + 1), n - beta - 2)
    return a_beta, decay


@dataclass(frozen=True)
class DampingSpec:
    """Weight |D(x, y)|^z with Re z = re_z.

    D is either a polynomial, or the translation-invariant base
    |λ|^{-1/pedestal_degree} + |x - line_slope·y|.
    """

    case: str
    beta: int
    polynomial: Optional[BivariatePolynomial]
    line_slope: Optional[Fraction]
    pedestal_degree: Optional[int]
    re_z: Fraction
    decay_exponent: Fraction

    @property
    def has_pedestal(self) -> bool:
        return self.polynomial is None

    def describe(self) -> str:
        if self.has_pedestal:
            slope = format_rational(self.line_slope)
            line = "x - y" if self.line_slope == 1 else f"x - {slope}*y"
            return f"(|lambda|^(-1/{self.pedestal_degree}) + |{line}|)"
        return str(self.polynomial)

    def evaluate_abs(self, xs: np.ndarray, ys: np.ndarray, lam: float) -> np.ndarray:
        """|D| on the tensor grid xs × ys."""
        if self.has_pedestal:
            if lam == 0:
                raise NonpositiveArgument("the pedestal |lambda|^(-1/n) needs lambda != 0")
            pedestal = abs(lam) ** (-1.0 / self.pedestal_degree)
            return pedestal + np.abs(np.subtract.outer(np.asarray(xs, float),
                                                       float(self.line_slope) * np.asarray(ys, float)))
        return np.abs(self.polynomial.evaluate_grid(xs, ys))

    def evaluate_signed(self, xs: np.ndarray, ys: np.ndarray, lam: float) -> np.ndarray:
        """D itself on the grid; the pedestal form is already positive."""
        if self.has_pedestal:
            return self.evaluate_abs(xs, ys, lam)
        return self.polynomial.evaluate_grid(xs, ys)

    def to_dict(self) -> dict:
        return {
            "case": self.case,
            "D": self.describe(),
            "re_z": format_rational(self.re_z),
            "decay": format_rational(self.decay_exponent),
            "beta": self.beta,
        }

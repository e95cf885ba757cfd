"""Homogeneous phases S(x, y) = Σ a_k x^{n-k} y^k and their invariants."""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from app.algebra.parser import parse_phase
from app.algebra.polynomial import BivariatePolynomial, Scalar
from app.algebra.univariate import UnivariatePolynomial
from app.errors import DegeneratePhase, NotHomogeneous, ZeroPolynomial

logger = logging.getLogger(__name__)


def homogeneity(poly: BivariatePolynomial) -> Optional[int]:
    """Return n if every term has total degree n; None otherwise or for zero."""
    degrees = {i + j for (i, j), _ in poly.items()}
    if len(degrees) != 1:
        return None
    return degrees.pop()


def mixed_hessian(poly: BivariatePolynomial) -> BivariatePolynomial:
    """The exact mixed derivative ∂²/∂x∂y."""
    return poly.derivative_x().derivative_y()


def evaluate(poly: BivariatePolynomial, x: Scalar, y: Scalar) -> Fraction:
    return poly.evaluate(x, y)


@dataclass(frozen=True)
class Dehomogenized:
    gamma: int
    beta: int
    g: UnivariatePolynomial


def dehomogenize(poly: BivariatePolynomial, which_axis: str = "x") -> Dehomogenized:
    """Strip the axis factors x^γ y^β and set one variable to 1.

    With which_axis="x" (the default) x is set to 1 and g(t) = (poly/(x^γ y^β))(1, t),
    so a root α of g corresponds to the linear factor (y - αx). With "y" the roles swap.

    Raises:
        ZeroPolynomial: for the zero polynomial.
        NotHomogeneous: if poly is not homogeneous.
    """
    if which_axis not in ("x", "y"):
        raise ValueError(f"which_axis must be 'x' or 'y', got {which_axis!r}")
    if poly.is_zero():
        raise ZeroPolynomial()
    n = homogeneity(poly)
    if n is None:
        raise NotHomogeneous(f"{poly} is not homogeneous")
    gamma = min(i for (i, _), _ in poly.items())
    beta = min(j for (_, j), _ in poly.items())
    reduced = poly.divide_monomial(gamma, beta)
    d = n - gamma - beta
    coefficients = [Fraction(0)] * (d + 1)
    for (i, j), c in reduced.items():
        index = j if which_axis == "x" else i
        coefficients[index] = c
    return Dehomogenized(gamma=gamma, beta=beta, g=UnivariatePolynomial(coefficients))


@dataclass(frozen=True)
class HomogeneousPhase:
    """S(x, y) = Σ_{k=0}^{n} a_k x^{n-k} y^k with exact coefficients.

    Degenerate phases (every a_k with 1 ≤ k ≤ n-1 vanishes) are representable;
    `is_degenerate` flags them and the sharp-range operations reject them.
    """

    degree: int
    coefficients: Tuple[Fraction, ...]

    def __post_init__(self):
        if self.degree < 1:
            raise ValueError("degree must be positive")
        if len(self.coefficients) != self.degree + 1:
            raise ValueError(f"expected {self.degree + 1} coefficients, got {len(self.coefficients)}")
        object.__setattr__(self, "coefficients", tuple(Fraction(c) for c in self.coefficients))

    @classmethod
    def from_coefficients(cls, coefficients: Sequence[Scalar]) -> "HomogeneousPhase":
        return cls(degree=len(coefficients) - 1, coefficients=tuple(Fraction(c) for c in coefficients))

    @classmethod
    def from_polynomial(cls, poly: BivariatePolynomial) -> "HomogeneousPhase":
        n = homogeneity(poly)
        if n is None:
            if poly.is_zero():
                raise ZeroPolynomial()
            raise NotHomogeneous(f"{poly} is not homogeneous")
        coefficients = [poly.coefficient(n - k, k) for k in range(n + 1)]
        return cls(degree=n, coefficients=tuple(coefficients))

    @classmethod
    def parse(cls, text: str) -> "HomogeneousPhase":
        return cls.from_polynomial(parse_phase(text))

    @property
    def n(self) -> int:
        return self.degree

    @property
    def is_degenerate(self) -> bool:
        return all(a == 0 for a in self.coefficients[1:-1])

    def to_polynomial(self) -> BivariatePolynomial:
        n = self.degree
        return BivariatePolynomial({(n - k, k): a for k, a in enumerate(self.coefficients)})

    def transpose(self) -> "HomogeneousPhase":
        """S(y, x): a_k becomes a_{n-k}."""
        return HomogeneousPhase(degree=self.degree, coefficients=tuple(reversed(self.coefficients)))

    def __str__(self) -> str:
        return str(self.to_polynomial())


def k_extremes(phase: HomogeneousPhase) -> Tuple[int, int]:
    """(k_min, k_max): least and greatest 1 ≤ k ≤ n-1 with a_k ≠ 0.

    Raises:
        DegeneratePhase: when S is a pure-x plus pure-y polynomial.
    """
    mixed = [k for k in range(1, phase.degree) if phase.coefficients[k] != 0]
    if not mixed:
        raise DegeneratePhase()
    return mixed[0], mixed[-1]

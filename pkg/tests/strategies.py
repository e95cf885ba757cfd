"""Shared hypothesis strategies for phases and rationals."""

from fractions import Fraction

import hypothesis.strategies as st
import sympy

from app.algebra.phase import HomogeneousPhase

small_fractions = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4))


@st.composite
def phases(draw, min_degree: int = 2, max_degree: int = 7) -> HomogeneousPhase:
    """Non-degenerate homogeneous phases with small rational coefficients."""
    n = draw(st.integers(min_degree, max_degree))
    coefficients = draw(st.lists(small_fractions, min_size=n + 1, max_size=n + 1))
    k = draw(st.integers(1, n - 1))
    if coefficients[k] == 0:
        coefficients[k] = Fraction(draw(st.sampled_from([-2, -1, 1, 3])))
    return HomogeneousPhase.from_coefficients(coefficients)


def to_sympy(poly, x, y):
    """A BivariatePolynomial as a sympy expression in x and y."""
    return sum((sympy.Rational(c.numerator, c.denominator) * x ** i * y ** j for (i, j), c in poly.items()),
               sympy.Integer(0))


def univariate_to_sympy(poly, t):
    return sum((sympy.Rational(c.numerator, c.denominator) * t ** k for k, c in enumerate(poly.coefficients)),
               sympy.Integer(0))

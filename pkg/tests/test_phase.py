from fractions import Fraction

import pytest
import sympy
from hypothesis import given

from app.algebra.phase import HomogeneousPhase, dehomogenize, homogeneity, k_extremes, mixed_hessian
from app.algebra.parser import parse_phase
from app.algebra.polynomial import BivariatePolynomial
from app.errors import DegeneratePhase, NotHomogeneous, ZeroPolynomial
from tests.strategies import phases, to_sympy

X, Y = sympy.symbols("x y")


def test_parse_phase_coefficients():
    phase = HomogeneousPhase.parse("x^3*y + x*y^3")
    assert phase.degree == 4
    assert phase.coefficients == (0, 1, 0, 1, 0)
    assert k_extremes(phase) == (1, 3)
    assert str(phase) == "x^3*y + x*y^3"


def test_invalid_phases():
    with pytest.raises(NotHomogeneous):
        HomogeneousPhase.parse("x^2 + y")
    with pytest.raises(ZeroPolynomial):
        HomogeneousPhase.parse("x*y - x*y")
    with pytest.raises(DegeneratePhase):
        k_extremes(HomogeneousPhase.parse("x^3 + y^3"))


def test_degenerate_phase_is_representable():
    phase = HomogeneousPhase.parse("x^3 - 2*y^3")
    assert phase.is_degenerate


def test_transpose_reverses_coefficients():
    phase = HomogeneousPhase.from_coefficients([1, 2, 0, 5])
    assert phase.transpose().coefficients == (5, 0, 2, 1)
    assert phase.transpose().to_polynomial() == phase.to_polynomial().transpose()


def test_dehomogenize_strips_axis_factors():
    reduced = dehomogenize(parse_phase("x^3*y + x*y^3"))
    assert (reduced.gamma, reduced.beta) == (1, 1)
    assert reduced.g.coefficients == (1, 0, 1)

    swapped = dehomogenize(parse_phase("2*x^2*y^2 - x*y^3"), "y")
    assert (swapped.gamma, swapped.beta) == (1, 2)
    assert swapped.g.coefficients == (-1, 2)


def test_dehomogenize_rejects_bad_input():
    with pytest.raises(ZeroPolynomial):
        dehomogenize(BivariatePolynomial.zero())
    with pytest.raises(NotHomogeneous):
        dehomogenize(parse_phase("x^2 + y"))
    with pytest.raises(ValueError):
        dehomogenize(parse_phase("x*y"), "z")


@given(phases())
def test_euler_identity(phase):
    S = phase.to_polynomial()
    x, y = BivariatePolynomial.x(), BivariatePolynomial.y()
    assert x * S.derivative_x() + y * S.derivative_y() == S.scale(phase.degree)


@given(phases())
def test_mixed_hessian_matches_sympy(phase):
    S = phase.to_polynomial()
    expected = sympy.diff(to_sympy(S, X, Y), X, Y)
    assert sympy.expand(to_sympy(mixed_hessian(S), X, Y) - expected) == 0
    if phase.degree >= 2:
        assert homogeneity(mixed_hessian(S)) == phase.degree - 2


@given(phases())
def test_k_extremes_are_mixed_indices(phase):
    k_min, k_max = k_extremes(phase)
    assert 1 <= k_min <= k_max <= phase.degree - 1
    assert phase.coefficients[k_min] != 0 and phase.coefficients[k_max] != 0
    assert all(a == 0 for a in phase.coefficients[1:k_min])
    assert k_extremes(phase.transpose()) == (phase.degree - k_max, phase.degree - k_min)


def test_from_coefficients_keeps_fractions():
    phase = HomogeneousPhase.from_coefficients([0, Fraction(1, 2), 0])
    assert phase.to_polynomial() == parse_phase("1/2*x*y")

from fractions import Fraction

import pytest
import sympy
from hypothesis import given

from app.algebra.phase import HomogeneousPhase, k_extremes, mixed_hessian
from app.algebra.polynomial import BivariatePolynomial
from app.errors import ZeroHessian
from app.factorization.hessian import PhaseCase, analyze_hessian, classify_phase, factor_hessian
from tests.strategies import phases, to_sympy

X, Y = sympy.symbols("x y")
t = sympy.Symbol("t")


def test_positive_definite_hessian():
    phase = HomogeneousPhase.parse("x^3*y + x*y^3")
    fact = factor_hessian(phase)
    assert fact.leading_c == 3
    assert (fact.gamma, fact.beta) == (0, 0)
    assert fact.linear == ()
    assert len(fact.quadratics) == 1 and fact.quadratics[0].discriminant == -4
    assert fact.certificates[0].real_roots == 0
    assert fact.degree_bookkeeping() == 2
    assert classify_phase(fact, 4) == PhaseCase.GENERAL

    damping = analyze_hessian(phase)["damping"]
    assert damping.re_z == Fraction(1, 2)
    assert damping.decay_exponent == Fraction(1, 2)


def test_pure_translation_line():
    phase = HomogeneousPhase.parse("x^3 - 3*x^2*y + 3*x*y^2 - y^3")
    analysis = analyze_hessian(phase)
    assert analysis["case"] == PhaseCase.PURE_TRANSLATION_LINE
    damping = analysis["damping"]
    assert damping.has_pedestal
    assert damping.line_slope == 1
    assert damping.re_z == Fraction(1, 2)


def test_single_line_with_axis():
    # S''_xy = 12 y (y - x)^2
    phase = HomogeneousPhase.parse("2*x^3*y^2 - 4*x^2*y^3 + 3*x*y^4")
    analysis = analyze_hessian(phase)
    fact = analysis["factorization"]
    assert (fact.gamma, fact.beta) == (0, 1)
    assert [(root.lo, root.multiplicity) for root in fact.linear] == [(1, 2)]
    assert analysis["case"] == PhaseCase.SINGLE_LINE_WITH_AXIS
    damping = analysis["damping"]
    x, y = BivariatePolynomial.x(), BivariatePolynomial.y()
    assert damping.polynomial == x * (y - x)
    assert damping.re_z == Fraction(1, 8)


def test_monomial_hessian():
    analysis = analyze_hessian(HomogeneousPhase.parse("x^2*y^2"))
    assert analysis["case"] == PhaseCase.MONOMIAL_HESSIAN
    assert analysis["damping"].re_z == 0


def test_undefined_damping_exponent_is_reported():
    analysis = analyze_hessian(HomogeneousPhase.parse("x*y^3"))
    assert analysis["damping"] is None
    assert "beta" in analysis["damping_error"]


def test_irrational_real_roots_keep_isolating_intervals():
    # S''_xy = 3 (y^2 - 2 x^2)
    fact = factor_hessian(HomogeneousPhase.parse("-2*x^3*y + x*y^3"))
    assert fact.m == 2
    assert all(not root.is_exact for root in fact.linear)
    assert fact.linear[0].hi <= 0 <= fact.linear[1].lo
    assert fact.certificates == ()


def test_quadratic_phase_has_no_factorization():
    with pytest.raises(ZeroHessian):
        factor_hessian(HomogeneousPhase.parse("x*y"))


@given(phases(min_degree=3))
def test_normal_form_reconstructs_the_hessian(phase):
    n = phase.degree
    k_min, k_max = k_extremes(phase)
    fact = factor_hessian(phase)
    assert fact.reconstruct() == mixed_hessian(phase.to_polynomial())
    assert fact.gamma == n - k_max - 1
    assert fact.beta == k_min - 1
    assert fact.degree_bookkeeping() == n - 2


@given(phases(min_degree=3))
def test_real_lines_match_sympy(phase):
    fact = factor_hessian(phase)
    hessian = sympy.diff(to_sympy(phase.to_polynomial(), X, Y), X, Y)
    g = sympy.cancel(hessian.subs({X: 1, Y: t}) / t ** fact.beta)
    roots = set(sympy.Poly(g, t).real_roots()) if sympy.Poly(g, t).degree() > 0 else set()
    assert fact.m == len(roots)
    for root in fact.linear:
        matches = [r for r in roots if float(root.lo) - 1e-12 <= float(r) <= float(root.hi) + 1e-12]
        assert len(matches) == 1

from fractions import Fraction

import hypothesis.strategies as st
import pytest
import sympy
from hypothesis import given

from app.algebra.univariate import UnivariatePolynomial
from app.errors import EndpointIsRoot, ZeroPolynomial
from app.factorization.sturm import isolate_real_roots, refine_root, sturm_count, sturm_sequence
from tests.strategies import univariate_to_sympy

T = UnivariatePolynomial.t()
t = sympy.Symbol("t")


def test_sturm_count_of_t_squared_minus_two():
    g = T * T - 2
    assert sturm_count(g, -2, 2) == 2
    assert sturm_count(g, 0, 2) == 1
    assert sturm_count(g, 2, 10) == 0


def test_endpoint_roots_are_reported():
    with pytest.raises(EndpointIsRoot) as info:
        sturm_count(T * T - 1, 1, 3)
    assert info.value.endpoint == 1


def test_zero_polynomial_has_no_sequence():
    with pytest.raises(ZeroPolynomial):
        sturm_sequence(UnivariatePolynomial())


def test_isolation_with_multiplicities():
    g = (T * T - 2) * (T - 1) ** 2
    roots = isolate_real_roots(g)
    assert len(roots) == 3
    assert [r.multiplicity for r in roots] == [1, 2, 1]
    assert roots[0].hi <= 0
    assert roots[0].factor.sign_at(roots[0].lo) != roots[0].factor.sign_at(roots[0].hi)
    assert all(left.hi < right.lo for left, right in zip(roots, roots[1:]))
    assert roots[1].contains(1)


def test_refinement_reaches_width():
    (negative, positive) = isolate_real_roots(T * T - 2)
    refined = refine_root(positive, Fraction(1, 10 ** 10))
    assert refined.width <= Fraction(1, 10 ** 10)
    assert refined.lo ** 2 <= 2 <= refined.hi ** 2
    with pytest.raises(ValueError):
        refine_root(negative, 0)


def test_rational_roots_collapse_on_refinement():
    (root,) = isolate_real_roots(T - Fraction(1, 3))
    refined = refine_root(root, Fraction(1, 10 ** 6))
    assert refined.contains(Fraction(1, 3))


@given(st.lists(st.integers(-9, 9), min_size=2, max_size=7).filter(lambda c: c[-1] != 0))
def test_distinct_real_roots_match_sympy(coefficients):
    g = UnivariatePolynomial(coefficients)
    expected = sympy.Poly(univariate_to_sympy(g, t), t).real_roots()
    roots = isolate_real_roots(g)
    assert len(roots) == len(set(expected))
    for root, value in zip(roots, sorted(set(expected), key=lambda r: float(r))):
        lo, hi = sympy.Rational(root.lo.numerator, root.lo.denominator), sympy.Rational(root.hi.numerator, root.hi.denominator)
        assert lo <= value <= hi

from fractions import Fraction

import hypothesis.strategies as st
import pytest
from hypothesis import given

from app.algebra.univariate import UnivariatePolynomial, product
from app.errors import ZeroPolynomial
from app.factorization.square_free import square_free_decompose, square_free_part

T = UnivariatePolynomial.t()


def test_mixed_multiplicities():
    g = (T - 1) ** 2 * (T + 2) ** 3 * (T * T + 1) * 5
    result = square_free_decompose(g)
    assert result == [(T * T + 1, 1), (T - 1, 2), (T + 2, 3)]
    assert product(result) == g.monic()


def test_square_free_part_drops_repeats():
    g = (T - Fraction(1, 2)) ** 4 * (T + 3)
    assert square_free_part(g) == (T - Fraction(1, 2)) * (T + 3)


def test_constants_and_zero():
    assert square_free_decompose(UnivariatePolynomial([7])) == []
    with pytest.raises(ZeroPolynomial):
        square_free_decompose(UnivariatePolynomial())


@given(st.dictionaries(st.integers(-5, 5), st.integers(1, 4), min_size=1, max_size=4),
       st.integers(-3, 3).filter(lambda c: c != 0))
def test_multiplicities_group_the_roots(roots, leading):
    g = UnivariatePolynomial([leading])
    for root, multiplicity in roots.items():
        g = g * UnivariatePolynomial.linear_root(root) ** multiplicity

    expected = {}
    for root, multiplicity in roots.items():
        expected[multiplicity] = expected.get(multiplicity, UnivariatePolynomial([1])) * UnivariatePolynomial.linear_root(root)

    result = square_free_decompose(g)
    assert dict((m, factor) for factor, m in result) == expected
    assert [m for _, m in result] == sorted(m for _, m in result)

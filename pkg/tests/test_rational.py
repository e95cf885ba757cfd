from fractions import Fraction

import pytest
from hypothesis import given

from app.algebra.rational import format_rational, parse_rational, to_rational
from tests.strategies import small_fractions


def test_to_rational_accepts_exact_inputs():
    assert to_rational("3/4") == Fraction(3, 4)
    assert to_rational(" -7/2 ") == Fraction(-7, 2)
    assert to_rational(5) == Fraction(5)
    assert to_rational(Fraction(1, 3)) == Fraction(1, 3)


@pytest.mark.parametrize("value", [0.5, True, None, [1, 2]])
def test_to_rational_rejects_inexact_inputs(value):
    with pytest.raises(TypeError):
        to_rational(value)


def test_format_rational():
    assert format_rational(Fraction(6, 3)) == "2"
    assert format_rational(Fraction(-1, 2)) == "-1/2"
    assert format_rational(Fraction(0)) == "0"


@given(small_fractions)
def test_formatted_rationals_parse_back(value):
    assert parse_rational(format_rational(value)) == value

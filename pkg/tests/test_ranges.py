from fractions import Fraction

import pytest
from hypothesis import given

from app.algebra.phase import HomogeneousPhase
from app.errors import DegeneratePhase, OutOfHypothesis, OutOfRange
from app.exponents.ranges import (
    LpRange,
    conjugate_exponent,
    dual_range,
    interpolation_weight_exponent,
    l2_source_exponent,
    sharp_lp_range,
    sharp_lp_range_m,
    weighted_endpoint,
)
from tests.strategies import phases


def test_sharp_range_of_two_mixed_terms():
    phase = HomogeneousPhase.parse("x^3*y + x*y^3")
    lp_range = sharp_lp_range(phase)
    assert lp_range.to_list() == ["4/3", "4"]
    assert 2 in lp_range
    assert Fraction(5, 4) not in lp_range
    assert l2_source_exponent(phase) == Fraction(6, 5)


def test_single_mixed_term_gives_a_point():
    lp_range = sharp_lp_range(HomogeneousPhase.parse("x^2*y"))
    assert lp_range.p_lo == lp_range.p_hi == Fraction(3, 2)
    assert str(lp_range) == "[3/2, 3/2]"


def test_fourier_phase():
    assert sharp_lp_range(HomogeneousPhase.parse("x*y")).to_list() == ["2", "2"]


def test_l2_source_needs_small_k_min():
    with pytest.raises(OutOfHypothesis):
        l2_source_exponent(HomogeneousPhase.parse("x*y^2"))


def test_degenerate_phase_has_no_range():
    with pytest.raises(DegeneratePhase):
        sharp_lp_range(HomogeneousPhase.parse("x^4 + y^4"))


def test_conjugate_exponent():
    assert conjugate_exponent(2) == 2
    assert conjugate_exponent("4/3") == 4
    with pytest.raises(OutOfRange):
        conjugate_exponent(1)


def test_invalid_ranges():
    with pytest.raises(OutOfRange):
        LpRange(Fraction(1), Fraction(2))
    with pytest.raises(OutOfRange):
        LpRange(Fraction(3), Fraction(2))


def test_weighted_endpoints():
    assert weighted_endpoint(4, 1, 1) == Fraction(4, 3)
    assert weighted_endpoint(4, 1, 2) == Fraction(7, 6)
    assert interpolation_weight_exponent(3, 2) == 1
    with pytest.raises(OutOfRange):
        weighted_endpoint(4, 4, 1)
    with pytest.raises(OutOfRange):
        interpolation_weight_exponent(3, 1)


@given(phases())
def test_transpose_gives_the_dual_range(phase):
    assert dual_range(sharp_lp_range(phase)) == sharp_lp_range(phase.transpose())


@given(phases())
def test_unit_weights_reproduce_the_sharp_range(phase):
    assert sharp_lp_range_m(phase, 1, 1) == sharp_lp_range(phase)


@given(phases())
def test_l2_source_lies_below_two(phase):
    n = phase.degree
    try:
        p = l2_source_exponent(phase)
    except OutOfHypothesis:
        return
    assert 1 < p <= 2
    if n % 2 == 0 and phase.coefficients[n // 2] != 0 and all(a == 0 for a in phase.coefficients[1:n // 2]):
        assert p == 2

from fractions import Fraction

import pytest
from hypothesis import given

from app.algebra.parser import parse_phase
from app.algebra.phase import k_extremes
from app.errors import NoMixedTerms, OutOfRange
from app.exponents.newton import (
    NewtonPolyhedron,
    endpoint_estimate,
    newton_decay_rate,
    newton_distance,
    newton_endpoint_table,
    reduced_newton_polyhedron,
)
from app.exponents.ranges import sharp_lp_range
from tests.strategies import phases


def test_collinear_point_lies_on_an_edge():
    poly = parse_phase("x^3*y + x^2*y^2 + x*y^3")
    polyhedron = reduced_newton_polyhedron(poly)
    assert polyhedron.to_list() == [["1", "3"], ["3", "1"]]
    table = {tuple(row["point"]): row for row in newton_endpoint_table(poly)}
    assert table[(2, 2)]["position"] == "boundary"
    assert table[(1, 3)]["sharp"] and table[(3, 1)]["sharp"]
    assert newton_distance(polyhedron) == 2


def test_interior_points_are_not_sharp():
    poly = parse_phase("x^4*y + x^3*y^3 + x*y^4")
    table = {tuple(row["point"]): row for row in newton_endpoint_table(poly)}
    assert table[(3, 3)]["position"] == "interior"
    assert not table[(3, 3)]["sharp"]


def test_non_homogeneous_polygon():
    polyhedron = reduced_newton_polyhedron(parse_phase("x^4*y + x^2*y^2 + x*y^5 + x^3*y^3 + 7"))
    assert polyhedron.to_list() == [["1", "5"], ["2", "2"], ["4", "1"]]
    assert polyhedron.contains((3, 3))
    assert not polyhedron.contains((1, 1))
    assert polyhedron.on_boundary((3, Fraction(3, 2)))


def test_fourier_point():
    polyhedron = reduced_newton_polyhedron(parse_phase("x*y"))
    assert newton_distance(polyhedron) == 1
    assert newton_decay_rate(polyhedron, 2) == Fraction(1, 2)


def test_endpoint_estimate():
    assert endpoint_estimate(1, 1) == (2, Fraction(1, 2))
    assert endpoint_estimate(3, 1) == (Fraction(4, 3), Fraction(1, 4))
    with pytest.raises(OutOfRange):
        endpoint_estimate(0, 1)


def test_no_mixed_terms():
    with pytest.raises(NoMixedTerms):
        reduced_newton_polyhedron(parse_phase("x^3 + y^3"))


def test_vertices_must_form_a_staircase():
    with pytest.raises(ValueError):
        NewtonPolyhedron(vertices=((1, 1), (2, 2)))


def test_ray_parameter_must_exceed_one():
    with pytest.raises(OutOfRange):
        newton_decay_rate(reduced_newton_polyhedron(parse_phase("x*y")), 1)


@given(phases())
def test_extreme_mixed_monomials_are_vertices(phase):
    n = phase.degree
    k_min, k_max = k_extremes(phase)
    polyhedron = reduced_newton_polyhedron(phase.to_polynomial())
    assert polyhedron.is_vertex((n - k_min, k_min))
    assert polyhedron.is_vertex((n - k_max, k_max))
    assert len(polyhedron.vertices) == (1 if k_min == k_max else 2)


@given(phases())
def test_decay_inside_the_sharp_range_is_one_over_n(phase):
    lp_range = sharp_lp_range(phase)
    polyhedron = reduced_newton_polyhedron(phase.to_polynomial())
    for p in (lp_range.p_lo, lp_range.p_hi, (lp_range.p_lo + lp_range.p_hi) / 2):
        assert newton_decay_rate(polyhedron, p) == Fraction(1, phase.degree)

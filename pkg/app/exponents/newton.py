"""Reduced Newton polyhedra and the endpoint estimates read off their boundary.

Points are (power of x, power of y) of the monomials a_{k,l} x^k y^l with kl ≠ 0.
The polyhedron is the convex hull of the quadrants {(u, v): u ≥ k, v ≥ l}; it is
stored by its vertex chain, ordered by increasing k (hence strictly decreasing l).
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

from app.algebra.polynomial import BivariatePolynomial
from app.algebra.rational import RationalLike, format_rational, to_rational
from app.errors import NoMixedTerms, OutOfRange

logger = logging.getLogger(__name__)

Point = Tuple[Fraction, Fraction]


def _cross(o: Point, a: Point, b: Point) -> Fraction:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


@dataclass(frozen=True)
class NewtonPolyhedron:
    vertices: Tuple[Point, ...]

    def __post_init__(self):
        if not self.vertices:
            raise ValueError("a Newton polyhedron needs at least one vertex")
        cleaned = tuple((Fraction(k), Fraction(l)) for k, l in self.vertices)
        for (k1, l1), (k2, l2) in zip(cleaned, cleaned[1:]):
            if not (k1 < k2 and l1 > l2):
                raise ValueError("vertices must increase in k and strictly decrease in l")
        object.__setattr__(self, "vertices", cleaned)

    def constraints(self) -> List[Tuple[Fraction, Fraction, Fraction]]:
        """Half-planes a·u + b·v ≥ c cutting out the polyhedron (a, b ≥ 0)."""
        k_first = self.vertices[0][0]
        l_last = self.vertices[-1][1]
        result = [(Fraction(1), Fraction(0), k_first), (Fraction(0), Fraction(1), l_last)]
        for (k1, l1), (k2, l2) in zip(self.vertices, self.vertices[1:]):
            a = l1 - l2
            b = k2 - k1
            result.append((a, b, a * k1 + b * l1))
        return result

    def contains(self, point: Sequence[RationalLike]) -> bool:
        u, v = (to_rational(c) for c in point)
        return all(a * u + b * v >= c for a, b, c in self.constraints())

    def on_boundary(self, point: Sequence[RationalLike]) -> bool:
        u, v = (to_rational(c) for c in point)
        if not self.contains((u, v)):
            return False
        return any(a * u + b * v == c for a, b, c in self.constraints())

    def is_vertex(self, point: Sequence[RationalLike]) -> bool:
        u, v = (to_rational(c) for c in point)
        return (u, v) in self.vertices

    def to_list(self) -> List[List[str]]:
        return [[format_rational(k), format_rational(l)] for k, l in self.vertices]

    def __str__(self) -> str:
        return ", ".join(f"({format_rational(k)}, {format_rational(l)})" for k, l in self.vertices)


def mixed_support(poly: BivariatePolynomial) -> List[Tuple[int, int]]:
    return [(i, j) for (i, j), _ in poly.items() if i >= 1 and j >= 1]


def reduced_newton_polyhedron(poly: BivariatePolynomial) -> NewtonPolyhedron:
    """Vertices of the reduced Newton polyhedron of poly.

    Raises:
        NoMixedTerms: if no monomial has both powers positive.
    """
    points = mixed_support(poly)
    if not points:
        raise NoMixedTerms(f"{poly} has no monomial x^k y^l with kl ≠ 0")

    # lower-left staircase: keep points not dominated by another point
    staircase: List[Point] = []
    for k, l in sorted(set(points)):
        if staircase and l >= staircase[-1][1]:
            continue
        staircase.append((Fraction(k), Fraction(l)))

    hull: List[Point] = []
    for p in staircase:
        while len(hull) > 1 and _cross(hull[-2], hull[-1], p) <= 0:
            hull.pop()
        hull.append(p)

    polyhedron = NewtonPolyhedron(vertices=tuple(hull))
    logger.debug(f"Newton polyhedron of {poly}: {polyhedron}")
    return polyhedron


def endpoint_estimate(k: RationalLike, l: RationalLike) -> Tuple[Fraction, Fraction]:
    """(p, decay) = ((k+l)/k, 1/(k+l)) for the point (k, l)."""
    k, l = to_rational(k), to_rational(l)
    if k <= 0 or l <= 0:
        raise OutOfRange(f"endpoint estimate needs k, l > 0, got ({k}, {l})")
    return (k + l) / k, 1 / (k + l)


def newton_ray_point(polyhedron: NewtonPolyhedron, p: RationalLike) -> Point:
    """Where the ray l = (p-1)k enters the polyhedron."""
    p = to_rational(p)
    if p <= 1:
        raise OutOfRange(f"ray parameter needs p > 1, got {format_rational(p)}")
    s = p - 1
    t = max(c / (a + b * s) for a, b, c in polyhedron.constraints())
    return t, s * t


def newton_decay_rate(polyhedron: NewtonPolyhedron, p: RationalLike) -> Fraction:
    """Decay exponent 1/(k+l) at the boundary point on the ray l = (p-1)k."""
    k, l = newton_ray_point(polyhedron, p)
    return 1 / (k + l)


def newton_distance(polyhedron: NewtonPolyhedron) -> Fraction:
    """δ with (δ, δ) on the boundary; the L² rate is 1/(2δ)."""
    return newton_ray_point(polyhedron, 2)[0]


def newton_endpoint_table(poly: BivariatePolynomial) -> List[dict]:
    """Endpoint estimate for every mixed monomial, tagged vertex, boundary or interior."""
    polyhedron = reduced_newton_polyhedron(poly)
    rows = []
    for k, l in sorted(set(mixed_support(poly))):
        p, decay = endpoint_estimate(k, l)
        if polyhedron.is_vertex((k, l)):
            position = "vertex"
        elif polyhedron.on_boundary((k, l)):
            position = "boundary"
        else:
            position = "interior"
        rows.append({
            "point": [k, l],
            "p": format_rational(p),
            "decay": format_rational(decay),
            "position": position,
            "sharp": position == "vertex",
        })
    return rows

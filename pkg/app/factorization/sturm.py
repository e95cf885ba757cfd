"""Sturm sequences, exact real-root counting, isolation and refinement."""

import logging
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import List, Sequence

from app.algebra.rational import format_rational
from app.algebra.univariate import UnivariatePolynomial
from app.errors import EndpointIsRoot, ZeroPolynomial
from app.factorization.square_free import square_free_decompose

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IsolatedRealRoot:
    """A real algebraic number given by a square-free factor and an isolating interval.

    The factor has exactly one root in [lo, hi]. Either lo == hi is that root,
    or the factor changes sign strictly between the endpoints.
    """

    factor: UnivariatePolynomial
    lo: Fraction
    hi: Fraction
    multiplicity: int

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def approx(self) -> float:
        return float(self.midpoint)

    def contains(self, value) -> bool:
        return self.lo <= value <= self.hi

    def to_dict(self) -> dict:
        return {
            "factor": str(self.factor),
            "interval": [format_rational(self.lo), format_rational(self.hi)],
            "multiplicity": self.multiplicity,
            "approx": float(self.midpoint),
        }


def sturm_sequence(g: UnivariatePolynomial) -> List[UnivariatePolynomial]:
    """g, g', and negated remainders down to a constant."""
    if g.is_zero():
        raise ZeroPolynomial()
    sequence = [g, g.derivative()]
    while not sequence[-1].is_zero() and sequence[-1].degree > 0:
        sequence.append(-(sequence[-2] % sequence[-1]))
    if sequence[-1].is_zero():
        sequence.pop()
    return sequence


def sign_variations(sequence: Sequence[UnivariatePolynomial], t: Fraction) -> int:
    signs = [s for s in (p.sign_at(t) for p in sequence) if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sturm_count(g: UnivariatePolynomial, lo, hi) -> int:
    """Number of distinct real roots of g in the open interval (lo, hi).

    Raises:
        EndpointIsRoot: if g vanishes at lo or hi; callers perturb rationally.
    """
    lo, hi = Fraction(lo), Fraction(hi)
    if g.evaluate(lo) == 0:
        raise EndpointIsRoot(lo)
    if g.evaluate(hi) == 0:
        raise EndpointIsRoot(hi)
    if lo >= hi:
        return 0
    sequence = sturm_sequence(g)
    return sign_variations(sequence, lo) - sign_variations(sequence, hi)


def separation_radius(f: UnivariatePolynomial, root: Fraction) -> Fraction:
    """Half a lower bound on the distance from an exact rational root to the other roots.

    f is square-free with f(root) = 0. With h = f / (t - root), every root s of
    h(root + s) satisfies |s| > 1 / (1 + max |b_i / b_0|), b_0 = h(root) ≠ 0.
    """
    h = f // UnivariatePolynomial.linear_root(root)
    if h.degree < 1:
        return Fraction(1)
    shifted = h.shift(root).coefficients
    b0 = abs(shifted[0])
    bound = 1 / (1 + max(abs(b) / b0 for b in shifted[1:]))
    return bound / 2


def _isolate_square_free(f: UnivariatePolynomial, sequence, lo: Fraction, hi: Fraction,
                         multiplicity: int, out: List[IsolatedRealRoot]):
    count = sign_variations(sequence, lo) - sign_variations(sequence, hi)
    if count == 0:
        return
    if count == 1:
        out.append(IsolatedRealRoot(factor=f, lo=lo, hi=hi, multiplicity=multiplicity))
        return
    mid = (lo + hi) / 2
    if f.evaluate(mid) == 0:
        out.append(IsolatedRealRoot(factor=f, lo=mid, hi=mid, multiplicity=multiplicity))
        delta = min(separation_radius(f, mid), (mid - lo) / 2, (hi - mid) / 2)
        _isolate_square_free(f, sequence, lo, mid - delta, multiplicity, out)
        _isolate_square_free(f, sequence, mid + delta, hi, multiplicity, out)
        return
    _isolate_square_free(f, sequence, lo, mid, multiplicity, out)
    _isolate_square_free(f, sequence, mid, hi, multiplicity, out)


def isolate_square_free(f: UnivariatePolynomial, multiplicity: int = 1) -> List[IsolatedRealRoot]:
    """Isolate the real roots of a square-free polynomial inside its Cauchy bound."""
    if f.degree < 1:
        return []
    bound = f.cauchy_bound()
    roots: List[IsolatedRealRoot] = []
    _isolate_square_free(f, sturm_sequence(f), -bound, bound, multiplicity, roots)
    return sorted(roots, key=lambda r: r.lo)


def isolate_real_roots(g: UnivariatePolynomial) -> List[IsolatedRealRoot]:
    """One entry per distinct real root, with multiplicity from the square-free split.

    Args:
        g: A nonzero polynomial.

    Returns:
        Roots ordered left to right with pairwise disjoint intervals.
    """
    if g.is_zero():
        raise ZeroPolynomial()
    roots: List[IsolatedRealRoot] = []
    for factor, multiplicity in square_free_decompose(g):
        roots.extend(isolate_square_free(factor, multiplicity))
    roots.sort(key=lambda r: r.lo)
    return _separate(roots)


def _separate(roots: List[IsolatedRealRoot]) -> List[IsolatedRealRoot]:
    """Refine neighbouring intervals from different factors until they are disjoint."""
    changed = True
    while changed:
        changed = False
        for index in range(len(roots) - 1):
            left, right = roots[index], roots[index + 1]
            if left.hi >= right.lo and not (left.is_exact and right.is_exact):
                roots[index] = refine_root(left, left.width / 2) if not left.is_exact else left
                roots[index + 1] = refine_root(right, right.width / 2) if not right.is_exact else right
                changed = True
        roots.sort(key=lambda r: r.lo)
    return roots


def refine_root(root: IsolatedRealRoot, width) -> IsolatedRealRoot:
    """Bisect the isolating interval until hi - lo ≤ width; exact roots collapse to a point."""
    width = Fraction(width)
    if width <= 0:
        raise ValueError("width must be positive")
    f = root.factor
    lo, hi = root.lo, root.hi
    if lo == hi:
        return root
    lo_sign = f.sign_at(lo)
    while hi - lo > width:
        mid = (lo + hi) / 2
        mid_sign = f.sign_at(mid)
        if mid_sign == 0:
            lo = hi = mid
            break
        if mid_sign == lo_sign:
            lo = mid
        else:
            hi = mid
    return replace(root, lo=lo, hi=hi)

"""Yun square-free decomposition over the rationals."""

import logging
from typing import List, Tuple

from app.algebra.univariate import UnivariatePolynomial
from app.errors import ZeroPolynomial

logger = logging.getLogger(__name__)


def square_free_decompose(g: UnivariatePolynomial) -> List[Tuple[UnivariatePolynomial, int]]:
    """Split g into pairwise coprime monic square-free factors with multiplicities.

    Π factor_i^{mult_i} equals g divided by its leading coefficient. Factors are
    returned in increasing multiplicity; constant factors are dropped.

    Args:
        g: A nonzero polynomial.

    Returns:
        List of (factor, multiplicity).
    """
    if g.is_zero():
        raise ZeroPolynomial()
    f = g.monic()
    if f.degree < 1:
        return []

    result: List[Tuple[UnivariatePolynomial, int]] = []
    derivative = f.derivative()
    a = f.gcd(derivative)
    b = f // a
    c = derivative // a
    d = c - b.derivative()
    multiplicity = 1
    while b.degree >= 1:
        a = b.gcd(d)
        if a.degree >= 1:
            result.append((a, multiplicity))
        b = b // a
        c = d // a
        d = c - b.derivative()
        multiplicity += 1

    logger.debug(f"Square-free decomposition of {g}: {[(str(p), m) for p, m in result]}")
    return result


def square_free_part(g: UnivariatePolynomial) -> UnivariatePolynomial:
    """Product of the distinct monic square-free factors of g."""
    part = UnivariatePolynomial([1])
    for factor, _ in square_free_decompose(g):
        part = part * factor
    return part

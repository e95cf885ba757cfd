"""Normal form of the mixed Hessian, case classification and damping factors.

S''_xy(x, y) = c x^γ y^β Π (y - α_j x)^{m_j} Π Q_j(x, y)

Real roots are kept exact as (square-free factor, isolating interval). Rational
irreducible factors with no real roots are kept whole and carry a Sturm
certificate; degree-two ones are also listed as quadratic factors.
"""

import enum
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

import sympy

from app.algebra.phase import HomogeneousPhase, dehomogenize, mixed_hessian
from app.algebra.polynomial import BivariatePolynomial
from app.algebra.rational import format_rational
from app.algebra.univariate import UnivariatePolynomial, product
from app.errors import UndefinedExponent, ZeroHessian
from app.exponents.damping import DampingSpec, damping_exponent
from app.factorization.sturm import IsolatedRealRoot, isolate_square_free, sturm_count
from app.factorization.square_free import square_free_decompose

logger = logging.getLogger(__name__)

_T = sympy.Symbol("t")


class PhaseCase(str, enum.Enum):
    GENERAL = "GeneralCase"
    SINGLE_LINE_WITH_AXIS = "SingleLineWithAxis"
    PURE_TRANSLATION_LINE = "PureTranslationLine"
    MONOMIAL_HESSIAN = "MonomialHessian"


@dataclass(frozen=True)
class QuadraticFactor:
    """Monic t² + b t + c, i.e. the positive definite form y² + bxy + cx²."""

    b: Fraction
    c: Fraction
    multiplicity: int

    @property
    def discriminant(self) -> Fraction:
        return self.b * self.b - 4 * self.c

    def to_univariate(self) -> UnivariatePolynomial:
        return UnivariatePolynomial([self.c, self.b, 1])

    def to_dict(self) -> dict:
        return {
            "b": format_rational(self.b),
            "c": format_rational(self.c),
            "multiplicity": self.multiplicity,
            "discriminant": format_rational(self.discriminant),
        }


@dataclass(frozen=True)
class SturmCertificate:
    """An irreducible factor with its real-root count on (-bound, bound)."""

    factor: UnivariatePolynomial
    multiplicity: int
    bound: Fraction
    real_roots: int

    @property
    def complex_degree(self) -> int:
        return self.factor.degree - self.real_roots

    def to_dict(self) -> dict:
        return {
            "factor": str(self.factor),
            "multiplicity": self.multiplicity,
            "interval": [format_rational(-self.bound), format_rational(self.bound)],
            "real_roots": self.real_roots,
            "complex_degree": self.complex_degree,
        }


@dataclass(frozen=True)
class HessianFactorization:
    degree: int
    leading_c: Fraction
    gamma: int
    beta: int
    linear: Tuple[IsolatedRealRoot, ...]
    quadratics: Tuple[QuadraticFactor, ...]
    certificates: Tuple[SturmCertificate, ...]
    components: Tuple[Tuple[UnivariatePolynomial, int], ...] = field(repr=False)

    @property
    def s(self) -> int:
        """Number of non-real factor blocks (quadratic or certified)."""
        return len(self.certificates)

    @property
    def m(self) -> int:
        """Number of distinct real roots α_j."""
        return len(self.linear)

    def degree_bookkeeping(self) -> int:
        """γ + β + Σm_j + Σ (complex degree)·multiplicity; equals n - 2."""
        return (self.gamma + self.beta
                + sum(root.multiplicity for root in self.linear)
                + sum(cert.complex_degree * cert.multiplicity for cert in self.certificates))

    def dehomogenized(self) -> UnivariatePolynomial:
        """c · Π factor^mult, equal to g(t) = S''_xy(1, t) / t^β."""
        return product(self.components) * self.leading_c

    def reconstruct(self) -> BivariatePolynomial:
        """Expand c x^γ y^β Π homogenized factors back into S''_xy."""
        result = BivariatePolynomial.monomial(self.gamma, self.beta, self.leading_c)
        for factor, multiplicity in self.components:
            result = result * _homogenize(factor) ** multiplicity
        return result

    def to_dict(self) -> dict:
        return {
            "c": format_rational(self.leading_c),
            "gamma": self.gamma,
            "beta": self.beta,
            "linear": [root.to_dict() for root in self.linear],
            "quadratics": [quad.to_dict() for quad in self.quadratics],
            "certificates": [cert.to_dict() for cert in self.certificates],
        }


def _homogenize(factor: UnivariatePolynomial) -> BivariatePolynomial:
    """t ↦ y/x, cleared by x^deg: Σ a_i t^i becomes Σ a_i x^{d-i} y^i."""
    d = factor.degree
    return BivariatePolynomial({(d - i, i): c for i, c in enumerate(factor.coefficients)})


def _to_sympy(poly: UnivariatePolynomial) -> sympy.Poly:
    coefficients = [sympy.Rational(c.numerator, c.denominator) for c in reversed(poly.coefficients)]
    return sympy.Poly(coefficients, _T, domain=sympy.QQ)


def _from_sympy(poly: sympy.Poly) -> UnivariatePolynomial:
    coefficients = [Fraction(int(c.p), int(c.q)) for c in reversed(poly.all_coeffs())]
    return UnivariatePolynomial(coefficients).monic()


def irreducible_factors(factor: UnivariatePolynomial) -> List[UnivariatePolynomial]:
    """Monic irreducible factors over the rationals of a square-free polynomial."""
    _, factors = _to_sympy(factor).factor_list()
    result = [_from_sympy(p) for p, _ in factors]
    return sorted(result, key=lambda p: (p.degree, [str(c) for c in p.coefficients]))


def factor_hessian(phase: HomogeneousPhase) -> HessianFactorization:
    """Factor S''_xy into the normal form c x^γ y^β Π(y - α_j x)^{m_j} Π Q_j.

    Args:
        phase: A homogeneous phase of degree n ≥ 3.

    Returns:
        The exact factorization; reconstruct() reproduces S''_xy term by term.

    Raises:
        ZeroHessian: for n = 2 or when S''_xy vanishes identically.
    """
    n = phase.degree
    hessian = mixed_hessian(phase.to_polynomial())
    if n < 3 or hessian.is_zero():
        raise ZeroHessian()

    reduced = dehomogenize(hessian, "x")
    g = reduced.g
    leading_c = g.leading

    linear: List[IsolatedRealRoot] = []
    quadratics: List[QuadraticFactor] = []
    certificates: List[SturmCertificate] = []
    components: List[Tuple[UnivariatePolynomial, int]] = []

    for square_free, multiplicity in square_free_decompose(g):
        for p in irreducible_factors(square_free):
            components.append((p, multiplicity))
            if p.degree == 1:
                alpha = -p.coefficients[0]
                linear.append(IsolatedRealRoot(factor=p, lo=alpha, hi=alpha, multiplicity=multiplicity))
                continue
            roots = isolate_square_free(p, multiplicity)
            linear.extend(roots)
            if len(roots) == p.degree:
                continue
            bound = p.cauchy_bound()
            certificates.append(SturmCertificate(
                factor=p, multiplicity=multiplicity, bound=bound,
                real_roots=sturm_count(p, -bound, bound),
            ))
            if p.degree == 2:
                quadratics.append(QuadraticFactor(b=p.coefficients[1], c=p.coefficients[0],
                                                  multiplicity=multiplicity))

    linear.sort(key=lambda r: r.lo)
    factorization = HessianFactorization(
        degree=n,
        leading_c=leading_c,
        gamma=reduced.gamma,
        beta=reduced.beta,
        linear=tuple(linear),
        quadratics=tuple(quadratics),
        certificates=tuple(certificates),
        components=tuple(components),
    )
    logger.info(f"Factored S''_xy of {phase}: c={leading_c}, gamma={reduced.gamma}, "
                f"beta={reduced.beta}, {len(linear)} real roots, {len(certificates)} certified factors")
    return factorization


def classify_phase(fact: HessianFactorization, n: int) -> PhaseCase:
    """Pick the damping regime from the shape of the normal form."""
    if not fact.linear and not fact.certificates:
        return PhaseCase.MONOMIAL_HESSIAN
    if fact.certificates or len(fact.linear) != 1 or fact.gamma != 0:
        return PhaseCase.GENERAL
    multiplicity = fact.linear[0].multiplicity
    if fact.beta == 0 and multiplicity == n - 2:
        return PhaseCase.PURE_TRANSLATION_LINE
    if 0 < fact.beta < n - 2 and fact.beta + multiplicity == n - 2:
        return PhaseCase.SINGLE_LINE_WITH_AXIS
    return PhaseCase.GENERAL


def _rational_root(fact: HessianFactorization) -> Fraction:
    root = fact.linear[0]
    if root.factor.degree != 1:
        raise ValueError("single-line cases have a rational root")
    return -root.factor.coefficients[0]


def damping_spec(fact: HessianFactorization, case: PhaseCase, n: int) -> DampingSpec:
    """Damping factor D and exponent Re z for the phase's case.

    GeneralCase and MonomialHessian use D = x^γ Π(y - α_j x)^{m_j} Π Q_j,
    SingleLineWithAxis uses D = x (y - αx)^{n-3-β}, both with Re z = a_β.
    PureTranslationLine uses D = |λ|^{-1/n} + |x - y/α| with Re z = (n-2)/2.

    Raises:
        UndefinedExponent: when β = n - 2.
    """
    beta = fact.beta
    if case == PhaseCase.PURE_TRANSLATION_LINE:
        alpha = _rational_root(fact)
        return DampingSpec(
            case=case.value,
            beta=beta,
            polynomial=None,
            line_slope=1 / alpha,
            pedestal_degree=n,
            re_z=Fraction(n - 2, 2),
            decay_exponent=Fraction(1, 2 * (beta + 1)),
        )

    a_beta, decay = damping_exponent(n, beta)
    if case == PhaseCase.SINGLE_LINE_WITH_AXIS:
        alpha = _rational_root(fact)
        line = BivariatePolynomial({(0, 1): 1, (1, 0): -alpha})
        polynomial = BivariatePolynomial.x() * line ** (n - 3 - beta)
    else:
        hessian = fact.reconstruct()
        polynomial = hessian.divide_monomial(0, beta).scale(1 / fact.leading_c)
    return DampingSpec(
        case=case.value,
        beta=beta,
        polynomial=polynomial,
        line_slope=None,
        pedestal_degree=None,
        re_z=a_beta,
        decay_exponent=decay,
    )


def analyze_hessian(phase: HomogeneousPhase) -> Dict[str, object]:
    """Factorization, case tag and damping spec (or the reason it is undefined)."""
    fact = factor_hessian(phase)
    case = classify_phase(fact, phase.degree)
    damping: Optional[DampingSpec]
    try:
        damping = damping_spec(fact, case, phase.degree)
        damping_error = None
    except UndefinedExponent as e:
        logger.warning(f"No damping exponent for {phase}: {e}")
        damping = None
        damping_error = str(e)
    return {"factorization": fact, "case": case, "damping": damping, "damping_error": damping_error}

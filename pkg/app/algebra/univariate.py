"""Exact univariate polynomials over the rationals, in the variable t."""

from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple, Union

import numpy as np

from app.algebra.rational import format_rational

Scalar = Union[int, Fraction]


class UnivariatePolynomial:
    """Immutable polynomial with ascending-degree Fraction coefficients."""

    __slots__ = ("_coefficients",)

    def __init__(self, coefficients: Iterable[Scalar] = ()):
        values = [Fraction(c) for c in coefficients]
        while values and values[-1] == 0:
            values.pop()
        self._coefficients: Tuple[Fraction, ...] = tuple(values)

    @classmethod
    def constant(cls, value: Scalar) -> "UnivariatePolynomial":
        return cls([value])

    @classmethod
    def t(cls) -> "UnivariatePolynomial":
        return cls([0, 1])

    @classmethod
    def linear_root(cls, root: Scalar) -> "UnivariatePolynomial":
        """The monic factor t - root."""
        return cls([-Fraction(root), 1])

    @property
    def coefficients(self) -> Tuple[Fraction, ...]:
        return self._coefficients

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self._coefficients) - 1

    @property
    def leading(self) -> Fraction:
        return self._coefficients[-1] if self._coefficients else Fraction(0)

    def is_zero(self) -> bool:
        return not self._coefficients

    def is_constant(self) -> bool:
        return self.degree <= 0

    # ------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------
    @staticmethod
    def _coerce(other):
        if isinstance(other, UnivariatePolynomial):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return UnivariatePolynomial([other])
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        size = max(len(self._coefficients), len(other._coefficients))
        a = list(self._coefficients) + [Fraction(0)] * (size - len(self._coefficients))
        b = list(other._coefficients) + [Fraction(0)] * (size - len(other._coefficients))
        return UnivariatePolynomial(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return UnivariatePolynomial(-c for c in self._coefficients)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return UnivariatePolynomial()
        result = [Fraction(0)] * (len(self._coefficients) + len(other._coefficients) - 1)
        for i, a in enumerate(self._coefficients):
            if a == 0:
                continue
            for j, b in enumerate(other._coefficients):
                result[i + j] += a * b
        return UnivariatePolynomial(result)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise ValueError("negative powers are not polynomials")
        result = UnivariatePolynomial([1])
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __divmod__(self, other: "UnivariatePolynomial") -> Tuple["UnivariatePolynomial", "UnivariatePolynomial"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        remainder = list(self._coefficients)
        quotient = [Fraction(0)] * max(len(remainder) - other.degree, 0)
        lead = other.leading
        while len(remainder) - 1 >= other.degree and any(remainder):
            shift = len(remainder) - 1 - other.degree
            factor = remainder[-1] / lead
            quotient[shift] = factor
            for k, c in enumerate(other._coefficients):
                remainder[shift + k] -= factor * c
            remainder.pop()
            while remainder and remainder[-1] == 0:
                remainder.pop()
        return UnivariatePolynomial(quotient), UnivariatePolynomial(remainder)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._coefficients == other._coefficients

    def __hash__(self) -> int:
        return hash(self._coefficients)

    # ------------------------------------------------------------
    # Algebra
    # ------------------------------------------------------------
    def derivative(self) -> "UnivariatePolynomial":
        return UnivariatePolynomial(k * c for k, c in enumerate(self._coefficients) if k > 0)

    def monic(self) -> "UnivariatePolynomial":
        if self.is_zero():
            return self
        lead = self.leading
        return UnivariatePolynomial(c / lead for c in self._coefficients)

    def gcd(self, other: "UnivariatePolynomial") -> "UnivariatePolynomial":
        """Monic greatest common divisor (Euclid over the rationals)."""
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def evaluate(self, t: Scalar) -> Fraction:
        t = Fraction(t)
        value = Fraction(0)
        for c in reversed(self._coefficients):
            value = value * t + c
        return value

    def sign_at(self, t: Scalar) -> int:
        value = self.evaluate(t)
        return (value > 0) - (value < 0)

    def evaluate_float(self, t):
        return np.polynomial.polynomial.polyval(t, [float(c) for c in self._coefficients])

    def cauchy_bound(self) -> Fraction:
        """Strict bound B with every real root in (-B, B)."""
        if self.degree < 1:
            return Fraction(1)
        lead = abs(self.leading)
        return 1 + max(abs(c) / lead for c in self._coefficients[:-1])

    def shift(self, a: Scalar) -> "UnivariatePolynomial":
        """The polynomial t -> self(t + a)."""
        result = UnivariatePolynomial()
        base = UnivariatePolynomial([Fraction(a), 1])
        for c in reversed(self._coefficients):
            result = result * base + c
        return result

    def __str__(self) -> str:
        if not self._coefficients:
            return "0"
        pieces: List[str] = []
        for k in range(self.degree, -1, -1):
            c = self._coefficients[k]
            if c == 0:
                continue
            magnitude = abs(c)
            if k == 0:
                body = format_rational(magnitude)
            else:
                power = "t" if k == 1 else f"t^{k}"
                body = power if magnitude == 1 else f"{format_rational(magnitude)}*{power}"
            if not pieces:
                pieces.append(f"-{body}" if c < 0 else body)
            else:
                pieces.append(f" - {body}" if c < 0 else f" + {body}")
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"UnivariatePolynomial({str(self)!r})"


def product(factors: Sequence[Tuple[UnivariatePolynomial, int]]) -> UnivariatePolynomial:
    """Multiply out Π factor^multiplicity."""
    result = UnivariatePolynomial([1])
    for factor, multiplicity in factors:
        result = result * factor ** multiplicity
    return result

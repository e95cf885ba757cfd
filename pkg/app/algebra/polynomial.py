"""Exact sparse bivariate polynomials over the rationals."""

from fractions import Fraction
from typing import Dict, Iterable, Iterator, Mapping, Optional, Tuple, Union

import numpy as np

from app.algebra.rational import format_rational

Exponent = Tuple[int, int]
Scalar = Union[int, Fraction]


def _graded_lex_key(exponent: Exponent) -> Tuple[int, int]:
    i, j = exponent
    return (-(i + j), -i)


class BivariatePolynomial:
    """Immutable polynomial in x and y with Fraction coefficients.

    Terms map an exponent pair (i, j) for x^i y^j to a nonzero coefficient.
    Zero coefficients are never stored, so equality is term-wise.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Mapping[Exponent, Scalar]] = None):
        cleaned: Dict[Exponent, Fraction] = {}
        for (i, j), coefficient in (terms or {}).items():
            if i < 0 or j < 0:
                raise ValueError(f"negative exponent ({i}, {j})")
            value = Fraction(coefficient)
            if value != 0:
                cleaned[(int(i), int(j))] = value
        self._terms = dict(sorted(cleaned.items(), key=lambda item: _graded_lex_key(item[0])))
        self._hash = None

    # ------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------
    @classmethod
    def zero(cls) -> "BivariatePolynomial":
        return cls()

    @classmethod
    def constant(cls, value: Scalar) -> "BivariatePolynomial":
        return cls({(0, 0): value})

    @classmethod
    def monomial(cls, i: int, j: int, coefficient: Scalar = 1) -> "BivariatePolynomial":
        return cls({(i, j): coefficient})

    @classmethod
    def x(cls) -> "BivariatePolynomial":
        return cls.monomial(1, 0)

    @classmethod
    def y(cls) -> "BivariatePolynomial":
        return cls.monomial(0, 1)

    # ------------------------------------------------------------
    # Accessors
    # ------------------------------------------------------------
    @property
    def terms(self) -> Dict[Exponent, Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Exponent, Fraction]]:
        return iter(self._terms.items())

    def coefficient(self, i: int, j: int) -> Fraction:
        return self._terms.get((i, j), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def total_degree(self) -> Optional[int]:
        if not self._terms:
            return None
        return max(i + j for i, j in self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    # ------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------
    @staticmethod
    def _coerce(other) -> Optional["BivariatePolynomial"]:
        if isinstance(other, BivariatePolynomial):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return BivariatePolynomial.constant(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        result = dict(self._terms)
        for exponent, coefficient in other._terms.items():
            result[exponent] = result.get(exponent, Fraction(0)) + coefficient
        return BivariatePolynomial(result)

    __radd__ = __add__

    def __neg__(self) -> "BivariatePolynomial":
        return BivariatePolynomial({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        result: Dict[Exponent, Fraction] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                key = (i1 + i2, j1 + j2)
                result[key] = result.get(key, Fraction(0)) + c1 * c2
        return BivariatePolynomial(result)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "BivariatePolynomial":
        if exponent < 0:
            raise ValueError("negative powers are not polynomials")
        result = BivariatePolynomial.constant(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    # ------------------------------------------------------------
    # Calculus and transformations
    # ------------------------------------------------------------
    def derivative_x(self) -> "BivariatePolynomial":
        return BivariatePolynomial({(i - 1, j): c * i for (i, j), c in self._terms.items() if i > 0})

    def derivative_y(self) -> "BivariatePolynomial":
        return BivariatePolynomial({(i, j - 1): c * j for (i, j), c in self._terms.items() if j > 0})

    def transpose(self) -> "BivariatePolynomial":
        """Swap the roles of x and y, i.e. P(y, x)."""
        return BivariatePolynomial({(j, i): c for (i, j), c in self._terms.items()})

    def scale(self, factor: Scalar) -> "BivariatePolynomial":
        return BivariatePolynomial({e: c * Fraction(factor) for e, c in self._terms.items()})

    def divide_monomial(self, i: int, j: int) -> "BivariatePolynomial":
        """Exact division by x^i y^j; every term must be divisible."""
        result = {}
        for (a, b), c in self._terms.items():
            if a < i or b < j:
                raise ValueError(f"x^{i}*y^{j} does not divide the term x^{a}*y^{b}")
            result[(a - i, b - j)] = c
        return BivariatePolynomial(result)

    # ------------------------------------------------------------
    # Evaluation
    # ------------------------------------------------------------
    def _rows_by_x_power(self) -> Dict[int, Dict[int, Fraction]]:
        rows: Dict[int, Dict[int, Fraction]] = {}
        for (i, j), c in self._terms.items():
            rows.setdefault(i, {})[j] = c
        return rows

    def evaluate(self, x: Scalar, y: Scalar) -> Fraction:
        """Exact value at (x, y), Horner in y inside Horner in x."""
        if not self._terms:
            return Fraction(0)
        x = Fraction(x)
        y = Fraction(y)
        rows = self._rows_by_x_power()
        value = Fraction(0)
        for i in range(max(rows), -1, -1):
            row = rows.get(i, {})
            inner = Fraction(0)
            if row:
                for j in range(max(row), -1, -1):
                    inner = inner * y + row.get(j, 0)
            value = value * x + inner
        return value

    def evaluate_grid(self, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
        """Float values on the tensor grid xs × ys, shape (len(xs), len(ys))."""
        xs = np.asarray(xs, dtype=float)
        ys = np.asarray(ys, dtype=float)
        out = np.zeros((xs.size, ys.size))
        for (i, j), c in self._terms.items():
            out += float(c) * np.multiply.outer(xs ** i, ys ** j)
        return out

    def evaluate_points(self, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
        """Float values at paired points (xs[k], ys[k]); broadcasting applies."""
        xs = np.asarray(xs, dtype=float)
        ys = np.asarray(ys, dtype=float)
        out = np.zeros(np.broadcast(xs, ys).shape)
        for (i, j), c in self._terms.items():
            out = out + float(c) * xs ** i * ys ** j
        return out

    # ------------------------------------------------------------
    # Printing
    # ------------------------------------------------------------
    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for index, ((i, j), c) in enumerate(self._terms.items()):
            sign = "-" if c < 0 else "+"
            magnitude = abs(c)
            factors = []
            if i:
                factors.append("x" if i == 1 else f"x^{i}")
            if j:
                factors.append("y" if j == 1 else f"y^{j}")
            if not factors:
                body = format_rational(magnitude)
            elif magnitude == 1:
                body = "*".join(factors)
            else:
                body = "*".join([format_rational(magnitude)] + factors)
            if index == 0:
                pieces.append(body if sign == "+" else f"-{body}")
            else:
                pieces.append(f" {sign} {body}")
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"BivariatePolynomial({str(self)!r})"


def from_coefficients(items: Iterable[Tuple[Exponent, Scalar]]) -> BivariatePolynomial:
    """Build a polynomial from (exponent, coefficient) pairs, summing repeats."""
    accumulated: Dict[Exponent, Fraction] = {}
    for exponent, coefficient in items:
        accumulated[exponent] = accumulated.get(exponent, Fraction(0)) + Fraction(coefficient)
    return BivariatePolynomial(accumulated)

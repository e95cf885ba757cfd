"""Recursive-descent parser for the ASCII phase grammar.

    expr   := [sign] term (sign term)*
    term   := [coeff '*'] factor ('*' factor)*  |  coeff
    factor := ('x' | 'y') ['^' posint]
    coeff  := int | int '/' posint

Whitespace is ignored. A leading sign and bare-coefficient terms are accepted
so that every canonical print parses back.
"""

import logging
from fractions import Fraction
from typing import Dict, Tuple

from app.algebra.polynomial import BivariatePolynomial
from app.errors import PhaseSyntaxError

logger = logging.getLogger(__name__)


def _is_digit(char: str) -> bool:
    """ASCII digits only; str.isdigit also admits superscripts."""
    return len(char) == 1 and "0" <= char <= "9"


class _Cursor:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self._skip()

    def _skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self) -> str:
        char = self.peek()
        self.pos += 1
        self._skip()
        return char

    def expect(self, char: str):
        if self.peek() != char:
            found = self.peek() or "end of input"
            raise PhaseSyntaxError(f"expected '{char}', found '{found}'", self.pos, self.text)
        self.take()

    def integer(self) -> int:
        start = self.pos
        digits = ""
        while self.pos < len(self.text) and _is_digit(self.text[self.pos]):
            digits += self.text[self.pos]
            self.pos += 1
        if not digits:
            found = self.peek() or "end of input"
            raise PhaseSyntaxError(f"expected an integer, found '{found}'", start, self.text)
        self._skip()
        return int(digits)


def _parse_factor(cursor: _Cursor) -> Tuple[int, int]:
    variable_pos = cursor.pos
    variable = cursor.take()
    if variable not in ("x", "y"):
        raise PhaseSyntaxError(f"expected 'x' or 'y', found '{variable or 'end of input'}'", variable_pos, cursor.text)
    power = 1
    if cursor.peek() == "^":
        cursor.take()
        power_pos = cursor.pos
        power = cursor.integer()
        if power < 1:
            raise PhaseSyntaxError("exponent must be a positive integer", power_pos, cursor.text)
    return (power, 0) if variable == "x" else (0, power)


def _parse_term(cursor: _Cursor) -> Tuple[Tuple[int, int], Fraction]:
    coefficient = Fraction(1)
    i = j = 0
    if _is_digit(cursor.peek()):
        numerator = cursor.integer()
        denominator = 1
        if cursor.peek() == "/":
            cursor.take()
            denominator_pos = cursor.pos
            denominator = cursor.integer()
            if denominator == 0:
                raise PhaseSyntaxError("zero denominator", denominator_pos, cursor.text)
        coefficient = Fraction(numerator, denominator)
        if cursor.peek() != "*":
            return (0, 0), coefficient
        cursor.take()
    di, dj = _parse_factor(cursor)
    i, j = i + di, j + dj
    while cursor.peek() == "*":
        cursor.take()
        di, dj = _parse_factor(cursor)
        i, j = i + di, j + dj
    return (i, j), coefficient


def parse_phase(text: str) -> BivariatePolynomial:
    """Parse phase text into an exact polynomial.

    Args:
        text: Input such as "3/2*x^3*y - y^4".

    Returns:
        The polynomial with exact coefficients; cancelling terms vanish.

    Raises:
        PhaseSyntaxError: with the 0-based position of the offending character.
    """
    cursor = _Cursor(text)
    if not cursor.peek():
        raise PhaseSyntaxError("empty phase", cursor.pos, text)
    terms: Dict[Tuple[int, int], Fraction] = {}
    sign = 1
    if cursor.peek() in "+-":
        sign = -1 if cursor.take() == "-" else 1
    while True:
        exponent, coefficient = _parse_term(cursor)
        terms[exponent] = terms.get(exponent, Fraction(0)) + sign * coefficient
        if not cursor.peek():
            break
        if cursor.peek() not in "+-":
            raise PhaseSyntaxError(f"unexpected character '{cursor.peek()}'", cursor.pos, text)
        sign = -1 if cursor.take() == "-" else 1
    polynomial = BivariatePolynomial(terms)
    logger.debug(f"Parsed phase {text!r} -> {polynomial}")
    return polynomial

"""Exact rational parsing and rendering.

Every numeric quantity that feeds a verdict is an int or a Fraction; floats
never enter a verification path.  Rationals are rendered "p/q", with the
denominator suppressed when it is 1.
"""

from __future__ import annotations

from fractions import Fraction


def format_rational(x: Fraction | int) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    if "/" in text:
        num, _, den = text.partition("/")
        return Fraction(int(num), int(den))
    return Fraction(int(text))

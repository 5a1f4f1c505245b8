"""Exact reduced rationals and bounded-denominator enumeration.

Values are stdlib fractions.Fraction throughout: arbitrary precision, always
stored reduced with a positive denominator, exact arithmetic and comparison.
The helpers here pin the textual form "num/den" used by the CLI and the CSV
emitters, and enumerate the reduced fractions that serve as plot axes.
"""
from __future__ import annotations

from fractions import Fraction

from .errors import ZeroDenominator

__all__ = ["Rational", "reduce", "parse_rational", "format_rational", "farey"]

Rational = Fraction


def reduce(num: int, den: int) -> Fraction:
    """Return num/den in canonical reduced form with positive denominator."""
    if den == 0:
        raise ZeroDenominator(f"zero denominator in {num}/0")
    return Fraction(num, den)


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" or a bare integer string into a reduced Fraction."""
    body = text.strip()
    num_s, slash, den_s = body.partition("/")
    try:
        num = int(num_s)
        den = int(den_s) if slash else 1
    except ValueError:
        raise ValueError(f"not a rational: {text!r}") from None
    return reduce(num, den)


def format_rational(x: Fraction) -> str:
    """Canonical textual form, always "num/den" (zero prints as "0/1")."""
    return f"{x.numerator}/{x.denominator}"


def farey(max_q: int) -> list[Fraction]:
    """All reduced p/q with 0 <= p/q < 1 and q <= max_q, increasing.

    Mediant walk over the Farey sequence; stops before 1/1.
    """
    if max_q < 1:
        raise ValueError("max_q must be >= 1")
    out = [Fraction(0, 1)]
    a, b, c, d = 0, 1, 1, max_q
    while c < d:
        out.append(Fraction(c, d))
        k = (max_q + b) // d
        a, b, c, d = c, d, k * c - a, k * d - b
    return out

"""Parsing and formatting of exact rationals as "p/q" strings.

All JSON I/O in this package carries rationals as strings so that no
precision is ever lost.  Integers may be abbreviated to "n".
"""

from fractions import Fraction


def parse_rational(s) -> Fraction:
    """Parse "p/q", "n", or an int into a Fraction."""
    if isinstance(s, Fraction):
        return s
    if isinstance(s, int):
        return Fraction(s)
    if isinstance(s, str):
        return Fraction(s.strip())
    raise ValueError(f"not a rational: {s!r}")


def format_rational(q) -> str:
    """Format a Fraction (or int) as "p/q", shortened to "n" for integers."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational_list(s: str) -> list[Fraction]:
    """Parse a comma-separated list such as "1/2,1/3"."""
    s = s.strip()
    if not s:
        return []
    return [parse_rational(tok) for tok in s.split(",")]

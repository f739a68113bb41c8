"""Exact rational scalars used for every operator entry.

gmpy2's mpq is preferred (C implementation, several times faster on the
multi-hundred-bit entries that Casimir products produce); stdlib
fractions.Fraction is a drop-in fallback.  Both keep values canonical:
positive denominator, gcd(numerator, denominator) = 1, and both raise
ZeroDivisionError on a zero denominator.
"""

from __future__ import annotations

import re

try:
    from gmpy2 import mpq as Rational

    BACKEND = "gmpy2"
except ImportError:  # pragma: no cover - exercised only without gmpy2
    from fractions import Fraction as Rational

    BACKEND = "fractions"

ZERO = Rational(0)
ONE = Rational(1)

_LITERAL = re.compile(r"^[+-]?[0-9]+(/[0-9]+)?$")


def rational(num, den=1):
    """Exact rational num/den in canonical form."""
    return Rational(num, den)


def inverse(a):
    """Multiplicative inverse; ZeroDivisionError at zero."""
    return ONE / a


def power(a, e):
    """a**e for an integer exponent (negative e needs a != 0)."""
    if e < 0 and not a:
        raise ZeroDivisionError("zero has no negative powers")
    return a ** e


def parse(text):
    """Parse "a" or "a/b" (optional sign on the numerator only).

    Anything outside that grammar is a ValueError; a zero denominator
    is a ZeroDivisionError.
    """
    if not isinstance(text, str) or not _LITERAL.match(text):
        raise ValueError(f"not a rational literal: {text!r}")
    return Rational(text.lstrip("+"))


def to_text(a) -> str:
    """Canonical text form, parse(to_text(a)) == a."""
    if a.denominator == 1:
        return str(a.numerator)
    return f"{a.numerator}/{a.denominator}"

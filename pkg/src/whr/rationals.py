"""Exact rational arithmetic.

All exact coefficients in the package are reduced rationals with positive
denominator.  gmpy2.mpq is used when available (same canonical invariants,
much faster); fractions.Fraction otherwise.  Code elsewhere must go through
Rat()/format_rat()/parse_rat() so the two backends stay interchangeable.
"""

from __future__ import annotations

from fractions import Fraction

try:
    from gmpy2 import mpq as _mpq

    _BACKEND = "gmpy2"

    def Rat(a=0, b=None):
        if b is None:
            if isinstance(a, str):
                return _mpq(Fraction(a))
            return _mpq(a)
        return _mpq(a, b)

except ImportError:  # pragma: no cover
    _BACKEND = "fractions"

    def Rat(a=0, b=None):
        if b is None:
            return Fraction(a)
        return Fraction(a, b)


ZERO = Rat(0)
ONE = Rat(1)


def is_rat(x) -> bool:
    return isinstance(x, type(ONE)) or isinstance(x, Fraction) or isinstance(x, int)


def numer(q):
    return int(q.numerator)


def denom(q):
    return int(q.denominator)


def format_rat(q) -> str:
    """Canonical string form: "p/q", or "p" when the denominator is 1."""
    n, d = numer(q), denom(q)
    return str(n) if d == 1 else "%d/%d" % (n, d)


def parse_rat(s: str):
    """Parse "p/q", "p" or a decimal literal like "0.5" into a Rat."""
    return Rat(Fraction(s.strip()))

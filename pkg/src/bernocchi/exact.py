"""Exact scalar arithmetic: arbitrary-precision integers and reduced rationals.

Integers are plain Python ``int`` (unbounded, exact).  Rationals are
``fractions.Fraction``, which is always stored reduced with a positive
denominator, so structural equality is mathematical equality.
"""
from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial as _factorial

__all__ = [
    "rat",
    "format_rational",
    "parse_rational",
    "factorial",
    "binomial",
    "int_pow",
]

_RATIONAL_RE = re.compile(r"^-?\d+(/\d+)?$")


def rat(num: int, den: int = 1) -> Fraction:
    """Reduced fraction num/den with positive denominator.

    rat(a, b) == rat(k*a, k*b) for any nonzero k.
    """
    if den == 0:
        raise ValueError("rational with zero denominator")
    return Fraction(num, den)


def format_rational(value: Fraction) -> str:
    """Serialize as "p/q" (q > 0, gcd(p,q)=1), or plain "p" when q == 1."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    """Inverse of :func:`format_rational`; rejects anything but "p" or "p/q"."""
    if not _RATIONAL_RE.match(text):
        raise ValueError(f"not a rational literal: {text!r}")
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise ValueError(f"zero denominator: {text!r}") from None


@lru_cache(maxsize=None)
def factorial(n: int) -> int:
    """n! with factorial(0) == 1."""
    if n < 0:
        raise ValueError("factorial of negative integer")
    return _factorial(n)


@lru_cache(maxsize=None)
def binomial(n: int, k: int) -> int:
    """C(n, k); zero when k > n, by convention."""
    if n < 0 or k < 0:
        raise ValueError("binomial arguments must be nonnegative")
    return comb(n, k)


def int_pow(base: int, exp: int) -> int:
    """base**exp with the convention int_pow(0, 0) == 1."""
    if exp < 0:
        raise ValueError("negative exponent")
    return base**exp

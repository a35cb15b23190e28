"""Closed-form Bernoulli and Genocchi number formulas.

Every formula here returns an exact rational.  The ground truth is
:func:`bernoulli_series_oracle`, the classical recurrence obtained from the
generating function x/(e^x - 1); it involves no Stirling numbers and shares
no code path with the formulas it is used to check.

Formula identifiers form a closed set (:class:`FormulaId`).  All are
expected to agree with the oracle except TANGENT_DOUBLE_14_AS_PRINTED,
which reproduces a published double sum verbatim and is flagged untrusted
because its value demonstrably differs from the consensus (1/3 against
B_2 = 1/6 already at index 2).
"""
from __future__ import annotations

import enum
import threading
from dataclasses import dataclass
from fractions import Fraction

from .exact import binomial, factorial, int_pow
from .polynomial import interpolate
from .stirling import StirlingTriangle, shared_triangle

__all__ = [
    "FormulaId",
    "FaulhaberTable",
    "B0",
    "B1",
    "bernoulli_series_oracle",
    "bernoulli_higgins",
    "bernoulli_stirling_single",
    "bernoulli_gould_double",
    "bernoulli_stirling_ratio",
    "faulhaber_coefficients",
    "bernoulli_faulhaber_recursion",
    "bernoulli_tangent_double_as_printed",
    "bernoulli_double_stirling",
    "genocchi_theorem",
    "genocchi_from_bernoulli",
    "bernoulli_from_genocchi",
    "euler_at_zero",
    "is_applicable",
    "rows_needed",
    "formula_value",
    "formula_bernoulli_value",
]

# Named domain constants, used throughout the tests.
B0 = Fraction(1)
B1 = Fraction(-1, 2)


class FormulaId(enum.Enum):
    """Closed identifier set for the formula registry (CLI names, verbatim)."""

    SERIES_ORACLE = "SERIES_ORACLE"
    HIGGINS_9 = "HIGGINS_9"
    STIRLING_SINGLE_10 = "STIRLING_SINGLE_10"
    GOULD_DOUBLE_11 = "GOULD_DOUBLE_11"
    STIRLING_RATIO_12 = "STIRLING_RATIO_12"
    FAULHABER_RECURSION_13 = "FAULHABER_RECURSION_13"
    TANGENT_DOUBLE_14_AS_PRINTED = "TANGENT_DOUBLE_14_AS_PRINTED"
    DOUBLE_STIRLING_15 = "DOUBLE_STIRLING_15"
    GENOCCHI_THEOREM_16 = "GENOCCHI_THEOREM_16"

    @property
    def trusted(self) -> bool:
        return self is not FormulaId.TANGENT_DOUBLE_14_AS_PRINTED

    @property
    def even_only(self) -> bool:
        return self in _EVEN_ONLY


_EVEN_ONLY = {
    FormulaId.FAULHABER_RECURSION_13,
    FormulaId.TANGENT_DOUBLE_14_AS_PRINTED,
    FormulaId.DOUBLE_STIRLING_15,
}

# B_0, B_1, then grown on demand; guarded so concurrent growth stays consistent.
_oracle_cache: list[Fraction] = [B0, B1]
_oracle_lock = threading.Lock()


def bernoulli_series_oracle(n: int) -> Fraction:
    """B_n from the generating-function recurrence sum_{j<=m} C(m+1,j) B_j = 0.

    Independent ground truth: uses no Stirling numbers and none of the
    closed-form machinery below.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    with _oracle_lock:
        while len(_oracle_cache) <= n:
            m = len(_oracle_cache)
            acc = sum(binomial(m + 1, j) * _oracle_cache[j] for j in range(m))
            _oracle_cache.append(Fraction(-acc, m + 1))
        return _oracle_cache[n]


def bernoulli_higgins(n: int) -> Fraction:
    """B_n = sum_{k=0..n} 1/(k+1) * sum_{j=0..k} (-1)^j C(k,j) j^n, with 0^0 = 1."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    total = Fraction(0)
    for k in range(n + 1):
        inner = sum((-1) ** j * binomial(k, j) * int_pow(j, n) for j in range(k + 1))
        total += Fraction(inner, k + 1)
    return total


def bernoulli_stirling_single(n: int, triangle: StirlingTriangle | None = None) -> Fraction:
    """B_n = sum_{k=0..n} (-1)^k k!/(k+1) S(n,k)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    t = triangle if triangle is not None else shared_triangle(n)
    return sum(
        (Fraction((-1) ** k * factorial(k), k + 1) * t.value(n, k) for k in range(n + 1)),
        Fraction(0),
    )


def bernoulli_gould_double(n: int) -> Fraction:
    """B_n by the double sum
    sum_{j=0..n} (-1)^j C(n+1,j+1) n!/(n+j)! sum_{k=0..j} (-1)^(j-k) C(j,k) k^(n+j),
    with 0^0 = 1."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    total = Fraction(0)
    for j in range(n + 1):
        inner = sum(
            (-1) ** (j - k) * binomial(j, k) * int_pow(k, n + j) for k in range(j + 1)
        )
        total += (-1) ** j * binomial(n + 1, j + 1) * Fraction(factorial(n), factorial(n + j)) * inner
    return total


def bernoulli_stirling_ratio(n: int, triangle: StirlingTriangle | None = None) -> Fraction:
    """B_n = sum_{i=0..n} (-1)^i C(n+1,i+1)/C(n+i,i) * S(n+i,i); needs rows up to 2n."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    t = triangle if triangle is not None else shared_triangle(2 * n)
    return sum(
        (
            (-1) ** i * Fraction(binomial(n + 1, i + 1), binomial(n + i, i)) * t.value(n + i, i)
            for i in range(n + 1)
        ),
        Fraction(0),
    )


@dataclass(frozen=True)
class FaulhaberTable:
    """Coefficients A_0..A_{p+1} with sum_{m=1..n} m^p = sum_m A_m n^m for all n >= 0."""

    exponent: int
    coefficients: tuple[Fraction, ...]

    def coefficient(self, m: int) -> Fraction:
        return self.coefficients[m]

    def evaluate(self, n: int) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * n + c
        return acc


def faulhaber_coefficients(p: int) -> FaulhaberTable:
    """Power-sum polynomial coefficients for exponent p.

    Obtained by exact interpolation of the degree-(p+1) polynomial through
    the p+2 points (n, sum_{m=1..n} m^p) for n = 0..p+1.
    """
    if p < 0:
        raise ValueError("exponent must be nonnegative")
    points = []
    running = Fraction(0)
    for n in range(p + 2):
        if n:
            running += int_pow(n, p)
        points.append((n, running))
    poly = interpolate(points)
    coeffs = tuple(poly.coefficient(m) for m in range(p + 2))
    return FaulhaberTable(p, coeffs)


def bernoulli_faulhaber_recursion(k: int) -> Fraction:
    """B_{2k} = 1/2 - 1/(2k+1) - 2k * sum_{i=1..k-1} A_{2(k-i)}/(2(k-i)+1).

    The A_m are the power-sum coefficients for exponent 2k-1.  That exponent
    choice is a resolved ambiguity: it reproduces B_2 = 1/6, B_4 = -1/30 and
    B_6 = 1/42, while exponent 2k gives 3/10 at k = 2 and is rejected.
    """
    if k < 1:
        raise ValueError("k must be positive")
    table = faulhaber_coefficients(2 * k - 1)
    tail = sum(
        (table.coefficient(2 * (k - i)) / (2 * (k - i) + 1) for i in range(1, k)),
        Fraction(0),
    )
    return Fraction(1, 2) - Fraction(1, 2 * k + 1) - 2 * k * tail


def bernoulli_tangent_double_as_printed(k: int) -> Fraction:
    """The printed double sum
    (-1)^(k-1) k / (2^(2(k-1)) (2^(2k)-1)) *
        sum_{i=0..k-1} sum_{l=0..k-i-1} (-1)^(i+l) C(2k,l) (k-i-l)^(2k-1),
    reproduced verbatim.

    This is NOT necessarily B_{2k}: it yields 1/3 at k=1 where B_2 = 1/6.
    The harness classifies the disagreement; we never silently repair a
    printed formula.
    """
    if k < 1:
        raise ValueError("k must be positive")
    inner = sum(
        (-1) ** (i + l) * binomial(2 * k, l) * int_pow(k - i - l, 2 * k - 1)
        for i in range(k)
        for l in range(k - i)
    )
    prefactor = Fraction((-1) ** (k - 1) * k, (1 << (2 * (k - 1))) * ((1 << (2 * k)) - 1))
    return prefactor * inner


def bernoulli_double_stirling(k: int, triangle: StirlingTriangle | None = None) -> Fraction:
    """B_{2k} = 1 + sum_{m=1..2k-1} S(2k+1,m+1) S(2k,2k-m) / C(2k,m)
    - 2k/(2k+1) * sum_{m=1..2k} S(2k,m) S(2k+1,2k-m+1) / C(2k,m-1);
    needs rows up to 2k+1."""
    if k < 1:
        raise ValueError("k must be positive")
    t = triangle if triangle is not None else shared_triangle(2 * k + 1)
    n2 = 2 * k
    first = sum(
        (
            Fraction(t.value(n2 + 1, m + 1) * t.value(n2, n2 - m), binomial(n2, m))
            for m in range(1, n2)
        ),
        Fraction(0),
    )
    second = sum(
        (
            Fraction(t.value(n2, m) * t.value(n2 + 1, n2 - m + 1), binomial(n2, m - 1))
            for m in range(1, n2 + 1)
        ),
        Fraction(0),
    )
    return 1 + first - Fraction(n2, n2 + 1) * second


def genocchi_theorem(k: int, triangle: StirlingTriangle | None = None) -> Fraction:
    """G_k = (-1)^k k sum_{m=1..k} (-1)^m (m-1)!/2^(m-1) S(k,m).

    The result always reduces to an integer; a non-integer outcome signals
    an implementation bug and raises.
    """
    if k < 1:
        raise ValueError("k must be positive")
    t = triangle if triangle is not None else shared_triangle(k)
    total = sum(
        (
            (-1) ** m * Fraction(factorial(m - 1), 1 << (m - 1)) * t.value(k, m)
            for m in range(1, k + 1)
        ),
        Fraction(0),
    )
    value = (-1) ** k * k * total
    if value.denominator != 1:
        raise ArithmeticError(f"G_{k} came out non-integer: {value}")
    return value


def genocchi_from_bernoulli(n: int, b: Fraction) -> Fraction:
    """G_n = 2(1 - 2^n) B_n for n >= 1."""
    if n < 1:
        raise ValueError("n must be positive")
    return 2 * (1 - (1 << n)) * b


def bernoulli_from_genocchi(n: int, g: Fraction) -> Fraction:
    """B_n = G_n / (2(1 - 2^n)) for n >= 1 (B_0 is the constant 1, defined separately)."""
    if n < 1:
        raise ValueError("n must be positive (the factor 1 - 2^n vanishes at n = 0)")
    return Fraction(g) / (2 * (1 - (1 << n)))


def euler_at_zero(n: int) -> Fraction:
    """Euler-polynomial value E_{2n-1}(0) = G_{2n} / (2n) for n >= 1."""
    if n < 1:
        raise ValueError("n must be positive")
    return genocchi_theorem(2 * n) / (2 * n)


def is_applicable(formula: FormulaId, n: int) -> bool:
    """Whether the formula is defined at index n (no reinterpreted indices)."""
    if n < 0:
        return False
    if formula in _EVEN_ONLY:
        return n >= 2 and n % 2 == 0
    if formula is FormulaId.GENOCCHI_THEOREM_16:
        return n >= 1
    return True


def rows_needed(formula: FormulaId, n: int) -> int:
    """Highest Stirling row the formula touches at index n."""
    if formula is FormulaId.STIRLING_RATIO_12:
        return 2 * n
    if formula is FormulaId.DOUBLE_STIRLING_15:
        return n + 1
    if formula in (FormulaId.STIRLING_SINGLE_10, FormulaId.GENOCCHI_THEOREM_16):
        return n
    return 0


def formula_value(formula: FormulaId, n: int, triangle: StirlingTriangle | None = None) -> Fraction:
    """The formula's own value at index n: B_n for the Bernoulli formulas
    (index n = 2k for the even-only ones), G_n for GENOCCHI_THEOREM_16."""
    if not is_applicable(formula, n):
        raise ValueError(f"{formula.value} is not applicable at n={n}")
    if formula is FormulaId.SERIES_ORACLE:
        return bernoulli_series_oracle(n)
    if formula is FormulaId.HIGGINS_9:
        return bernoulli_higgins(n)
    if formula is FormulaId.STIRLING_SINGLE_10:
        return bernoulli_stirling_single(n, triangle)
    if formula is FormulaId.GOULD_DOUBLE_11:
        return bernoulli_gould_double(n)
    if formula is FormulaId.STIRLING_RATIO_12:
        return bernoulli_stirling_ratio(n, triangle)
    if formula is FormulaId.FAULHABER_RECURSION_13:
        return bernoulli_faulhaber_recursion(n // 2)
    if formula is FormulaId.TANGENT_DOUBLE_14_AS_PRINTED:
        return bernoulli_tangent_double_as_printed(n // 2)
    if formula is FormulaId.DOUBLE_STIRLING_15:
        return bernoulli_double_stirling(n // 2, triangle)
    if formula is FormulaId.GENOCCHI_THEOREM_16:
        return genocchi_theorem(n, triangle)
    raise ValueError(f"unknown formula {formula!r}")


def formula_bernoulli_value(
    formula: FormulaId, n: int, triangle: StirlingTriangle | None = None
) -> Fraction:
    """The formula's value on the Bernoulli scale, for cross-formula comparison.

    Identical to :func:`formula_value` except that the Genocchi formula is
    carried over to B_n through B_n = G_n / (2(1-2^n)).
    """
    value = formula_value(formula, n, triangle)
    if formula is FormulaId.GENOCCHI_THEOREM_16:
        return bernoulli_from_genocchi(n, value)
    return value

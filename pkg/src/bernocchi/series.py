"""Truncated formal power series with exact rational coefficients.

A series of order N keeps exactly the coefficients of x^0 .. x^N;
multiplication works "mod x^(N+1)" and silently discards higher terms.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .exact import factorial

__all__ = ["TruncatedSeries", "exp_series"]


class TruncatedSeries:
    __slots__ = ("coefficients",)

    def __init__(self, order: int, coefficients: Iterable[Fraction | int] = ()):
        if order < 0:
            raise ValueError("order must be nonnegative")
        coeffs = [Fraction(c) for c in coefficients]
        if len(coeffs) > order + 1:
            raise ValueError("more coefficients than the order admits")
        coeffs.extend([Fraction(0)] * (order + 1 - len(coeffs)))
        object.__setattr__(self, "coefficients", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    @classmethod
    def constant(cls, order: int, value: Fraction | int) -> "TruncatedSeries":
        return cls(order, (value,))

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def coefficient(self, j: int) -> Fraction:
        return self.coefficients[j]

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self) -> int:
        return hash(self.coefficients)

    def _check_order(self, other: "TruncatedSeries") -> None:
        if self.order != other.order:
            raise ValueError(
                f"series order mismatch: {self.order} != {other.order}"
            )

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check_order(other)
        return TruncatedSeries(
            self.order, (a + b for a, b in zip(self.coefficients, other.coefficients))
        )

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check_order(other)
        return TruncatedSeries(
            self.order, (a - b for a, b in zip(self.coefficients, other.coefficients))
        )

    def __mul__(self, other) -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return TruncatedSeries(self.order, (Fraction(other) * c for c in self.coefficients))
        self._check_order(other)
        n = self.order
        prod = [Fraction(0)] * (n + 1)
        for i, a in enumerate(self.coefficients):
            if a == 0:
                continue
            for j in range(n + 1 - i):
                b = other.coefficients[j]
                if b:
                    prod[i + j] += a * b
        return TruncatedSeries(n, prod)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "TruncatedSeries":
        if k < 0:
            raise ValueError("negative series power")
        result = TruncatedSeries.constant(self.order, 1)
        for _ in range(k):
            result = result * self
        return result

    def __repr__(self) -> str:
        return f"TruncatedSeries({self.order}, {list(self.coefficients)!r})"


def exp_series(order: int) -> TruncatedSeries:
    """exp(x) truncated at the given order: coefficients 1/j!."""
    return TruncatedSeries(order, (Fraction(1, factorial(j)) for j in range(order + 1)))

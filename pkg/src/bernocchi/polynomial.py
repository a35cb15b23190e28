"""Dense univariate polynomials over exact rationals."""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

__all__ = ["RationalPolynomial", "X", "interpolate"]


class RationalPolynomial:
    """Immutable polynomial; coefficient i is the coefficient of x**i.

    Trailing zero coefficients are trimmed, so the highest stored
    coefficient is nonzero and equality is structural.  The zero
    polynomial stores no coefficients and has degree ``None``.
    """

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Iterable[Fraction | int] = ()):
        coeffs = [Fraction(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("RationalPolynomial is immutable")

    @property
    def degree(self) -> int | None:
        if not self.coefficients:
            return None
        return len(self.coefficients) - 1

    def coefficient(self, i: int) -> Fraction:
        if 0 <= i < len(self.coefficients):
            return self.coefficients[i]
        return Fraction(0)

    def is_zero(self) -> bool:
        return not self.coefficients

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalPolynomial):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self) -> int:
        return hash(self.coefficients)

    def __add__(self, other: "RationalPolynomial") -> "RationalPolynomial":
        a, b = self.coefficients, other.coefficients
        if len(a) < len(b):
            a, b = b, a
        summed = list(a)
        for i, c in enumerate(b):
            summed[i] += c
        return RationalPolynomial(summed)

    def __neg__(self) -> "RationalPolynomial":
        return RationalPolynomial(-c for c in self.coefficients)

    def __sub__(self, other: "RationalPolynomial") -> "RationalPolynomial":
        return self + (-other)

    def __mul__(self, other) -> "RationalPolynomial":
        if isinstance(other, RationalPolynomial):
            if not self.coefficients or not other.coefficients:
                return RationalPolynomial()
            prod = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
            for i, a in enumerate(self.coefficients):
                for j, b in enumerate(other.coefficients):
                    prod[i + j] += a * b
            return RationalPolynomial(prod)
        return RationalPolynomial(Fraction(other) * c for c in self.coefficients)

    __rmul__ = __mul__

    def derivative(self) -> "RationalPolynomial":
        """Formal derivative; drops the degree by one for nonconstant input."""
        return RationalPolynomial(i * c for i, c in enumerate(self.coefficients) if i)

    def __call__(self, v: Fraction | int) -> Fraction:
        """Exact Horner evaluation at v."""
        v = Fraction(v)
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * v + c
        return acc

    def __repr__(self) -> str:
        return f"RationalPolynomial({list(self.coefficients)!r})"

    def __str__(self) -> str:
        if not self.coefficients:
            return "0"
        parts = []
        for i, c in enumerate(self.coefficients):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append(f"{c}*x")
            else:
                parts.append(f"{c}*x^{i}")
        return " + ".join(parts)


X = RationalPolynomial((0, 1))


def interpolate(points: Sequence[tuple[Fraction | int, Fraction | int]]) -> RationalPolynomial:
    """Unique polynomial of degree < len(points) through the given points.

    Newton divided differences; the abscissas must be pairwise distinct.
    """
    xs = [Fraction(x) for x, _ in points]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation abscissas must be distinct")
    newton = [Fraction(y) for _, y in points]
    n = len(xs)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            newton[i] = (newton[i] - newton[i - 1]) / (xs[i] - xs[i - j])
    result = RationalPolynomial()
    basis = RationalPolynomial((1,))
    for i in range(n):
        result = result + newton[i] * basis
        basis = basis * RationalPolynomial((-xs[i], 1))
    return result

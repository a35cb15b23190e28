"""Stirling numbers of the second kind by three independent routes.

S(n, k) counts the partitions of an n-element set into k nonempty blocks.
The workhorse is the two-term recurrence S(n,k) = k*S(n-1,k) + S(n-1,k-1);
the alternating binomial sum and the coefficient extraction from
(e^x - 1)^k / k! are verification routes, and a brute-force partition
enumerator serves as a test-scale oracle.

Conventions outside the classical range: S(0,0) = 1, S(n,0) = 0 for n >= 1,
and S(n,k) = 0 for k > n.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Iterator

from .exact import binomial, factorial, int_pow
from .series import TruncatedSeries, exp_series

__all__ = [
    "StirlingTriangle",
    "TriangleFileError",
    "TriangleFormatError",
    "TriangleVersionError",
    "TriangleInvariantError",
    "triangle_build",
    "shared_triangle",
    "stirling_explicit",
    "stirling_via_series",
    "stirling_enumerate",
    "set_partitions",
    "triangle_save",
    "triangle_load",
]

ENUMERATION_LIMIT = 10
_FILE_MAGIC = "STIRLING2"
_FILE_VERSION = "v1"


class TriangleFileError(Exception):
    """Base class for triangle cache-file problems."""


class TriangleFormatError(TriangleFileError):
    """File is not a triangle cache at all, or is truncated/garbled."""


class TriangleVersionError(TriangleFileError):
    """File declares an unsupported cache version."""


class TriangleInvariantError(TriangleFileError):
    """File parsed, but its contents violate a triangle invariant."""


@dataclass(frozen=True)
class StirlingTriangle:
    """Rows S(n, 0..n) for n = 0..max_n; immutable once built."""

    max_n: int
    rows: tuple[tuple[int, ...], ...]

    def value(self, n: int, k: int) -> int:
        if n < 0 or k < 0:
            raise ValueError("indices must be nonnegative")
        if n > self.max_n:
            raise ValueError(f"triangle holds rows up to {self.max_n}, row {n} requested")
        if k > n:
            return 0
        return self.rows[n][k]

    def row(self, n: int) -> tuple[int, ...]:
        if n > self.max_n:
            raise ValueError(f"triangle holds rows up to {self.max_n}, row {n} requested")
        return self.rows[n]


def _next_row(prev: tuple[int, ...]) -> tuple[int, ...]:
    n = len(prev)
    row = [0] * (n + 1)
    for k in range(1, n):
        row[k] = k * prev[k] + prev[k - 1]
    row[n] = prev[n - 1]
    return tuple(row)


def triangle_build(max_n: int) -> StirlingTriangle:
    """Build rows 0..max_n with the two-term recurrence."""
    if max_n < 0:
        raise ValueError("max_n must be nonnegative")
    rows = [(1,)]
    for _ in range(max_n):
        rows.append(_next_row(rows[-1]))
    return StirlingTriangle(max_n, tuple(rows))


# Session-wide row cache: formulas reuse large rows heavily, and extending
# the triangle never changes already-computed entries.
_shared_rows: list[tuple[int, ...]] = [(1,)]
_shared_lock = threading.Lock()


def shared_triangle(max_n: int) -> StirlingTriangle:
    """Snapshot of the session triangle, grown to at least max_n rows."""
    with _shared_lock:
        while len(_shared_rows) <= max_n:
            _shared_rows.append(_next_row(_shared_rows[-1]))
        return StirlingTriangle(max_n, tuple(_shared_rows[: max_n + 1]))


def stirling_explicit(k: int, m: int) -> int:
    """S(k, m) by the alternating binomial sum (1/m!) * sum_{l=1..m} (-1)^(m-l) C(m,l) l^k."""
    if k < 0 or m < 0:
        raise ValueError("indices must be nonnegative")
    if m == 0:
        return 1 if k == 0 else 0
    if m > k:
        return 0
    total = sum((-1) ** (m - l) * binomial(m, l) * int_pow(l, k) for l in range(1, m + 1))
    quotient, remainder = divmod(total, factorial(m))
    if remainder:
        raise ArithmeticError(f"sum for S({k},{m}) not divisible by {m}!")
    return quotient


@lru_cache(maxsize=None)
def _expm1_power(k: int, order: int) -> TruncatedSeries:
    if k == 0:
        return TruncatedSeries.constant(order, 1)
    base = exp_series(order) - TruncatedSeries.constant(order, 1)
    return _expm1_power(k - 1, order) * base


def stirling_via_series(n: int, k: int, order: int | None = None) -> int:
    """S(n, k) as n! times the x^n coefficient of (e^x - 1)^k / k!.

    The series is truncated at `order` (defaults to n); an explicit order
    below n cannot hold the requested coefficient and is rejected.
    """
    if n < 0 or k < 1:
        raise ValueError("requires n >= 0 and k >= 1")
    if order is None:
        order = n
    if order < n:
        raise ValueError(f"series order {order} too small for coefficient {n}")
    coeff = _expm1_power(k, order).coefficient(n)
    value = coeff * factorial(n) / factorial(k)
    if value.denominator != 1:
        raise ArithmeticError(f"series route for S({n},{k}) gave non-integer {value}")
    return value.numerator


def set_partitions(items: list) -> Iterator[list[list]]:
    """Yield every partition of items into nonempty blocks."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for partition in set_partitions(rest):
        for i in range(len(partition)):
            yield partition[:i] + [[first] + partition[i]] + partition[i + 1 :]
        yield [[first]] + partition


def stirling_enumerate(n: int, k: int) -> int:
    """S(n, k) by brute-force enumeration of set partitions; n is capped."""
    if n < 0 or k < 0:
        raise ValueError("indices must be nonnegative")
    if n > ENUMERATION_LIMIT:
        raise ValueError(f"enumeration oracle capped at n <= {ENUMERATION_LIMIT}")
    return sum(1 for partition in set_partitions(list(range(1, n + 1))) if len(partition) == k)


def _validate_triangle(triangle: StirlingTriangle) -> None:
    rows = triangle.rows
    if len(rows) != triangle.max_n + 1:
        raise TriangleInvariantError("row count does not match max_n")
    for n, row in enumerate(rows):
        if len(row) != n + 1:
            raise TriangleInvariantError(f"row {n} has {len(row)} entries, expected {n + 1}")
        if any(v < 0 for v in row):
            raise TriangleInvariantError(f"negative entry in row {n}")
        if row[n] != 1:
            raise TriangleInvariantError(f"S({n},{n}) != 1")
        if row[0] != (1 if n == 0 else 0):
            raise TriangleInvariantError(f"S({n},0) has wrong value")
        if n and row != _next_row(rows[n - 1]):
            raise TriangleInvariantError(f"row {n} violates the recurrence")


def triangle_save(triangle: StirlingTriangle, path: str | Path) -> None:
    """Write the versioned plain-text cache format (see triangle_load)."""
    lines = [f"{_FILE_MAGIC} {_FILE_VERSION} max_n={triangle.max_n}"]
    count = 0
    for n, row in enumerate(triangle.rows):
        for k, value in enumerate(row):
            lines.append(f"{n} {k} {value}")
            count += 1
    lines.append(f"END {count}")
    Path(path).write_text("\n".join(lines) + "\n", encoding="ascii")


def triangle_load(path: str | Path) -> StirlingTriangle:
    """Load a triangle cache file.

    Format: header "STIRLING2 v1 max_n=<N>", one "<n> <k> <value>" line per
    entry with k <= n in lexicographic (n, k) order, then "END <count>".
    Raises TriangleFormatError for garbled or truncated files,
    TriangleVersionError for an unsupported version, and
    TriangleInvariantError when the parsed numbers violate an invariant.
    """
    text = Path(path).read_text(encoding="ascii")
    lines = text.splitlines()
    if not lines:
        raise TriangleFormatError("empty file")
    header = lines[0].split()
    if len(header) != 3 or header[0] != _FILE_MAGIC or not header[2].startswith("max_n="):
        raise TriangleFormatError(f"bad header: {lines[0]!r}")
    if header[1] != _FILE_VERSION:
        raise TriangleVersionError(f"unsupported version {header[1]!r}")
    try:
        max_n = int(header[2][len("max_n=") :])
    except ValueError:
        raise TriangleFormatError(f"bad max_n in header: {lines[0]!r}") from None
    if max_n < 0:
        raise TriangleFormatError("negative max_n")

    body = lines[1:]
    if not body or not body[-1].startswith("END"):
        raise TriangleFormatError("missing END line")
    end_parts = body[-1].split()
    if len(end_parts) != 2 or end_parts[0] != "END":
        raise TriangleFormatError(f"bad END line: {body[-1]!r}")
    try:
        declared = int(end_parts[1])
    except ValueError:
        raise TriangleFormatError(f"bad END count: {body[-1]!r}") from None
    entries = body[:-1]
    if declared != len(entries):
        raise TriangleFormatError(f"END declares {declared} rows, file has {len(entries)}")

    rows: list[list[int]] = [[] for _ in range(max_n + 1)]
    expected = [(n, k) for n in range(max_n + 1) for k in range(n + 1)]
    if len(entries) != len(expected):
        raise TriangleInvariantError(
            f"expected {len(expected)} entries for max_n={max_n}, found {len(entries)}"
        )
    for line, (want_n, want_k) in zip(entries, expected):
        parts = line.split()
        if len(parts) != 3:
            raise TriangleFormatError(f"bad entry line: {line!r}")
        try:
            n, k, value = int(parts[0]), int(parts[1]), int(parts[2])
        except ValueError:
            raise TriangleFormatError(f"bad entry line: {line!r}") from None
        if (n, k) != (want_n, want_k):
            raise TriangleInvariantError(
                f"entry ({n},{k}) out of place, expected ({want_n},{want_k})"
            )
        rows[n].append(value)

    triangle = StirlingTriangle(max_n, tuple(tuple(row) for row in rows))
    _validate_triangle(triangle)
    return triangle

"""Differential verification and benchmarking across all formula routes.

Every implemented formula is evaluated on a shared index range and compared
against the consensus value, which is anchored to SERIES_ORACLE rather than
a majority vote: a genuinely independent oracle exists, and voting could
mask correlated bugs in the Stirling-backed routes.  Even-index-only
formulas are simply skipped at odd indices, and the Genocchi formula is
compared on the Bernoulli scale through G_n = 2(1-2^n) B_n.
"""
from __future__ import annotations

import enum
import json
import statistics
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .exact import format_rational
from .formulas import (
    FormulaId,
    formula_bernoulli_value,
    is_applicable,
    rows_needed,
)
from .stirling import StirlingTriangle, shared_triangle

__all__ = [
    "FormulaEvaluation",
    "IndexRecord",
    "VerificationReport",
    "Verdict",
    "BenchRecord",
    "evaluate_all",
    "verify_range",
    "bench",
    "report_to_dict",
    "report_to_json",
]


class Verdict(enum.Enum):
    ALL_TRUSTED_AGREE = "ALL_TRUSTED_AGREE"
    TRUSTED_DISSENT_FOUND = "TRUSTED_DISSENT_FOUND"


@dataclass(frozen=True)
class FormulaEvaluation:
    """One formula evaluated at one index; value is present iff error is None."""

    formula: FormulaId
    n: int
    value: Fraction | None
    elapsed_ns: int
    error: str | None = None

    @property
    def ok(self) -> bool:
        return self.error is None


@dataclass(frozen=True)
class IndexRecord:
    """Consensus/dissent at a single index.  Dissent entries carry the
    dissenting value (or error text) in serialized form."""

    n: int
    consensus: Fraction
    agreeing: tuple[FormulaId, ...]
    dissenting: tuple[tuple[FormulaId, str], ...]


@dataclass(frozen=True)
class VerificationReport:
    max_n: int
    records: tuple[IndexRecord, ...]
    agreements: int
    dissents: int
    verdict: Verdict


@dataclass(frozen=True)
class BenchRecord:
    formula: FormulaId
    n: int
    repetitions: int
    median_ns: int
    value: str


def _triangle_for_range(max_n: int) -> StirlingTriangle:
    return shared_triangle(max(2 * max_n, 1))


def evaluate_all(n: int, triangle: StirlingTriangle) -> list[FormulaEvaluation]:
    """Evaluate every applicable formula at index n, on the Bernoulli scale."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    applicable = [fid for fid in FormulaId if is_applicable(fid, n)]
    needed = max(rows_needed(fid, n) for fid in applicable)
    if triangle.max_n < needed:
        raise ValueError(
            f"triangle holds rows up to {triangle.max_n}, index {n} needs {needed}"
        )
    evaluations = []
    for fid in applicable:
        start = time.perf_counter_ns()
        try:
            value = formula_bernoulli_value(fid, n, triangle)
            error = None
        except Exception as exc:  # captured per record, never aborts the sweep
            value = None
            error = f"{type(exc).__name__}: {exc}"
        elapsed = time.perf_counter_ns() - start
        evaluations.append(FormulaEvaluation(fid, n, value, elapsed, error))
    return evaluations


def _record_for(n: int, evaluations: Sequence[FormulaEvaluation]) -> IndexRecord:
    by_id = {e.formula: e for e in evaluations}
    oracle = by_id[FormulaId.SERIES_ORACLE]
    if not oracle.ok:
        raise RuntimeError(f"series oracle failed at n={n}: {oracle.error}")
    consensus = oracle.value
    agreeing = []
    dissenting = []
    for fid in FormulaId:  # deterministic reduction order
        ev = by_id.get(fid)
        if ev is None:
            continue
        if ev.ok and ev.value == consensus:
            agreeing.append(fid)
        elif ev.ok:
            dissenting.append((fid, format_rational(ev.value)))
        else:
            dissenting.append((fid, f"ERROR: {ev.error}"))
    return IndexRecord(n, consensus, tuple(agreeing), tuple(dissenting))


def verify_range(
    max_n: int,
    triangle: StirlingTriangle | None = None,
    parallel: bool = False,
) -> VerificationReport:
    """Differential report over indices 0..max_n.

    The report content is deterministic: identical for sequential and
    parallel runs, and it carries no timing fields.
    """
    if max_n < 0:
        raise ValueError("max_n must be nonnegative")
    t = triangle if triangle is not None else _triangle_for_range(max_n)
    indices = range(max_n + 1)
    if parallel:
        with ThreadPoolExecutor() as pool:
            all_evals = list(pool.map(lambda n: evaluate_all(n, t), indices))
    else:
        all_evals = [evaluate_all(n, t) for n in indices]
    records = tuple(_record_for(n, evs) for n, evs in zip(indices, all_evals))
    agreements = sum(len(r.agreeing) for r in records)
    dissents = sum(len(r.dissenting) for r in records)
    trusted_dissent = any(
        fid.trusted for r in records for fid, _ in r.dissenting
    )
    verdict = Verdict.TRUSTED_DISSENT_FOUND if trusted_dissent else Verdict.ALL_TRUSTED_AGREE
    return VerificationReport(max_n, records, agreements, dissents, verdict)


def bench(
    formulas: Iterable[FormulaId],
    n_values: Iterable[int],
    repetitions: int,
    triangle: StirlingTriangle | None = None,
) -> list[BenchRecord]:
    """Median wall-clock timings over the (formula, n) cross product.

    One warm-up evaluation per pair is excluded from the timings; the
    evaluated value must be byte-identical across repetitions.
    """
    if repetitions < 1:
        raise ValueError("repetitions must be >= 1")
    formulas = list(formulas)
    n_values = list(n_values)
    if not formulas or not n_values:
        return []
    t = triangle
    if t is None:
        needed = max(
            max((rows_needed(fid, n) for fid in formulas), default=0) for n in n_values
        )
        t = shared_triangle(max(needed, max(n_values)))
    records = []
    for fid in formulas:
        for n in n_values:
            if not is_applicable(fid, n):
                raise ValueError(f"{fid.value} is not applicable at n={n}")
            formula_bernoulli_value(fid, n, t)  # warm-up, excluded
            times = []
            digests = set()
            for _ in range(repetitions):
                start = time.perf_counter_ns()
                value = formula_bernoulli_value(fid, n, t)
                times.append(time.perf_counter_ns() - start)
                digests.add(format_rational(value))
            if len(digests) != 1:
                raise RuntimeError(f"{fid.value} at n={n} gave varying values: {digests}")
            records.append(
                BenchRecord(fid, n, repetitions, statistics.median_low(times), digests.pop())
            )
    return records


def report_to_dict(report: VerificationReport) -> dict:
    """Plain-data view of a report; rationals use the p/q serialization."""
    return {
        "max_n": report.max_n,
        "verdict": report.verdict.value,
        "summary": {"agreements": report.agreements, "dissents": report.dissents},
        "records": [
            {
                "n": r.n,
                "consensus": format_rational(r.consensus),
                "agreeing": [fid.value for fid in r.agreeing],
                "dissenting": [
                    {"formula": fid.value, "value": value} for fid, value in r.dissenting
                ],
            }
            for r in report.records
        ],
    }


def report_to_json(report: VerificationReport) -> str:
    return json.dumps(report_to_dict(report), indent=2)

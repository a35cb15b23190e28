"""Command-line surface: compute, verify, table, bench, cache.

Exit status contract: 0 = success/agreement, 1 = usage or I/O error,
2 = verification dissent.  All output except bench timings is
deterministic; --deterministic zeroes the timing fields so that every
format is byte-stable.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace

from .cache import cache_dir, cache_file, load_cached_triangle
from .exact import format_rational
from .formulas import (
    FormulaId,
    bernoulli_series_oracle,
    formula_value,
    genocchi_theorem,
    rows_needed,
)
from .harness import Verdict, bench, report_to_json, verify_range
from .stirling import StirlingTriangle, shared_triangle, triangle_build, triangle_save

FORMATS = ("plain", "csv", "json")
BENCH_HEADER = "formula,n,reps,median_ns,value"


class _Parser(argparse.ArgumentParser):
    """argparse exits with status 2 on usage errors; the contract wants 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _build_parser() -> _Parser:
    parser = _Parser(prog="bernocchi", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p_compute = sub.add_parser("compute", help="evaluate one formula at one index")
    p_compute.add_argument("formula", help="formula identifier (case-insensitive)")
    p_compute.add_argument("n", type=int)
    p_compute.add_argument("--format", choices=FORMATS, default="plain")
    p_compute.set_defaults(func=cmd_compute)

    p_verify = sub.add_parser("verify", help="differential verification report")
    p_verify.add_argument("--max-n", type=int, required=True)
    p_verify.add_argument("--strict", action="store_true",
                          help="any dissent, even from an untrusted formula, fails")
    p_verify.add_argument("--format", choices=FORMATS, default="plain")
    p_verify.add_argument("--deterministic", action="store_true")
    p_verify.set_defaults(func=cmd_verify)

    p_table = sub.add_parser("table", help="emit a value table")
    p_table.add_argument("kind", choices=("bernoulli", "genocchi", "stirling"))
    p_table.add_argument("max_n", type=int)
    p_table.add_argument("--format", choices=FORMATS, default="plain")
    p_table.set_defaults(func=cmd_table)

    p_bench = sub.add_parser("bench", help="time the trusted formulas")
    p_bench.add_argument("--max-n", type=int, required=True)
    p_bench.add_argument("--reps", type=int, default=3)
    p_bench.add_argument("--format", choices=FORMATS, default="plain")
    p_bench.add_argument("--deterministic", action="store_true",
                         help="zero the timing column for snapshot testing")
    p_bench.set_defaults(func=cmd_bench)

    p_cache = sub.add_parser("cache", help="manage the on-disk Stirling triangle")
    p_cache.add_argument("action", choices=("build", "path", "clear"))
    p_cache.add_argument("max_n", type=int, nargs="?")
    p_cache.set_defaults(func=cmd_cache)

    return parser


def _triangle_for(min_rows: int) -> StirlingTriangle:
    cached = load_cached_triangle(min_rows)
    if cached is not None:
        return cached
    return shared_triangle(min_rows)


def _parse_formula(name: str) -> FormulaId:
    try:
        return FormulaId(name.upper())
    except ValueError:
        known = ", ".join(fid.value for fid in FormulaId)
        raise ValueError(f"unknown formula {name!r}; known formulas: {known}") from None


def cmd_compute(args) -> int:
    fid = _parse_formula(args.formula)
    triangle = _triangle_for(max(rows_needed(fid, args.n), 0))
    value = format_rational(formula_value(fid, args.n, triangle))
    if args.format == "plain":
        print(value)
    elif args.format == "csv":
        print("formula,n,value")
        print(f"{fid.value},{args.n},{value}")
    else:
        print(json.dumps({"formula": fid.value, "n": args.n, "value": value}, indent=2))
    return 0


def cmd_verify(args) -> int:
    if args.max_n < 0:
        raise ValueError("--max-n must be nonnegative")
    triangle = _triangle_for(max(2 * args.max_n, 1))
    report = verify_range(args.max_n, triangle)
    if args.format == "json":
        print(report_to_json(report))
    elif args.format == "csv":
        print("n,consensus,agreeing,dissenting")
        for record in report.records:
            agreeing = ";".join(fid.value for fid in record.agreeing)
            dissenting = ";".join(f"{fid.value}={v}" for fid, v in record.dissenting)
            print(f"{record.n},{format_rational(record.consensus)},{agreeing},{dissenting}")
    else:
        print(f"max_n: {report.max_n}")
        print(f"verdict: {report.verdict.value}")
        print(f"agreements: {report.agreements}  dissents: {report.dissents}")
        for record in report.records:
            line = f"n={record.n} consensus={format_rational(record.consensus)}"
            line += f" agreeing={','.join(fid.value for fid in record.agreeing)}"
            if record.dissenting:
                line += " dissenting=" + ",".join(
                    f"{fid.value}={v}" for fid, v in record.dissenting
                )
            print(line)
    if report.verdict is Verdict.TRUSTED_DISSENT_FOUND:
        return 2
    if args.strict and report.dissents:
        return 2
    return 0


def cmd_table(args) -> int:
    if args.max_n < 0:
        raise ValueError("max_n must be nonnegative")
    kind = args.kind
    if kind == "stirling":
        triangle = _triangle_for(args.max_n)
        rows = [triangle.row(n) for n in range(args.max_n + 1)]
        if args.format == "json":
            print(json.dumps({"kind": kind, "rows": [list(row) for row in rows]}, indent=2))
        elif args.format == "csv":
            print("n,k,value")
            for n, row in enumerate(rows):
                for k, value in enumerate(row):
                    print(f"{n},{k},{value}")
        else:
            for row in rows:
                print(",".join(str(v) for v in row))
        return 0

    if kind == "bernoulli":
        entries = [(n, bernoulli_series_oracle(n)) for n in range(args.max_n + 1)]
    else:
        triangle = _triangle_for(args.max_n)
        entries = [(n, genocchi_theorem(n, triangle)) for n in range(1, args.max_n + 1)]
    if args.format == "json":
        rows = [{"n": n, "value": format_rational(v)} for n, v in entries]
        print(json.dumps({"kind": kind, "rows": rows}, indent=2))
    elif args.format == "csv":
        print("n,value")
        for n, v in entries:
            print(f"{n},{format_rational(v)}")
    else:
        for n, v in entries:
            print(f"{n} {format_rational(v)}")
    return 0


def _bench_indices(max_n: int) -> list[int]:
    indices = []
    n = 8
    while n <= max_n:
        indices.append(n)
        n *= 2
    return indices


def cmd_bench(args) -> int:
    if args.max_n < 0:
        raise ValueError("--max-n must be nonnegative")
    if args.reps < 1:
        raise ValueError("--reps must be >= 1")
    trusted = [fid for fid in FormulaId if fid.trusted]
    indices = _bench_indices(args.max_n)
    needed = max((rows_needed(fid, n) for fid in trusted for n in indices), default=1)
    triangle = _triangle_for(max(needed, 1))
    records = bench(trusted, indices, args.reps, triangle)
    if args.deterministic:
        records = [replace(r, median_ns=0) for r in records]
    if args.format == "json":
        rows = [
            {
                "formula": r.formula.value,
                "n": r.n,
                "reps": r.repetitions,
                "median_ns": r.median_ns,
                "value": r.value,
            }
            for r in records
        ]
        print(json.dumps(rows, indent=2))
    else:  # the bench contract is CSV; plain and csv coincide
        print(BENCH_HEADER)
        for r in records:
            print(f"{r.formula.value},{r.n},{r.repetitions},{r.median_ns},{r.value}")
    return 0


def cmd_cache(args) -> int:
    if args.action == "build":
        if args.max_n is None or args.max_n < 0:
            raise ValueError("cache build requires a nonnegative max_n")
        cache_dir().mkdir(parents=True, exist_ok=True)
        triangle_save(triangle_build(args.max_n), cache_file())
        print(str(cache_file()))
        return 0
    if args.action == "path":
        print(str(cache_file()))
        return 0
    # clear is idempotent
    cache_file().unlink(missing_ok=True)
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # --help exits 0; usage errors exit 1 via _Parser
        return 0 if exc.code in (0, None) else int(exc.code)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"bernocchi: error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"bernocchi: i/o error: {exc}", file=sys.stderr)
        return 1


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()

"""Command-line front end: evaluate, generate, verify, benchmark.

Exit codes: 0 success, 1 verification mismatch, 2 usage or parse error,
3 domain precondition violation. All numeric output is decimal; JSON
renders every numeric field as a decimal string since the values outgrow
64 bits quickly.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import statistics
import sys
import time
from typing import Sequence

from .errors import DomainError
from .prime_sequence import (
    A067549_KNOWN_VALUES,
    DEFAULT_ORACLE_CUTOFF,
    d_sequence,
    prime_shifts,
    verify_sequence,
)
from .structured_det import (
    det_bareiss,
    det_closed_form,
    det_elimination,
    det_expanded,
    materialize_matrix,
)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_DOMAIN = 3

METHODS = ("closed", "expanded", "elimination", "bareiss")

#: bench skips the O(n^3) oracle above this size unless --force is given.
BAREISS_BENCH_CAP = 400


class BFileError(ValueError):
    """Raised for ill-formed b-files."""


def read_bfile(path: str) -> dict[int, int]:
    """Parse an OEIS-style b-file: '#' comments, then 'n value' per line."""
    values: dict[int, int] = {}
    with open(path, encoding="utf-8") as handle:
        for lineno, raw in enumerate(handle, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split(" ")
            if len(parts) != 2:
                raise BFileError(f"line {lineno}: expected 'n value'")
            try:
                n, value = int(parts[0]), int(parts[1])
            except ValueError as exc:
                raise BFileError(f"line {lineno}: expected integers") from exc
            values[n] = value
    return values


def _int_list(text: str) -> list[int]:
    try:
        items = [int(token) for token in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    return items


def _positive_int_list(text: str) -> list[int]:
    items = _int_list(text)
    if any(item < 1 for item in items):
        raise argparse.ArgumentTypeError("sizes must be positive")
    return items


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError("value must be positive")
    return value


def _nonnegative_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError("value must be non-negative")
    return value


def _method_list(text: str) -> list[str]:
    methods = [token.strip() for token in text.split(",") if token.strip()]
    unknown = [m for m in methods if m not in METHODS]
    if unknown or not methods:
        raise argparse.ArgumentTypeError(f"methods must be drawn from {', '.join(METHODS)}")
    return methods


def _use_color() -> bool:
    return sys.stdout.isatty() and not os.environ.get("NO_COLOR")


def _status(ok: bool, labels: tuple[str, str] = ("OK", "FAIL")) -> str:
    label = labels[0] if ok else labels[1]
    if _use_color():
        return f"\x1b[32m{label}\x1b[0m" if ok else f"\x1b[31m{label}\x1b[0m"
    return label


def _cmd_eval(args: argparse.Namespace) -> int:
    shifts = args.diag
    if args.dump_matrix:
        print(materialize_matrix(shifts).render())
    try:
        if args.method == "closed":
            value = det_closed_form(shifts)
        elif args.method == "elimination":
            value, trace = det_elimination(shifts)
        elif args.method == "bareiss":
            value = det_bareiss(materialize_matrix(shifts))
        else:
            value = det_expanded(shifts)
    except DomainError:
        print("zero shift not allowed for this method", file=sys.stderr)
        return EXIT_DOMAIN
    print(value)
    if args.method == "elimination":
        print(f"pivot_b={trace.pivot_b}")
    return EXIT_OK


def _cmd_sequence(args: argparse.Namespace) -> int:
    records = d_sequence(args.count)
    if args.format == "json":
        payload = [
            {"n": str(r.n), "p_n": str(r.p_n), "P_n": str(r.P_n), "D_n": str(r.D_n)}
            for r in records
        ]
        print(json.dumps(payload, indent=2))
    elif args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["n", "p_n", "P_n", "D_n"])
        for r in records:
            writer.writerow([r.n, r.p_n, r.P_n, r.D_n])
    else:
        for r in records:
            print(r.D_n)
    if args.check_known:
        limit = min(args.count, len(A067549_KNOWN_VALUES))
        mismatches = [
            (r.n, r.D_n, expected)
            for r, expected in zip(records[:limit], A067549_KNOWN_VALUES[:limit])
            if r.D_n != expected
        ]
        if mismatches:
            for n, got, expected in mismatches:
                print(f"known-value mismatch at n={n}: got {got}, expected {expected}", file=sys.stderr)
            return EXIT_MISMATCH
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    bfile_values = None
    if args.bfile is not None:
        try:
            bfile_values = read_bfile(args.bfile)
        except OSError as exc:
            print(f"cannot read b-file: {exc}", file=sys.stderr)
            return EXIT_USAGE
        except BFileError as exc:
            print(f"ill-formed b-file: {exc}", file=sys.stderr)
            return EXIT_USAGE

    report = verify_sequence(args.count, oracle_cutoff=args.oracle_cutoff)
    recurrence_ok = all(row.recurrence == row.direct for row in report.rows)
    oracle_rows = [row for row in report.rows if row.oracle is not None]
    oracle_ok = all(row.oracle == row.direct for row in oracle_rows)

    first_failure = report.first_failure
    bfile_ok = True
    compared = 0
    if bfile_values is not None:
        bfile_failures = []
        for row in report.rows:
            if row.n in bfile_values:
                compared += 1
                if bfile_values[row.n] != row.direct:
                    bfile_failures.append(row.n)
        if bfile_failures:
            bfile_ok = False
            worst = min(bfile_failures)
            first_failure = worst if first_failure is None else min(first_failure, worst)

    print(f"checked n = 1..{report.count} (oracle cutoff {report.oracle_cutoff})")
    print(f"  recurrence vs direct:     {_status(recurrence_ok)} {report.count}/{report.count}")
    print(f"  bareiss oracle vs direct: {_status(oracle_ok)} {len(oracle_rows)} checked")
    if bfile_values is not None:
        print(f"  b-file vs direct:         {_status(bfile_ok)} {compared} compared")
    passed = report.passed and bfile_ok
    print(f"overall: {_status(passed, ('PASS', 'FAIL'))}")
    if not passed:
        print(f"first divergence at n={first_failure}", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def _bench_once(method: str, shifts: list[int], matrix) -> None:
    if method == "closed":
        det_closed_form(shifts)
    elif method == "elimination":
        det_elimination(shifts)
    elif method == "bareiss":
        det_bareiss(matrix)
    else:
        det_expanded(shifts)


def _cmd_bench(args: argparse.Namespace) -> int:
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["method", "n", "median_seconds"])
    for n in args.sizes:
        shifts = prime_shifts(n)
        matrix = materialize_matrix(shifts) if "bareiss" in args.methods else None
        for method in args.methods:
            if method == "bareiss" and n > BAREISS_BENCH_CAP and not args.force:
                print(
                    f"skipping bareiss at n={n} (cap {BAREISS_BENCH_CAP}; pass --force to override)",
                    file=sys.stderr,
                )
                continue
            timings = []
            for _ in range(args.repeat):
                start = time.perf_counter()
                _bench_once(method, shifts, matrix)
                timings.append(time.perf_counter() - start)
            writer.writerow([method, n, f"{statistics.median(timings):.6g}"])
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="structdet",
        description="Exact determinants of all-ones-plus-diagonal matrices "
        "and the prime-diagonal sequence A067549.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    eval_p = sub.add_parser("eval", help="evaluate one determinant from its diagonal shifts")
    eval_p.add_argument(
        "--diag",
        type=_int_list,
        required=True,
        metavar="A1,A2,...",
        help="comma-separated integer shifts; entry k makes the diagonal 1+a_k "
        "(write --diag=-1,-2 when the first entry is negative)",
    )
    eval_p.add_argument("--method", choices=METHODS, default="expanded")
    eval_p.add_argument(
        "--dump-matrix",
        action="store_true",
        help="print the materialized matrix before the result",
    )
    eval_p.set_defaults(handler=_cmd_eval)

    seq_p = sub.add_parser("sequence", help="emit records of the prime-diagonal sequence")
    seq_p.add_argument("count", type=_nonnegative_int)
    seq_p.add_argument("--format", choices=("plain", "json", "csv"), default="plain")
    seq_p.add_argument(
        "--check-known",
        action="store_true",
        help="compare the leading values against the published A067549 terms",
    )
    seq_p.set_defaults(handler=_cmd_sequence)

    ver_p = sub.add_parser("verify", help="cross-check recurrence, direct formula, and oracle")
    ver_p.add_argument("count", type=_positive_int)
    ver_p.add_argument("--oracle-cutoff", type=_nonnegative_int, default=DEFAULT_ORACLE_CUTOFF)
    ver_p.add_argument("--bfile", help="OEIS-style b-file to compare against ('n value' lines)")
    ver_p.set_defaults(handler=_cmd_verify)

    bench_p = sub.add_parser("bench", help="time the determinant methods, CSV to stdout")
    bench_p.add_argument("sizes", type=_positive_int_list, metavar="N1,N2,...")
    bench_p.add_argument("--methods", type=_method_list, default=["expanded", "bareiss"])
    bench_p.add_argument("--repeat", type=_positive_int, default=3)
    bench_p.add_argument("--force", action="store_true", help="run bareiss above the size cap")
    bench_p.set_defaults(handler=_cmd_bench)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except DomainError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())

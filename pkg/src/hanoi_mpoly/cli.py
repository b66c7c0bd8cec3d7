"""Command-line interface.

Exit codes: 0 ok, 1 verification mismatch, 2 usage error, 3 state cap
exceeded, 4 I/O error.

  hanoi-mpoly compute --pegs 4 --discs 2
  hanoi-mpoly verify --pegs 5 --discs 5
  hanoi-mpoly sweep --pegs 3..5 --discs 1..8 --out tables.csv --exact
  hanoi-mpoly oeis --sequence m2-h3k --terms 8
  hanoi-mpoly diagnostics --pegs 4 --discs 4
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from hanoi_mpoly.errors import DomainError, ResourceError
from hanoi_mpoly.indices import SEQUENCES, oeis_sequence
from hanoi_mpoly.occupancy import HanoiParams
from hanoi_mpoly.oracle import CAP_ENV, VerificationReport, state_cap, verify
from hanoi_mpoly.polynomial import paper_theorem_report
from hanoi_mpoly.records import (
    CSV_COLUMNS,
    DIAGNOSTIC,
    EXACT_COLUMNS,
    OutputRecord,
    build_record,
    exact_str,
)

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_RESOURCE, EXIT_IO = 0, 1, 2, 3, 4

log = logging.getLogger("hanoi_mpoly")


def int_range(text: str) -> range:
    """``"4"`` or ``"1..8"`` (inclusive)."""
    try:
        if ".." in text:
            lo, hi = (int(part) for part in text.split("..", 1))
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or LO..HI, got {text!r}") from None
    if hi < lo:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return range(lo, hi + 1)


def rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _params(args) -> HanoiParams:
    return HanoiParams(args.pegs, args.discs)


def _verification_text(report: VerificationReport) -> str:
    status = "PASS" if report.passed else "FAIL"
    edges = next(c.observed for c in report.checks if c.name == "|E|")
    lines = [f"{status} H_{report.params.p}^{report.params.n}: "
             f"{edges} edges over {report.states} states"]
    for c in report.checks:
        mark = "ok  " if c.ok else "DIFF"
        lines.append(f"  {mark} {c.name}")
        if not c.ok:
            lines.append(f"       closed form: {c.expected}")
            lines.append(f"       oracle:      {c.observed}")
    lines += [f"  note: {note}" for note in report.notes]
    return "\n".join(lines)


def _verification_obj(report: VerificationReport) -> dict:
    return {
        "p": report.params.p,
        "n": report.params.n,
        "states": report.states,
        "passed": report.passed,
        "checks": [
            {"name": c.name, "ok": c.ok, "closed_form": repr(c.expected), "oracle": repr(c.observed)}
            for c in report.checks
        ],
        "notes": report.notes,
    }


# --- subcommands ------------------------------------------------------------------

def cmd_compute(args) -> int:
    params = _params(args)
    record = build_record(params, args.alpha)
    status = EXIT_OK
    if args.verify:
        report = verify(params, cap=args.cap, workers=args.workers)
        record.verification = "PASS" if report.passed else "FAIL"
        status = EXIT_OK if report.passed else EXIT_MISMATCH
    out = sys.stdout
    if args.format == "json":
        out.write(record.to_json() + "\n")
    elif args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(CSV_COLUMNS + (EXACT_COLUMNS if args.exact else ()))
        w.writerow(record.csv_row(exact=args.exact))
    else:
        out.write(record.text() + "\n")
    return status


def cmd_verify(args) -> int:
    report = verify(_params(args), cap=args.cap, workers=args.workers)
    if args.format == "json":
        sys.stdout.write(json.dumps(_verification_obj(report), indent=2) + "\n")
    else:
        sys.stdout.write(_verification_text(report) + "\n")
    return EXIT_OK if report.passed else EXIT_MISMATCH


def _sweep_cell(job) -> OutputRecord:
    p, n, alphas = job
    return build_record(HanoiParams(p, n), alphas)


def sweep_records(pegs: range, discs: range, alphas=None, workers: int = 1) -> list[OutputRecord]:
    """One record per ``(p, n)`` in ``(p, n)`` order, whatever the worker count."""
    jobs = [(p, n, alphas) for p in pegs for n in discs]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_sweep_cell, jobs))
    return [_sweep_cell(job) for job in jobs]


def render_sweep(records: list[OutputRecord], fmt: str, exact: bool) -> str:
    if fmt == "json":
        return json.dumps([r.to_json_obj() for r in records], indent=2) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS + (EXACT_COLUMNS if exact else ()))
    for r in records:
        w.writerow(r.csv_row(exact=exact))
    return buf.getvalue()


def cmd_sweep(args) -> int:
    for p in args.pegs:
        HanoiParams(p, args.discs[0])  # reject bad ranges before any work
    records = sweep_records(args.pegs, args.discs, args.alpha, args.workers)
    text = render_sweep(records, args.format, args.exact)
    if args.out in (None, "-"):
        sys.stdout.write(text)
        return EXIT_OK
    with open(args.out, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)
    log.info("wrote %d rows to %s", len(records), args.out)
    return EXIT_OK


def cmd_oeis(args) -> int:
    for term in oeis_sequence(args.sequence, args.terms):
        sys.stdout.write(f"{term}\n")
    return EXIT_OK


def cmd_diagnostics(args) -> int:
    params = _params(args)
    report = paper_theorem_report(params)
    if args.format == "json":
        obj = {
            "p": params.p,
            "n": params.n,
            "mode": DIAGNOSTIC,
            "divergent": report.divergent,
            "rows": [
                {"formula": r.formula, "i": r.key[0], "j": r.key[1],
                 "literal": exact_str(r.literal), "canonical": r.canonical,
                 "mismatch": r.mismatch, "note": r.note}
                for r in report.rows
            ],
            "assembled": [
                {"i": k[0], "j": k[1], "literal": exact_str(lit), "canonical": can}
                for k, lit, can in report.polynomial_mismatches()
            ],
            "literal_total": exact_str(report.literal_total),
            "canonical_total": report.canonical.edge_count(),
        }
        sys.stdout.write(json.dumps(obj, indent=2) + "\n")
        return EXIT_OK
    lines = [f"H_{params.p}^{params.n} ({DIAGNOSTIC})",
             f"canonical: {report.canonical}"]
    if not report.rows:
        lines.append("no literal terms apply")
    w = max([len(r.formula) for r in report.rows] + [7])
    lines.append(f"  {'formula':<{w}}  {'m_ij':<10} {'literal':>14} {'canonical':>14}  flag")
    for r in report.rows:
        flag = "MISMATCH" if r.mismatch else "ok"
        key = f"m_{r.key[0]},{r.key[1]}"
        lines.append(f"  {r.formula:<{w}}  {key:<10} {exact_str(r.literal):>14} {r.canonical:>14}  {flag}")
    diffs = report.polynomial_mismatches()
    if diffs:
        lines.append("assembled literal polynomial differs at:")
        for (i, j), lit, can in diffs:
            lines.append(f"  m_{i},{j}: literal {exact_str(lit)}, canonical {can}")
        lines.append(f"literal M(1,1) = {exact_str(report.literal_total)}, "
                     f"|E| = {report.canonical.edge_count()}")
    else:
        lines.append("no divergence")
    sys.stdout.write("\n".join(lines) + "\n")
    return EXIT_OK


# --- parser -----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hanoi-mpoly",
        description="M-polynomials and degree-based indices of generalized Hanoi graphs H_p^n.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_args(sp):
        sp.add_argument("--pegs", "-p", type=int, required=True, help="number of pegs p >= 1")
        sp.add_argument("--discs", "-n", type=int, required=True, help="number of discs n >= 0")

    def oracle_args(sp):
        sp.add_argument("--cap", type=int, default=None,
                        help=f"maximum states to enumerate (default {CAP_ENV} or 2e7)")
        sp.add_argument("--workers", type=int, default=1, help="worker processes")

    def alpha_arg(sp):
        sp.add_argument("--alpha", type=rational, action="append", default=None,
                        help="Randić exponent, repeatable (default 1, -1, 1/2, -1/2)")

    sp = sub.add_parser("compute", help="polynomial, edge census and indices for one (p, n)")
    graph_args(sp)
    sp.add_argument("--format", choices=("text", "json", "csv"), default="text")
    sp.add_argument("--exact", action="store_true", help="add exact columns to csv output")
    sp.add_argument("--verify", action="store_true", help="also run the brute-force oracle")
    alpha_arg(sp)
    oracle_args(sp)
    sp.set_defaults(func=cmd_compute)

    sp = sub.add_parser("verify", help="compare closed forms with brute-force enumeration")
    graph_args(sp)
    sp.add_argument("--format", choices=("text", "json"), default="text")
    oracle_args(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("sweep", help="index table over ranges of p and n")
    sp.add_argument("--pegs", "-p", type=int_range, required=True, help="N or LO..HI")
    sp.add_argument("--discs", "-n", type=int_range, required=True, help="N or LO..HI")
    sp.add_argument("--out", "-o", default=None, help="output file (default stdout)")
    sp.add_argument("--format", choices=("csv", "json"), default="csv")
    sp.add_argument("--exact", action="store_true", help="add num/den columns")
    sp.add_argument("--workers", type=int, default=1, help="worker processes")
    alpha_arg(sp)
    sp.set_defaults(func=cmd_sweep)

    sp = sub.add_parser("oeis", help="integer sequences built from the indices")
    sp.add_argument("--sequence", "-s", required=True, choices=sorted(SEQUENCES))
    sp.add_argument("--terms", "-k", type=int, default=8)
    sp.set_defaults(func=cmd_oeis)

    sp = sub.add_parser("diagnostics", aliases=["paper-diagnostics"],
                        help="literal closed-form coefficients against canonical ones")
    graph_args(sp)
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.set_defaults(func=cmd_diagnostics)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits on usage errors and --help
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.ERROR,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        if getattr(args, "cap", None) is None and hasattr(args, "cap"):
            args.cap = state_cap()
        return args.func(args)
    except DomainError as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceError as exc:
        print(f"{parser.prog}: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except OSError as exc:
        print(f"{parser.prog}: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())

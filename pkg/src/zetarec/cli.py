"""Command-line entry point: ``zetarec verify | table | scan-conjecture1 | suites``."""
from __future__ import annotations

import argparse
import sys

from . import __version__
from .report import (FORMATS, TABLE_KINDS, RunConfig, conjecture_table, export_table, parse_range,
                     render_report, render_table, run, write_output)
from .suites import suite_names


def _precision(text: str) -> int:
    p = int(text)
    if p < 20:
        raise argparse.ArgumentTypeError("precision must be at least 20 digits")
    return p


def _range(text: str) -> tuple[int, int]:
    try:
        return parse_range(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _common(p: argparse.ArgumentParser):
    p.add_argument("--precision", type=_precision, default=50, help="decimal digits (>= 20, default 50)")
    p.add_argument("--format", choices=FORMATS, default=None)
    p.add_argument("--out", help="output file (default: stdout)")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="zetarec", description="Verify even-zeta recurrences and related identities.")
    ap.add_argument("--version", action="version", version=f"zetarec {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("--suite", action="append", choices=suite_names(), metavar="SUITE",
                   help="suite name (repeatable; default all); see 'zetarec suites'")
    v.add_argument("--range", type=_range, help="index range a..b for the selected suite")
    v.add_argument("--jobs", type=int, default=1, help="worker processes")
    _common(v)

    t = sub.add_parser("table", help="export a table")
    t.add_argument("kind", choices=TABLE_KINDS)
    t.add_argument("--max", type=int, help="largest index (order, j, a/b or x)")
    t.add_argument("--tau", help="period ratio for eisenstein: i, rho or a complex literal")
    t.add_argument("--a", help="shift a for constants_cj (rational, default 1/2)")
    t.add_argument("--points", type=int, help="grid size for zagier_F plot data")
    _common(t)

    c = sub.add_parser("scan-conjecture1", help="report-only scan of the pseudo-characteristic bounds")
    c.add_argument("--range", type=_range, default=(4, 20), help="s range (s >= 4, default 4..20)")
    c.add_argument("--k", choices=("2s", "2s-1"), default="2s")
    _common(c)

    sub.add_parser("suites", help="list suite names")
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        if args.command == "suites":
            print("\n".join(suite_names()))
            return 0
        if args.command == "verify":
            config = RunConfig("verify", tuple(args.suite or ["all"]), args.range, args.precision,
                               args.format or "json", args.out, args.jobs)
            report, status = run(config)
            write_output(render_report(report, config.format), config.out)
            return status
        if args.command == "table":
            params = {"max": args.max, "tau": args.tau, "a": args.a, "points": args.points}
            header, rows = export_table(args.kind, params, args.precision)
            write_output(render_table(header, rows, args.format or "csv"), args.out)
            return 0
        if args.command == "scan-conjecture1":
            header, rows = conjecture_table(args.range, args.k, args.precision)
            write_output(render_table(header, rows, args.format or "text"), args.out)
            return 0  # report-only: never gates
    except (ValueError, KeyError) as exc:
        print(f"zetarec: error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"zetarec: cannot write output: {exc}", file=sys.stderr)
        return 2
    return 2


if __name__ == "__main__":
    sys.exit(main())

"""Command-line interface.

    fibpaths seq     print one family's counts by one method
    fibpaths tables  recompute the published tables and diff them
    fibpaths verify  cross-check all methods against each other

Exit codes: 0 success, 1 verification mismatch, 2 usage error, 3 method
unavailable for the family, 4 internal inconsistency (non-integral or
singular results).  Output is deterministic; JSON carries counts as
decimal strings since they outgrow doubles quickly.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import families, tables
from .automata import SingularSystem
from .brute import BudgetExceeded
from .families import FAMILIES, METHODS, MethodUnavailable, NonIntegralResult
from .series import SeriesError

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_UNAVAILABLE = 3
EXIT_INTERNAL = 4


def _positive_int(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return n


def _nonneg_int(text: str) -> int:
    n = int(text)
    if n < 0:
        raise argparse.ArgumentTypeError("must be a nonnegative integer")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fibpaths",
        description="Count Fibonacci-colored Motzkin path families by "
        "independent exact methods.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    seq = sub.add_parser("seq", help="print counts for n = 0..N")
    seq.add_argument("--family", required=True, choices=FAMILIES)
    seq.add_argument("--k", required=True, type=_positive_int,
                     help="number of colors of a unit horizontal step")
    seq.add_argument("--n", required=True, type=_nonneg_int,
                     help="largest path length to report")
    seq.add_argument("--method", choices=METHODS, default="closed")
    seq.add_argument("--depth", type=_nonneg_int, default=None,
                     help="truncation depth for cf/automaton (default: exact)")
    seq.add_argument("--format", choices=("text", "json", "csv"), default="text")
    seq.add_argument("--header", action="store_true",
                     help="emit a header row of path lengths (csv only)")
    seq.set_defaults(func=cmd_seq)

    tab = sub.add_parser("tables", help="recompute the published tables")
    tab.add_argument("--json", action="store_true", dest="as_json")
    tab.set_defaults(func=cmd_tables)

    ver = sub.add_parser("verify", help="cross-check all methods")
    ver.add_argument("--k-max", type=_positive_int, default=4)
    ver.add_argument("--n-max", type=_nonneg_int, default=40)
    ver.add_argument("--brute-max", type=_nonneg_int, default=10,
                     help="largest length checked by brute-force enumeration")
    ver.add_argument("--depth", type=_nonneg_int, default=None)
    ver.add_argument("--family", choices=FAMILIES, default=None,
                     help="restrict to one family")
    ver.add_argument("--k", type=_positive_int, default=None,
                     help="restrict to one k")
    ver.set_defaults(func=cmd_verify)
    return parser


def cmd_seq(args) -> int:
    report = families.sequence(args.family, args.k, args.n, args.method, args.depth)
    if args.format == "json":
        print(json.dumps(report.to_json_dict(), indent=2, sort_keys=True))
    elif args.format == "csv":
        if args.header:
            print(",".join(str(n) for n in range(args.n + 1)))
        print(",".join(str(c) for c in report.counts))
    else:
        print(" ".join(str(c) for c in report.counts))
    return EXIT_OK


def cmd_tables(args) -> int:
    ok = True
    results = []
    for family in FAMILIES:
        rows, _ = tables.PUBLISHED[family]
        for k in sorted(rows):
            cells = tables.row_diff(family, k)
            row_ok = all(exp == got for _, exp, got in cells)
            ok = ok and row_ok
            results.append((family, k, row_ok, cells))
    if args.as_json:
        payload = {
            "ok": ok,
            "tables": [
                {
                    "family": family,
                    "k": k,
                    "ok": row_ok,
                    "cells": [
                        {"n": n, "expected": str(exp), "got": str(got), "ok": exp == got}
                        for n, exp, got in cells
                    ],
                }
                for family, k, row_ok, cells in results
            ],
        }
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for family, k, row_ok, cells in results:
            print("%-13s k=%d  %s" % (family, k, "PASS" if row_ok else "FAIL"))
            if not row_ok:
                for n, exp, got in cells:
                    if exp != got:
                        print("  n=%d expected %d got %d" % (n, exp, got))
        print("tables: %s" % ("PASS" if ok else "FAIL"))
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_verify(args) -> int:
    fams = (args.family,) if args.family else FAMILIES
    ks = (args.k,) if args.k else tuple(range(1, args.k_max + 1))
    failures = []
    for family in fams:
        for k in ks:
            mismatches = families.verify_methods(
                family, k, args.n_max, args.brute_max, args.depth
            )
            if mismatches:
                failures.extend(mismatches)
                for family_, k_, n, ma, mb, va, vb in mismatches:
                    print(
                        "%s k=%d n=%d: %s=%d %s=%d"
                        % (family_, k_, n, ma, va, mb, vb)
                    )
            else:
                print(
                    "%-13s k=%d  OK (n<=%d, brute<=%d)"
                    % (family, k, args.n_max, min(args.brute_max, args.n_max))
                )
    print("verify: %s" % ("PASS" if not failures else "FAIL"))
    return EXIT_OK if not failures else EXIT_MISMATCH


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except MethodUnavailable as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_UNAVAILABLE
    except BudgetExceeded as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    except (NonIntegralResult, SingularSystem, SeriesError) as exc:
        print("internal inconsistency: %s" % exc, file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())

"""Command-line runner for the verification scenarios.

Usage:

    stablelimit run [--scenario ID ...] [--format text|json] [--jobs N]
                    [--out PATH]
    stablelimit list

Exit codes: 0 when every selected scenario passes (flagged passes count
as passes but are listed in the summary), 1 when any scenario fails,
2 for usage or I/O errors.
"""

from __future__ import annotations

import argparse
import sys

from . import __version__, cgdata, scenarios
from .report import render_json, render_text

_CITATIONS = {
    "expansion": "7-adic expansion of the quintic at the lifted root",
    "branch": "discriminant section splits into the two branch curves",
    "delta": "diagonal factorizations and the six intersection points",
    "singularities": "rigidity conditions and node classification",
    "deform-derive": "first-order rigidity system re-derivation",
    "system-I1": "published deformation system 1 (point-moving)",
    "system-I2": "published deformation system 2 (point-moving)",
    "system-I3": "published deformation system 3 (point-moving)",
    "system-I4": "published deformation system 4 (tangency)",
    "system-I5": "published deformation system 5 (tangency)",
    "system-I6": "published deformation system 6 (tangency)",
    "system-I7": "published deformation system 7 (tangency)",
    "system-lefschetz": "flex-destroying deformation system",
    "basis-count": "seven systems realize the obstruction basis",
    "ramification": "branch loci and flexes of the two rulings",
    "lattice": "divisor-class identities and double-cover invariants",
    "diophantine": "multiple-fiber multiplicity equation",
    "gamma": "existence count for the bidegree-(2,2) tangent curve",
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stablelimit",
        description="exact verification engine for the characteristic-7 "
                    "stable-limit geometry of an explicit quintic surface")
    sub = parser.add_subparsers(dest="command")

    run_p = sub.add_parser("run", help="execute verification scenarios")
    run_p.add_argument("--scenario", action="append", metavar="ID",
                       help="scenario id (repeatable; default: all)")
    run_p.add_argument("--format", choices=("text", "json"), default="text")
    run_p.add_argument("--jobs", type=int, default=1, metavar="N",
                       help="worker threads for scenario execution")
    run_p.add_argument("--out", metavar="PATH",
                       help="write the report here instead of stdout")

    sub.add_parser("list", help="list scenario ids")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "list":
        width = max(len(s) for s in cgdata.SCENARIO_IDS)
        for sid in cgdata.SCENARIO_IDS:
            print(f"{sid:<{width}}  {_CITATIONS[sid]}")
        return 0
    if args.command != "run":
        parser.print_usage(sys.stderr)
        return 2

    ids = args.scenario or list(cgdata.SCENARIO_IDS)
    unknown = [sid for sid in ids if sid not in cgdata.SCENARIO_IDS]
    if unknown:
        print(f"unknown scenario id(s): {', '.join(unknown)}",
              file=sys.stderr)
        print(f"known ids: {', '.join(cgdata.SCENARIO_IDS)}",
              file=sys.stderr)
        return 2
    if args.jobs < 1:
        print("--jobs must be positive", file=sys.stderr)
        return 2

    reports = scenarios.run_many(ids, jobs=args.jobs)
    if args.format == "json":
        payload = render_json(reports, __version__)
    else:
        payload = render_text(reports, __version__)

    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(payload + "\n")
        except OSError as exc:
            print(f"cannot write report: {exc}", file=sys.stderr)
            return 2
    else:
        print(payload)

    return 0 if all(r.passed for r in reports) else 1


if __name__ == "__main__":
    raise SystemExit(main())

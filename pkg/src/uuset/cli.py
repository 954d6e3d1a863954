"""Command-line entry point.

    uuset verify --space unit|real --depth N --stage M [--copy-stage C] [--json]
    uuset query row --space S --n R [--depth N] [--stage M] [--copy-stage C]
    uuset query decode --space S --point P --depth N [--stage M] [--copy-stage C]
    uuset query encode SPEC
    uuset query schedule --space S --steps M
    uuset render --space S --depth N --stage M [--copy-stage C] -o PATH

Exit status: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import real, unit
from .intervals import IntervalSet, format_rational, rational
from .sequences import SeqSpec, limit_point
from .svg import render
from .verify import run_verify


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def _natural(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {v}")
    return v


def _rational(text: str) -> Fraction:
    try:
        return rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _spec(text: str) -> SeqSpec:
    try:
        return SeqSpec.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="uuset", description="Uniquely universal closed sets, built exactly.")
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run the finite-stage verification suite")
    v.add_argument("--space", choices=("unit", "real"), required=True)
    v.add_argument("--depth", type=_positive, required=True)
    v.add_argument("--stage", type=_natural, required=True)
    v.add_argument("--copy-stage", type=_natural, default=0)
    v.add_argument("--json", action="store_true", help="emit a JSON report")

    q = sub.add_parser("query", help="rows, sections, codes and schedules as JSON")
    qs = q.add_subparsers(dest="kind", required=True)
    row = qs.add_parser("row")
    row.add_argument("--space", choices=("unit", "real"), required=True)
    row.add_argument("--n", type=_natural, required=True)
    row.add_argument("--depth", type=_positive, default=None)
    row.add_argument("--stage", type=_natural, default=0)
    row.add_argument("--copy-stage", type=_natural, default=0)
    dec = qs.add_parser("decode")
    dec.add_argument("--space", choices=("unit", "real"), required=True)
    dec.add_argument("--point", type=_rational, required=True)
    dec.add_argument("--depth", type=_positive, required=True)
    dec.add_argument("--stage", type=_natural, default=0)
    dec.add_argument("--copy-stage", type=_natural, default=0)
    enc = qs.add_parser("encode")
    enc.add_argument("spec", type=_spec)
    sch = qs.add_parser("schedule")
    sch.add_argument("--space", choices=("unit", "real"), required=True)
    sch.add_argument("--steps", type=_natural, required=True)

    r = sub.add_parser("render", help="write a schematic SVG of the rows")
    r.add_argument("--space", choices=("unit", "real"), required=True)
    r.add_argument("--depth", type=_positive, required=True)
    r.add_argument("--stage", type=_natural, default=0)
    r.add_argument("--copy-stage", type=_natural, default=0)
    r.add_argument("-o", "--output", required=True)
    return parser


def _query(args: argparse.Namespace) -> object:
    if args.kind == "encode":
        p = limit_point(args.spec)
        return "empty" if p is None else format_rational(p)
    if args.kind == "schedule":
        events = unit.unit_schedule(args.steps) if args.space == "unit" else real.real_schedule(args.steps)
        return [ev.to_json() for ev in events]
    if args.kind == "row":
        if args.depth is not None and args.n >= args.depth:
            raise ValueError(f"row {args.n} is beyond depth {args.depth}")
        if args.space == "unit":
            return unit.unit_row(args.n, args.stage).to_json()
        extra = IntervalSet.points(ev.point for ev in real.real_schedule(args.stage) if ev.row == args.n)
        return (real.a_row(args.n, args.copy_stage) | extra).to_json()
    # decode
    if args.space == "unit":
        rows = unit.section_unit(args.point, args.depth, args.stage)
    else:
        rows = real.section_real(args.point, args.depth, args.stage, args.copy_stage)
    return sorted(rows)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            report = run_verify(args.space, args.depth, args.stage, args.copy_stage)
            if args.json:
                print(json.dumps(report.to_json(), indent=2))
            else:
                print(report.to_text())
            return 0 if report.overall else 1
        if args.command == "query":
            print(json.dumps(_query(args)))
            return 0
        svg = render(args.space, args.depth, args.stage, args.copy_stage)
        try:
            with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(svg)
        except OSError as exc:
            print(f"uuset: cannot write {args.output}: {exc.strerror}", file=sys.stderr)
            return 2
        return 0
    except ValueError as exc:
        print(f"uuset: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""Command line for rendering qoinfo CSVs into figures."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .render import FigureSpec, SchemaError, render


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qoinfo-figures", description="Plot qoinfo experiment CSV output."
    )
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("render", help="render one CSV into an image")
    p.add_argument("--kind", choices=("hist", "timeseries-grid"), required=True)
    p.add_argument("--in", dest="input_csv", type=Path, required=True)
    p.add_argument("--out", type=Path, required=True)
    p.add_argument("--bins", type=int, default=101)
    p.add_argument("--title", default=None)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    spec = FigureSpec(
        input_csv=args.input_csv,
        kind=args.kind,
        output=args.out,
        title=args.title,
        bins=args.bins,
    )
    try:
        report = render(spec)
    except SchemaError as exc:
        print(f"schema error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 1
    summary = {k: v for k, v in report.items() if k != "per_n"}
    print(json.dumps(summary, sort_keys=True))
    return 0


if __name__ == "__main__":
    sys.exit(main())

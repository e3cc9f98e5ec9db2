"""Batch rendering entry point: one figure per invocation."""

from __future__ import annotations

import argparse
import sys

from .figures import KINDS, FigureSpec, render
from .reader import SchemaError


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cocyclelab-plots")
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("render", help="render one figure from experiment CSVs")
    p.add_argument("--kind", choices=KINDS, required=True)
    p.add_argument(
        "--in",
        dest="inputs",
        action="append",
        required=True,
        help="input CSV (repeat to overlay series)",
    )
    p.add_argument("--meta", help="metadata sidecar JSON feeding the title")
    p.add_argument("--title", help="explicit title override")
    p.add_argument("--out", required=True, help="output image path")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        spec = FigureSpec(
            kind=args.kind,
            inputs=args.inputs,
            output=args.out,
            metadata=args.meta,
            title=args.title,
        )
        render(spec)
    except (SchemaError, FileNotFoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())

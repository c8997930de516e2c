"""Command line entry point: render <kind> <input.csv> [<thresholds.json>]
-o <out.png|svg>."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .render import KINDS, FigureSpec, SchemaError, render


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cocontagion-render",
        description="Render a simulation CSV into an image file.",
    )
    parser.add_argument("kind", choices=KINDS, help="figure kind")
    parser.add_argument("input_csv", type=Path, help="schema-tagged CSV input")
    parser.add_argument("thresholds_json", type=Path, nargs="?", default=None,
                        help="optional thresholds JSON (sweep kind: dotted "
                             "vertical line at its eps_star)")
    parser.add_argument("-o", "--output", type=Path, required=True,
                        help="output image (.png or .svg)")
    parser.add_argument("--eps-cap", type=float, default=100.0,
                        help="eta_curve only: clip critical shocks here")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        spec = FigureSpec(
            kind=args.kind,
            input_csv=args.input_csv,
            output=args.output,
            thresholds_json=args.thresholds_json,
            eps_cap=args.eps_cap,
        )
        out = render(spec)
    except (SchemaError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())

"""Command-line renderer: figs plot.toml, or flags mirroring PlotSpec fields.

Exit codes: 0 on success, 2 on plot-description errors (bad spec file, missing
column, empty data), 1 on output I/O errors.
"""
from __future__ import annotations

import argparse
import sys

from ._version import __version__
from .plotspec import PlotSpec, PlotSpecError, load_plotspec
from .render import EmptyDataError, MissingColumnError, render


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="figs",
        description="Render a sweep CSV as a heatmap or line plot.",
    )
    parser.add_argument("--version", action="version", version=f"figs {__version__}")
    parser.add_argument("spec", nargs="?", metavar="PLOTSPEC.toml",
                        help="TOML plot description (alternative to the flags below)")
    parser.add_argument("--csv", help="input CSV table")
    parser.add_argument("--kind", choices=("heatmap", "lines"))
    parser.add_argument("--x", help="x-axis column")
    parser.add_argument("--y", help="y-axis column (heatmap) or grouping column (lines)")
    parser.add_argument("--value", help="value column (cell color / ordinate)")
    parser.add_argument("--out", help="output image path")
    parser.add_argument("--xlabel")
    parser.add_argument("--ylabel")
    parser.add_argument("--title")
    parser.add_argument("--logx", action="store_true")
    return parser


def _assemble(args):
    flag_fields = {
        "csv": args.csv, "kind": args.kind, "x": args.x, "y": args.y,
        "value": args.value, "out": args.out,
    }
    used_flags = [k for k, v in flag_fields.items() if v]
    if args.spec and used_flags:
        raise PlotSpecError(
            f"give a spec file or --{used_flags[0]}-style flags, not both"
        )
    if args.spec:
        spec = load_plotspec(args.spec)
        overrides = {k: v for k, v in (("xlabel", args.xlabel),
                                       ("ylabel", args.ylabel),
                                       ("title", args.title)) if v}
        if args.logx:
            overrides["logx"] = True
        if overrides:
            import dataclasses

            spec = dataclasses.replace(spec, **overrides)
        return spec
    missing = [k for k, v in flag_fields.items() if not v]
    if missing:
        raise PlotSpecError(f"--{missing[0]}: required (no spec file given)")
    return PlotSpec(**flag_fields, xlabel=args.xlabel, ylabel=args.ylabel,
                    title=args.title, logx=args.logx)


def main(argv=None):
    args = _build_parser().parse_args(argv)
    try:
        spec = _assemble(args)
    except PlotSpecError as exc:
        print(f"figs: spec error: {exc}", file=sys.stderr)
        return 2
    try:
        result = render(spec)
    except (PlotSpecError, MissingColumnError, EmptyDataError) as exc:
        print(f"figs: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"figs: {exc}", file=sys.stderr)
        return 1
    located = " ".join(f"{k}={v:g}" for k, v in result.at.items())
    print(f"wrote {result.out}: max {spec.value} = {result.vmax:.6g} at {located}"
          f" ({result.n_masked} masked of {result.n_points})")
    return 0


if __name__ == "__main__":
    sys.exit(main())

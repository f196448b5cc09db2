"""Command-line sweep driver: molomech --preset fig2 --out fig2.csv.

Sweeps come from a named preset or a TOML config file; repeatable --set
overrides then adjust base-system fields.  Exit codes: 0 on success (per-point
numerical failures are recorded in the output, never fatal), 2 on
configuration errors, 1 on output I/O errors.
"""

from __future__ import annotations

import argparse
import sys

try:
    import tomllib
except ModuleNotFoundError:  # Python 3.10
    import tomli as tomllib

from ._version import __version__
from .entanglement import ModePair
from .parameters import SystemSpec
from .pipeline import EFFECTIVE_DETUNING, LASER_DETUNING
from .presets import PRESET_NAMES, preset
from .sweep import ConfigError, SweepSpec, apply_value, run_sweep, write_results
from .sweep import Axis

_PAIR_BY_LABEL = {p.label: p for p in ModePair}
_BASE_FIELDS = {f.name for f in SystemSpec.__dataclass_fields__.values()} | {"n_bar"}
_AXIS_KEYS = {"path", "min", "max", "count", "spacing", "values"}


def _build_base(table):
    unknown = set(table) - {f for f in _BASE_FIELDS if f != "n_bar"}
    if unknown:
        raise ConfigError(f"base.{sorted(unknown)[0]}: unknown field")
    try:
        return SystemSpec(**table)
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"base: {exc}") from exc


def _build_axis(index, table):
    if not isinstance(table, dict):
        raise ConfigError(f"axes[{index}]: expected a table")
    unknown = set(table) - _AXIS_KEYS
    if unknown:
        raise ConfigError(f"axes[{index}].{sorted(unknown)[0]}: unknown key")
    try:
        return Axis(**table)
    except ConfigError as exc:
        raise ConfigError(f"axes[{index}]: {exc}") from exc
    except TypeError as exc:
        raise ConfigError(f"axes[{index}]: {exc}") from exc


def _parse_pairs(items):
    pairs = []
    for item in items:
        label = str(item).strip().lower()
        if label not in _PAIR_BY_LABEL:
            raise ConfigError(
                f"pairs: unknown pair {item!r} (choose from {', '.join(sorted(_PAIR_BY_LABEL))})"
            )
        pairs.append(_PAIR_BY_LABEL[label])
    return tuple(pairs)


def _load_config(path):
    try:
        with open(path, "rb") as fh:
            data = tomllib.load(fh)
    except OSError as exc:
        raise ConfigError(f"config: cannot read {path}: {exc}") from exc
    except tomllib.TOMLDecodeError as exc:
        raise ConfigError(f"config: {path}: {exc}") from exc
    known = {"name", "mode", "pairs", "split_half", "base", "axes", "output"}
    unknown = set(data) - known
    if unknown:
        raise ConfigError(f"{sorted(unknown)[0]}: unknown top-level key")
    if "base" not in data:
        raise ConfigError("base: missing [base] table")
    base = _build_base(data["base"])
    axes = tuple(_build_axis(i, t) for i, t in enumerate(data.get("axes", [])))
    pairs = _parse_pairs(data.get("pairs", list(_PAIR_BY_LABEL)))
    spec = SweepSpec(
        base=base,
        axes=axes,
        pairs=pairs,
        mode=data.get("mode", EFFECTIVE_DETUNING),
        split_half=bool(data.get("split_half", False)),
        name=data.get("name"),
    )
    output = data.get("output", {})
    if not isinstance(output, dict):
        raise ConfigError("output: expected a table")
    return spec, output.get("path"), output.get("format")


def _parse_set(item):
    if "=" not in item:
        raise ConfigError(f"--set {item!r}: expected FIELD=VALUE")
    field, _, raw = item.partition("=")
    field = field.strip()
    raw = raw.strip()
    if field not in _BASE_FIELDS:
        raise ConfigError(f"--set {field}: not a base-system field")
    try:
        value = int(raw)
    except ValueError:
        try:
            value = float(raw)
        except ValueError:
            raise ConfigError(f"--set {field}: expected a number, got {raw!r}") from None
    return field, value


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="molomech",
        description="Run an entanglement parameter sweep and write CSV/JSON results.",
    )
    parser.add_argument("--version", action="version", version=f"molomech {__version__}")
    parser.add_argument("--config", metavar="FILE", help="TOML sweep description")
    parser.add_argument("--preset", choices=PRESET_NAMES, help="named parameter study")
    parser.add_argument(
        "--set",
        dest="overrides",
        action="append",
        default=[],
        metavar="FIELD=VALUE",
        help="override a base-system field (repeatable); n_bar sets both occupations",
    )
    parser.add_argument("--pairs", help="comma-separated subset of a_b1,a_b2,b1_b2")
    parser.add_argument(
        "--mode",
        choices=(EFFECTIVE_DETUNING, LASER_DETUNING),
        help="steady-state parameterization (default from config/preset)",
    )
    parser.add_argument("--out", metavar="PATH", help="output file (default <name>.<format>)")
    parser.add_argument("--format", choices=("csv", "json"), help="output format")
    parser.add_argument("--jobs", type=int, help="worker processes (default $MOLOMECH_JOBS or 1)")
    return parser


def _assemble(args):
    if args.config and args.preset:
        raise ConfigError("give either --config or --preset, not both")
    if args.config:
        spec, out_path, out_format = _load_config(args.config)
    elif args.preset:
        spec = preset(args.preset)
        out_path, out_format = None, None
    else:
        raise ConfigError("one of --config or --preset is required")

    base = spec.base
    for item in args.overrides:
        field, value = _parse_set(item)
        try:
            base = apply_value(base, field, value)
        except (TypeError, ValueError) as exc:
            raise ConfigError(f"--set {field}: {exc}") from exc
    changes = {"base": base}
    if args.pairs:
        changes["pairs"] = _parse_pairs(args.pairs.split(","))
    if args.mode:
        changes["mode"] = args.mode
    import dataclasses

    spec = dataclasses.replace(spec, **changes)

    fmt = args.format or out_format
    path = args.out or out_path
    if fmt is None:
        fmt = "json" if (path or "").endswith(".json") else "csv"
    if path is None:
        path = f"{spec.name or 'sweep'}.{fmt}"
    return spec, path, fmt


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        spec, path, fmt = _assemble(args)
        jobs = args.jobs
    except ConfigError as exc:
        print(f"molomech: config error: {exc}", file=sys.stderr)
        return 2
    try:
        result = run_sweep(spec, jobs=jobs)
    except ConfigError as exc:
        print(f"molomech: config error: {exc}", file=sys.stderr)
        return 2
    try:
        write_results(result, path, fmt)
    except OSError as exc:
        print(f"molomech: {exc}", file=sys.stderr)
        return 1
    n_errors = sum(1 for row in result.rows if row.error)
    n_unstable = sum(1 for row in result.rows if row.stable is False)
    print(f"wrote {path}: {len(result.rows)} rows ({n_unstable} unstable, {n_errors} errors)")
    for label, entry in result.summary.items():
        if entry["max_log_neg"] is None:
            print(f"  {label}: no stable points")
        else:
            coords = entry["at"]
            where = " ".join(f"{k}={v:.6g}" if isinstance(v, float) else f"{k}={v}" for k, v in coords.items())
            print(f"  {label}: max log_neg = {entry['max_log_neg']:.6g}" + (f" at {where}" if where else ""))
    return 0


if __name__ == "__main__":
    sys.exit(main())

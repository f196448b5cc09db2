"""Parameter-grid sweeps with deterministic ordering and CSV/JSON emission.

A sweep is up to three axes over laboratory-unit system fields, evaluated
row-major (last axis fastest) through the full pipeline.  Grid points are
independent, so execution parallelizes over a process pool without changing
the output: rows come back in grid order regardless of worker count.
Unstable points are data, not errors: their entanglement cells stay empty.
"""

from __future__ import annotations

import csv
import dataclasses
import datetime
import itertools
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from ._version import __version__
from .entanglement import ModePair
from .parameters import SystemSpec
from .pipeline import EFFECTIVE_DETUNING, LASER_DETUNING, PointResult, evaluate_system

__all__ = [
    "Axis",
    "SweepSpec",
    "SweepRow",
    "SweepResult",
    "ConfigError",
    "apply_value",
    "run_sweep",
    "columns",
    "write_csv",
    "write_json",
    "write_results",
    "GRID_LIMIT",
    "JOBS_ENV_VAR",
]

GRID_LIMIT = 10_000_000
JOBS_ENV_VAR = "MOLOMECH_JOBS"

# Fields a sweep axis (or --set override) may write.  n_bar fans out to both
# thermal occupations; N and M are rounded to integers at application time.
_INT_FIELDS = frozenset({"N", "M"})
_FIELD_PATHS = frozenset(f.name for f in dataclasses.fields(SystemSpec)) | {"n_bar"}

_FIXED_COLUMNS = (
    "delta",
    "delta_p",
    "a_abs",
    "G1_abs",
    "G2_abs",
    "stable",
    "marginal",
    "spectral_abscissa",
    "branch",
)

_PAIR_ORDER = (ModePair.A_B1, ModePair.A_B2, ModePair.B1_B2)


class ConfigError(ValueError):
    """Invalid sweep configuration; the message names the offending field."""


@dataclass(frozen=True)
class Axis:
    """One sweep dimension: either an explicit value list or an endpoint grid.

    Endpoint grids include both endpoints exactly (figure ticks must be
    reproducible); log spacing requires positive endpoints.
    """

    path: str
    min: float | None = None
    max: float | None = None
    count: int | None = None
    spacing: str = "linear"
    values: tuple | None = None

    def __post_init__(self):
        if self.path not in _FIELD_PATHS:
            raise ConfigError(
                f"axis.path: {self.path!r} is not a sweepable field "
                f"(choose from {', '.join(sorted(_FIELD_PATHS))})"
            )
        if self.values is not None:
            object.__setattr__(self, "values", tuple(float(v) for v in self.values))
            if len(self.values) < 1:
                raise ConfigError(f"axis {self.path}: values list is empty")
            if self.min is not None or self.max is not None or self.count is not None:
                raise ConfigError(
                    f"axis {self.path}: give either values or min/max/count, not both"
                )
            return
        if self.min is None or self.max is None or self.count is None:
            raise ConfigError(f"axis {self.path}: min, max, and count are all required")
        if self.count < 2:
            raise ConfigError(f"axis {self.path}: count must be >= 2, got {self.count}")
        if self.spacing not in ("linear", "log"):
            raise ConfigError(
                f"axis {self.path}: spacing must be 'linear' or 'log', got {self.spacing!r}"
            )
        if self.spacing == "log" and (self.min <= 0 or self.max <= 0):
            raise ConfigError(f"axis {self.path}: log spacing needs positive endpoints")

    def grid(self):
        """The axis values as a list of Python floats, endpoints exact."""
        if self.values is not None:
            return list(self.values)
        if self.spacing == "log":
            vals = np.geomspace(self.min, self.max, self.count)
        else:
            vals = np.linspace(self.min, self.max, self.count)
        vals = [float(v) for v in vals]
        vals[0] = float(self.min)
        vals[-1] = float(self.max)
        return vals

    def __len__(self):
        return len(self.values) if self.values is not None else self.count


@dataclass(frozen=True)
class SweepSpec:
    """A complete sweep description: base system, axes, pairs, solve mode.

    split_half pins M = N // 2 at every grid point after axis values are
    applied (the symmetric-partition scans).  `name` tags the output metadata,
    nothing more.
    """

    base: SystemSpec
    axes: tuple = ()
    pairs: tuple = _PAIR_ORDER
    mode: str = EFFECTIVE_DETUNING
    split_half: bool = False
    name: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "axes", tuple(self.axes))
        object.__setattr__(self, "pairs", tuple(self.pairs))
        if len(self.axes) > 3:
            raise ConfigError(f"axes: at most 3 supported, got {len(self.axes)}")
        paths = [ax.path for ax in self.axes]
        if len(set(paths)) != len(paths):
            raise ConfigError(f"axes: duplicate paths {paths}")
        if not self.pairs:
            raise ConfigError("pairs: at least one mode pair is required")
        for pr in self.pairs:
            if not isinstance(pr, ModePair):
                raise ConfigError(f"pairs: {pr!r} is not a mode pair")
        if self.mode not in (EFFECTIVE_DETUNING, LASER_DETUNING):
            raise ConfigError(
                f"mode: must be {EFFECTIVE_DETUNING!r} or {LASER_DETUNING!r}, got {self.mode!r}"
            )
        total = math.prod(len(ax) for ax in self.axes) if self.axes else 1
        if total > GRID_LIMIT:
            raise ConfigError(f"axes: grid has {total} points, limit is {GRID_LIMIT}")

    def grid_size(self):
        return math.prod(len(ax) for ax in self.axes) if self.axes else 1


def _field_changes(path, value):
    if path not in _FIELD_PATHS:
        raise ConfigError(f"{path!r} is not a writable field")
    if path == "n_bar":
        v = float(value)
        return {"n1": v, "n2": v}
    if path in _INT_FIELDS:
        return {path: int(round(float(value)))}
    return {path: float(value)}


def apply_value(spec, path, value):
    """Return `spec` with one field overridden; understands the n_bar alias."""
    return dataclasses.replace(spec, **_field_changes(path, value))


def _point_spec(sweep, combo):
    # All axis values merge into one replace: intermediate states may violate
    # cross-field constraints (sweeping N below the base M, say) and must not
    # be constructed.
    changes = {}
    for ax, value in zip(sweep.axes, combo):
        changes.update(_field_changes(ax.path, value))
    if sweep.split_half:
        changes["M"] = changes.get("N", sweep.base.N) // 2
    if not changes:
        return sweep.base
    return dataclasses.replace(sweep.base, **changes)


def _task(args):
    sweep, combo = args
    try:
        spec = _point_spec(sweep, combo)
        return evaluate_system(spec, mode=sweep.mode)
    except Exception as exc:  # invalid point spec: an error row, not an abort
        return (
            PointResult(
                params=None,
                steady=None,
                stability=None,
                covariance=None,
                reports=(),
                error=f"{type(exc).__name__}: {exc}",
            ),
        )


@dataclass(frozen=True)
class SweepRow:
    """One output row: axis coordinates plus everything the pipeline produced.

    eta and log_neg map pair labels to values; None means not available
    (unstable point or per-point error), which serializes to an empty cell.
    """

    axis_values: dict
    delta: float | None
    delta_p: float | None
    a_abs: float | None
    G1_abs: float | None
    G2_abs: float | None
    stable: bool | None
    marginal: bool | None
    spectral_abscissa: float | None
    branch: str
    eta: dict
    log_neg: dict
    error: str


def _make_row(sweep, combo, result):
    axis_values = {}
    for ax, value in zip(sweep.axes, combo):
        if ax.path in _INT_FIELDS:
            axis_values[ax.path] = int(round(value))
        else:
            axis_values[ax.path] = value
    ss = result.steady
    rep = result.stability
    eta = {}
    log_neg = {}
    for report in result.reports:
        eta[report.pair.label] = report.eta_minus
        e = report.log_negativity
        log_neg[report.pair.label] = 0.0 if e < 1e-12 else e
    return SweepRow(
        axis_values=axis_values,
        delta=None if ss is None else ss.delta,
        delta_p=None if ss is None else ss.delta_p,
        a_abs=None if ss is None else abs(ss.a_ss),
        G1_abs=None if ss is None else abs(ss.G[0]),
        G2_abs=None if ss is None else abs(ss.G[1]),
        stable=None if rep is None else rep.stable,
        marginal=None if rep is None else rep.marginal,
        spectral_abscissa=None if rep is None else rep.spectral_abscissa,
        branch=ss.branch or "" if ss is not None else "",
        eta=eta,
        log_neg=log_neg,
        error=result.error or "",
    )


@dataclass(frozen=True)
class SweepResult:
    spec: SweepSpec
    rows: tuple
    summary: dict


def _summarize(sweep, rows):
    summary = {}
    for pair in sweep.pairs:
        best = None
        for row in rows:
            value = row.log_neg.get(pair.label)
            if value is None:
                continue
            if best is None or value > best[0]:
                coords = dict(row.axis_values)
                if row.branch:
                    coords["branch"] = row.branch
                best = (value, coords)
        summary[pair.label] = {
            "max_log_neg": None if best is None else best[0],
            "at": None if best is None else best[1],
        }
    return summary


def _resolve_jobs(jobs):
    if jobs is not None:
        return max(1, int(jobs))
    env = os.environ.get(JOBS_ENV_VAR)
    if env:
        try:
            return max(1, int(env))
        except ValueError as exc:
            raise ConfigError(f"{JOBS_ENV_VAR}: not an integer: {env!r}") from exc
    return 1


def run_sweep(sweep, jobs=None):
    """Evaluate every grid point; returns rows in row-major axis order.

    `jobs` > 1 runs points on a process pool (default from MOLOMECH_JOBS, else
    serial).  Laser-detuning points contribute one row per bistable branch.
    Per-point failures land in the row's error column and never abort the run.
    """
    combos = (
        list(itertools.product(*[ax.grid() for ax in sweep.axes]))
        if sweep.axes
        else [()]
    )
    tasks = [(sweep, combo) for combo in combos]
    jobs = _resolve_jobs(jobs)
    if jobs == 1 or len(tasks) < 4:
        outcomes = map(_task, tasks)
    else:
        pool = ProcessPoolExecutor(max_workers=jobs)
        outcomes = pool.map(_task, tasks, chunksize=max(1, len(tasks) // (jobs * 8)))
    rows = []
    try:
        for combo, results in zip(combos, outcomes):
            for result in results:
                rows.append(_make_row(sweep, combo, result))
    finally:
        if jobs > 1 and len(tasks) >= 4:
            pool.shutdown()
    rows = tuple(rows)
    return SweepResult(spec=sweep, rows=rows, summary=_summarize(sweep, rows))


def columns(sweep):
    """CSV header for a sweep: axis columns, fixed columns, per-pair columns."""
    cols = []
    for ax in sweep.axes:
        if ax.path not in cols:
            cols.append(ax.path)
    for name in _FIXED_COLUMNS:
        if name not in cols:
            cols.append(name)
    for pair in _PAIR_ORDER:
        if pair in sweep.pairs:
            cols.append(f"eta_minus_{pair.label}")
            cols.append(f"log_neg_{pair.label}")
    cols.append("error")
    return cols


def _cell(value):
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return format(float(value), ".17g")
    return str(value)


def _row_record(sweep, row):
    record = dict(row.axis_values)
    record.update(
        delta=row.delta,
        delta_p=row.delta_p,
        a_abs=row.a_abs,
        G1_abs=row.G1_abs,
        G2_abs=row.G2_abs,
        stable=row.stable,
        marginal=row.marginal,
        spectral_abscissa=row.spectral_abscissa,
        branch=row.branch,
        error=row.error,
    )
    for pair in sweep.pairs:
        record[f"eta_minus_{pair.label}"] = row.eta.get(pair.label)
        record[f"log_neg_{pair.label}"] = row.log_neg.get(pair.label)
    return record


def _timestamp():
    return datetime.datetime.now(datetime.timezone.utc).isoformat(timespec="seconds")


def _header_comment(sweep):
    pairs = ",".join(p.label for p in sweep.pairs)
    return (
        f"# molomech {__version__} sweep={sweep.name or '-'} "
        f"mode={sweep.mode} pairs={pairs}"
    )


def write_csv(result, path):
    """Write the result table as CSV.

    Two leading comment lines carry provenance; only the second (timestamp)
    varies between identical runs.  Floats use 17 significant digits, so a
    parse of the file reproduces the table bit-for-bit.
    """
    sweep = result.spec
    cols = columns(sweep)
    try:
        with open(path, "w", newline="") as fh:
            fh.write(_header_comment(sweep) + "\n")
            fh.write(f"# timestamp: {_timestamp()}\n")
            writer = csv.writer(fh)
            writer.writerow(cols)
            for row in result.rows:
                record = _row_record(sweep, row)
                writer.writerow([_cell(record.get(c)) for c in cols])
    except OSError as exc:
        raise OSError(f"cannot write CSV to {path}: {exc}") from exc


def _json_ready(value):
    if isinstance(value, (np.integer,)):
        return int(value)
    if isinstance(value, (np.floating,)):
        return float(value)
    return value


def write_json(result, path):
    """Write rows plus a metadata object (spec echo, version, timestamp)."""
    import json

    sweep = result.spec
    cols = columns(sweep)
    meta = {
        "version": __version__,
        "sweep": sweep.name,
        "mode": sweep.mode,
        "pairs": [p.label for p in sweep.pairs],
        "split_half": sweep.split_half,
        "base": dataclasses.asdict(sweep.base),
        "axes": [dataclasses.asdict(ax) for ax in sweep.axes],
        "timestamp": _timestamp(),
    }
    rows = []
    for row in result.rows:
        record = _row_record(sweep, row)
        rows.append({c: _json_ready(record.get(c)) for c in cols})
    payload = {"metadata": meta, "summary": result.summary, "rows": rows}
    try:
        with open(path, "w") as fh:
            json.dump(payload, fh, indent=1)
            fh.write("\n")
    except OSError as exc:
        raise OSError(f"cannot write JSON to {path}: {exc}") from exc


def write_results(result, path, fmt="csv"):
    """Dispatch on format ('csv' or 'json')."""
    if fmt == "csv":
        write_csv(result, path)
    elif fmt == "json":
        write_json(result, path)
    else:
        raise ConfigError(f"format: must be 'csv' or 'json', got {fmt!r}")

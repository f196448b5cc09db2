"""Turn one PlotSpec into an image file.

Rendering is a pure function of the CSV contents: the color scale is fixed to
[0, max of the unmasked values], the maximum and its grid location go into the
title, and nothing time- or environment-dependent enters the figure.
"""
from __future__ import annotations

from dataclasses import dataclass

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np
import pandas as pd

_MASK_COLOR = "lightgray"
_STABLE_COLUMN = "stable"


class MissingColumnError(ValueError):
    """A referenced column is not in the CSV header."""


class EmptyDataError(ValueError):
    """The CSV has no plottable rows."""


@dataclass(frozen=True)
class RenderResult:
    """What was drawn: output path, the value maximum and where it sits."""

    out: str
    kind: str
    vmax: float
    at: dict
    n_points: int
    n_masked: int


def _load_frame(spec):
    try:
        df = pd.read_csv(spec.csv, comment="#")
    except pd.errors.EmptyDataError as exc:
        raise EmptyDataError(f"{spec.csv}: no data") from exc
    for role, name in (("x", spec.x), ("y", spec.y), ("value", spec.value)):
        if name not in df.columns:
            raise MissingColumnError(
                f"{spec.csv}: no column {name!r} (for {role}); "
                f"header has {', '.join(df.columns)}"
            )
    if len(df) == 0:
        raise EmptyDataError(f"{spec.csv}: header only, no rows")
    return df


def _masked_values(df, spec):
    """Value series with unstable rows masked out (NaN), plus the mask."""
    values = pd.to_numeric(df[spec.value], errors="coerce")
    mask = values.isna()
    if _STABLE_COLUMN in df.columns:
        unstable = df[_STABLE_COLUMN].astype(str).str.lower() == "false"
        mask = mask | unstable
    return values.where(~mask), mask


def _maximum(df, values, spec):
    if values.notna().sum() == 0:
        raise EmptyDataError(f"{spec.csv}: every row is masked or empty")
    idx = values.idxmax()
    vmax = float(values.loc[idx])
    return vmax, {spec.x: float(df[spec.x].loc[idx]),
                  spec.y: float(df[spec.y].loc[idx])}


def _title(spec, vmax, at):
    located = ", ".join(f"{k} = {v:g}" for k, v in at.items())
    line = f"max {spec.value} = {vmax:.3g} at {located}"
    return f"{spec.title}\n{line}" if spec.title else line


def _render_heatmap(df, spec, values):
    table = df.assign(_v=values).pivot(index=spec.y, columns=spec.x, values="_v")
    xs = table.columns.to_numpy(dtype=float)
    ys = table.index.to_numpy(dtype=float)
    grid = np.ma.masked_invalid(table.to_numpy(dtype=float))

    vmax, at = _maximum(df, values, spec)
    cmap = plt.get_cmap("viridis").copy()
    cmap.set_bad(_MASK_COLOR)

    fig, ax = plt.subplots(figsize=(6.0, 4.5))
    mesh = ax.pcolormesh(xs, ys, grid, shading="nearest", cmap=cmap,
                         vmin=0.0, vmax=vmax if vmax > 0.0 else 1.0)
    fig.colorbar(mesh, ax=ax, label=spec.value)
    ax.set_xlabel(spec.xlabel or spec.x)
    ax.set_ylabel(spec.ylabel or spec.y)
    ax.set_title(_title(spec, vmax, at))
    if spec.logx:
        ax.set_xscale("log")
    fig.tight_layout()
    fig.savefig(spec.out)
    plt.close(fig)
    return vmax, at, int(grid.mask.sum()) if grid.mask is not np.ma.nomask else 0


def _render_lines(df, spec, values):
    vmax, at = _maximum(df, values, spec)
    fig, ax = plt.subplots(figsize=(6.0, 4.5))
    groups = df.assign(_v=values).sort_values([spec.y, spec.x])
    n_masked = int(values.isna().sum())
    for key, sub in groups.groupby(spec.y, sort=True):
        ax.plot(sub[spec.x].to_numpy(dtype=float), sub["_v"].to_numpy(dtype=float),
                marker=".", label=f"{spec.y} = {key:g}")
    ax.set_xlabel(spec.xlabel or spec.x)
    ax.set_ylabel(spec.ylabel or spec.value)
    ax.set_ylim(bottom=0.0)
    if spec.logx:
        ax.set_xscale("log")
    ax.legend(fontsize="small")
    ax.set_title(_title(spec, vmax, at))
    fig.tight_layout()
    fig.savefig(spec.out)
    plt.close(fig)
    return vmax, at, n_masked


def render(spec):
    """Draw the figure described by `spec`; returns a :class:`RenderResult`.

    Unstable rows (stable = false) and empty value cells are masked: gray
    cells on heatmaps, gaps on line plots. Masked cells never contribute to
    the color normalization or the reported maximum.
    """
    df = _load_frame(spec)
    values, _ = _masked_values(df, spec)
    if spec.kind == "heatmap":
        vmax, at, n_masked = _render_heatmap(df, spec, values)
    else:
        vmax, at, n_masked = _render_lines(df, spec, values)
    return RenderResult(out=spec.out, kind=spec.kind, vmax=vmax, at=at,
                        n_points=len(df), n_masked=n_masked)

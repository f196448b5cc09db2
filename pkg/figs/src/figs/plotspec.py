"""Plot descriptions: what to read, which columns, what to draw."""
from __future__ import annotations

from dataclasses import dataclass, fields

try:
    import tomllib
except ModuleNotFoundError:  # Python 3.10
    import tomli as tomllib


class PlotSpecError(ValueError):
    """Invalid plot description; the message names the offending key."""


_KINDS = ("heatmap", "lines")


@dataclass(frozen=True)
class PlotSpec:
    """One figure: a CSV table, three column roles, and an output image.

    For a heatmap, x and y are the two grid axes and `value` fills the cells.
    For lines, x is the abscissa, `value` the ordinate, and y the grouping
    column: one curve per distinct y value.
    """

    csv: str
    kind: str
    x: str
    y: str
    value: str
    out: str
    xlabel: str | None = None
    ylabel: str | None = None
    title: str | None = None
    logx: bool = False

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise PlotSpecError(
                f"kind: must be one of {', '.join(_KINDS)}, got {self.kind!r}"
            )
        for name in ("csv", "x", "y", "value", "out"):
            if not getattr(self, name):
                raise PlotSpecError(f"{name}: required")


def load_plotspec(path):
    """Read a PlotSpec from a TOML file; unknown keys are rejected."""
    try:
        with open(path, "rb") as fh:
            data = tomllib.load(fh)
    except OSError as exc:
        raise PlotSpecError(f"cannot read {path}: {exc}") from exc
    except tomllib.TOMLDecodeError as exc:
        raise PlotSpecError(f"{path}: {exc}") from exc
    known = {f.name for f in fields(PlotSpec)}
    unknown = set(data) - known
    if unknown:
        raise PlotSpecError(f"{sorted(unknown)[0]}: unknown key")
    missing = {"csv", "kind", "x", "y", "value", "out"} - set(data)
    if missing:
        raise PlotSpecError(f"{sorted(missing)[0]}: required")
    return PlotSpec(**data)

"""Render sweep CSV tables as heatmaps and line plots."""

from ._version import __version__
from .plotspec import PlotSpec, PlotSpecError, load_plotspec
from .render import EmptyDataError, MissingColumnError, RenderResult, render

__all__ = [
    "__version__",
    "PlotSpec",
    "PlotSpecError",
    "load_plotspec",
    "render",
    "RenderResult",
    "MissingColumnError",
    "EmptyDataError",
]

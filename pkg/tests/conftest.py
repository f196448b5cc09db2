"""Shared fixtures: cached preset grids and random physical covariance states."""
from __future__ import annotations

import itertools
import time

import numpy as np
import pytest
from scipy.linalg import expm

from molomech.dynamics import symplectic_form
from molomech.pipeline import evaluate_system
from molomech.presets import preset
from molomech.sweep import _point_spec

# Evaluated preset grids are shared across the whole session because several
# acceptance criteria read the same grid.
_GRIDS: dict[str, tuple] = {}


def _evaluate_grid(name: str):
    sweep = preset(name)
    combos = (
        list(itertools.product(*[ax.grid() for ax in sweep.axes]))
        if sweep.axes
        else [()]
    )
    start = time.perf_counter()
    points = []
    for combo in combos:
        spec = _point_spec(sweep, combo)
        points.append((combo, evaluate_system(spec, mode=sweep.mode)))
    elapsed = time.perf_counter() - start
    return sweep, points, elapsed


@pytest.fixture(scope="session")
def preset_grid():
    """Callable returning (sweep, [(combo, results)], serial_elapsed_seconds)."""

    def get(name: str):
        if name not in _GRIDS:
            _GRIDS[name] = _evaluate_grid(name)
        return _GRIDS[name]

    return get


def report_for(result, pair):
    """Pull the report for one mode pair out of a PointResult."""
    for report in result.reports:
        if report.pair is pair:
            return report
    raise AssertionError(f"no report for {pair}")


def random_physical_covariance(rng, n_modes: int = 2) -> np.ndarray:
    """Random covariance matrix of a physical Gaussian state.

    Built as S diag(nu) S^T with S symplectic (exponential of a Hamiltonian
    generator) and symplectic eigenvalues nu >= 1/2, so the uncertainty
    relation holds by construction.
    """
    dim = 2 * n_modes
    omega = symplectic_form(n_modes)
    h = rng.standard_normal((dim, dim))
    s = expm(omega @ (0.2 * (h + h.T)))
    nu = 0.5 + rng.exponential(0.4, size=n_modes)
    d = np.diag(np.repeat(nu, 2))
    v = s @ d @ s.T
    return 0.5 * (v + v.T)

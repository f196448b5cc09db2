"""Bipartite Gaussian entanglement from covariance matrices.

For a two-mode Gaussian state with covariance V = [[C, C_cd], [C_cd^T, D]]
(vacuum variance 1/2), the smaller symplectic eigenvalue of the partial
transpose has the closed form

    eta_minus = sqrt((Sigma - sqrt(Sigma^2 - 4 det V)) / 2),
    Sigma = det C + det D - 2 det C_cd,

and the logarithmic negativity is E = max(0, -ln(2 eta_minus)).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "ModePair",
    "reduce_covariance",
    "eta_minus",
    "pair_negativity",
    "log_negativity",
    "EntanglementReport",
    "UnphysicalCovarianceError",
]

# Radicands this far below zero cannot be roundoff on a valid state.
_RADICAND_FLOOR = -1e-12


class UnphysicalCovarianceError(ValueError):
    """The covariance matrix violates the structural requirements of a Gaussian state."""


class ModePair(enum.Enum):
    """Bipartitions of the three-mode state, as quadrature index sets into V.

    Indices follow the global quadrature order (X_B1, Y_B1, X_B2, Y_B2,
    X_a, Y_a), so the molecular block always precedes the cavity block in
    the reduced matrix.
    """

    A_B1 = (0, 1, 4, 5)
    A_B2 = (2, 3, 4, 5)
    B1_B2 = (0, 1, 2, 3)

    @property
    def label(self):
        return self.name.lower()


def reduce_covariance(v, pair):
    """4x4 covariance of the two modes selected by `pair` from the 6x6 state."""
    idx = list(pair.value)
    return v[np.ix_(idx, idx)]


def _block_invariants(v4):
    """(det_c, det_d, det_cd, det_v, sigma) of a two-mode covariance."""
    det_c = float(np.linalg.det(v4[0:2, 0:2]))
    det_d = float(np.linalg.det(v4[2:4, 2:4]))
    det_cd = float(np.linalg.det(v4[0:2, 2:4]))
    det_v = float(np.linalg.det(v4))
    sigma = det_c + det_d - 2.0 * det_cd
    return det_c, det_d, det_cd, det_v, sigma


def _eta_from_invariants(det_v, sigma):
    disc = sigma * sigma - 4.0 * det_v
    if disc < _RADICAND_FLOOR:
        raise UnphysicalCovarianceError(
            f"negative discriminant {disc:.3e} in eta_minus (Sigma={sigma:.6e})"
        )
    radicand = (sigma - math.sqrt(max(disc, 0.0))) / 2.0
    if radicand < _RADICAND_FLOOR:
        raise UnphysicalCovarianceError(
            f"negative squared eigenvalue {radicand:.3e} in eta_minus"
        )
    return math.sqrt(max(radicand, 0.0))


def eta_minus(v4):
    """Smaller partial-transpose symplectic eigenvalue of a two-mode covariance.

    Values below 1/2 witness entanglement.  Slightly negative radicands from
    roundoff are clamped to zero; radicands below -1e-12 raise
    :class:`UnphysicalCovarianceError` since they cannot come from a valid
    state.
    """
    _, _, _, det_v, sigma = _block_invariants(v4)
    return _eta_from_invariants(det_v, sigma)


def pair_negativity(v4):
    """(eta_minus, E) for a two-mode covariance; E = max(0, -ln(2 eta_minus))."""
    eta = eta_minus(v4)
    if eta <= 0.0:
        raise UnphysicalCovarianceError(f"eta_minus = {eta} is not positive")
    return eta, max(0.0, -math.log(2.0 * eta))


@dataclass(frozen=True)
class EntanglementReport:
    """Entanglement verdict for one bipartition of the steady state."""

    pair: ModePair
    eta_minus: float
    log_negativity: float
    sigma: float
    det_c: float
    det_d: float
    det_cd: float
    stable: bool = True


def log_negativity(v, pair):
    """Logarithmic negativity of one bipartition of the 6x6 steady covariance."""
    v4 = reduce_covariance(v, pair)
    det_c, det_d, det_cd, det_v, sigma = _block_invariants(v4)
    eta = _eta_from_invariants(det_v, sigma)
    if eta <= 0.0:
        raise UnphysicalCovarianceError(f"eta_minus = {eta} is not positive")
    return EntanglementReport(
        pair=pair,
        eta_minus=eta,
        log_negativity=max(0.0, -math.log(2.0 * eta)),
        sigma=sigma,
        det_c=det_c,
        det_d=det_d,
        det_cd=det_cd,
    )

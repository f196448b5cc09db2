"""Linearized Gaussian fluctuation dynamics around the classical steady state.

Quadrature order (X_B1, Y_B1, X_B2, Y_B2, X_a, Y_a) with vacuum variance 1/2.
The covariance matrix obeys dV/dt = A V + V A^T + Q; its fixed point solves the
Lyapunov equation A V + V A^T = -Q, handled here by the Kronecker-product
linear solve (the 6x6 and 4x4 systems in play make that exact and cheap).
:func:`integrate_covariance` provides an independent time-domain route to the
same fixed point for cross-checking.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "build_drift",
    "build_diffusion",
    "StabilityReport",
    "stability",
    "solve_lyapunov",
    "lyapunov_residual",
    "integrate_covariance",
    "symplectic_eigenvalues",
    "symplectic_form",
    "UnstableSystemError",
    "CovarianceDivergenceError",
]

STABILITY_EPS = 1e-10
MARGINAL_BAND = 1e-6


class UnstableSystemError(RuntimeError):
    """The drift matrix has a nonnegative spectral abscissa; no steady covariance exists."""


class CovarianceDivergenceError(RuntimeError):
    """Time integration of the covariance blew up (entries exceeded the guard)."""


def build_drift(ss, p):
    """6x6 drift matrix of the linearized dynamics at steady state `ss`.

    The vibrational blocks rotate at omega_v and damp at gamma_l; the cavity
    block rotates at the effective detuning and damps at kappa; the real and
    imaginary parts of the enhanced couplings G_l mix the Y quadratures of the
    modes with the cavity.
    """
    g1, g2 = ss.G
    w = p.omega_v
    a = np.zeros((6, 6))
    a[0, 0] = -p.gamma1
    a[0, 1] = w
    a[1, 0] = -w
    a[1, 1] = -p.gamma1
    a[1, 4] = -2.0 * g1.real
    a[1, 5] = -2.0 * g1.imag
    a[2, 2] = -p.gamma2
    a[2, 3] = w
    a[3, 2] = -w
    a[3, 3] = -p.gamma2
    a[3, 4] = -2.0 * g2.real
    a[3, 5] = -2.0 * g2.imag
    a[4, 0] = 2.0 * g1.imag
    a[4, 2] = 2.0 * g2.imag
    a[4, 4] = -p.kappa
    a[4, 5] = ss.delta
    a[5, 0] = -2.0 * g1.real
    a[5, 2] = -2.0 * g2.real
    a[5, 4] = -ss.delta
    a[5, 5] = -p.kappa
    return a


def build_diffusion(p):
    """Diagonal diffusion matrix: (2 n_l + 1) gamma_l per vibrational quadrature, kappa per cavity one."""
    d1 = (2.0 * p.n1 + 1.0) * p.gamma1
    d2 = (2.0 * p.n2 + 1.0) * p.gamma2
    return np.diag([d1, d1, d2, d2, p.kappa, p.kappa])


@dataclass(frozen=True)
class StabilityReport:
    stable: bool
    spectral_abscissa: float
    marginal: bool


def stability(a):
    """Classify the drift matrix by its spectral abscissa.

    stable requires max Re(lambda) < -1e-10; within 1e-6 of zero the point is
    flagged marginal so sweep consumers can treat the answer as unresolved.
    """
    abscissa = float(np.max(np.linalg.eigvals(a).real))
    return StabilityReport(
        stable=abscissa < -STABILITY_EPS,
        spectral_abscissa=abscissa,
        marginal=abs(abscissa) < MARGINAL_BAND,
    )


def solve_lyapunov(a, q):
    """Steady covariance V from A V + V A^T = -Q, via the Kronecker linear system.

    Raises :class:`UnstableSystemError` when the drift is not strictly stable.
    The result is symmetrized to remove roundoff skew.
    """
    report = stability(a)
    if not report.stable:
        raise UnstableSystemError(
            f"spectral abscissa {report.spectral_abscissa:.3e} >= -{STABILITY_EPS:.0e}"
        )
    n = a.shape[0]
    eye = np.eye(n)
    lhs = np.kron(eye, a) + np.kron(a, eye)
    v = np.linalg.solve(lhs, -q.flatten(order="F")).reshape((n, n), order="F")
    return 0.5 * (v + v.T)


def lyapunov_residual(a, q, v):
    """max |A V + V A^T + Q|: the defect of a claimed steady covariance."""
    return float(np.max(np.abs(a @ v + v @ a.T + q)))


def integrate_covariance(a, q, t_final, dt, v0=None):
    """Integrate dV/dt = A V + V A^T + Q by fixed-step RK4 from V0 (default vacuum).

    Symmetrizes after every step.  Raises :class:`CovarianceDivergenceError`
    once any entry exceeds 1e12, which an unstable drift will trigger quickly.
    """
    n = a.shape[0]
    v = np.eye(n) / 2.0 if v0 is None else v0.copy()

    def rhs(m):
        return a @ m + m @ a.T + q

    steps = int(round(t_final / dt))
    for _ in range(steps):
        k1 = rhs(v)
        k2 = rhs(v + 0.5 * dt * k1)
        k3 = rhs(v + 0.5 * dt * k2)
        k4 = rhs(v + dt * k3)
        v = v + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        v = 0.5 * (v + v.T)
        if np.max(np.abs(v)) > 1e12:
            raise CovarianceDivergenceError("covariance integration diverged (|V| > 1e12)")
    return v


def symplectic_form(n_modes):
    """Block-diagonal symplectic form, [[0, 1], [-1, 0]] per mode."""
    block = np.array([[0.0, 1.0], [-1.0, 0.0]])
    out = np.zeros((2 * n_modes, 2 * n_modes))
    for k in range(n_modes):
        out[2 * k : 2 * k + 2, 2 * k : 2 * k + 2] = block
    return out


def symplectic_eigenvalues(v):
    """Symplectic spectrum of a covariance matrix: moduli of eig(i Omega V), one per pair.

    A physical state has every value >= 1/2 in the vacuum-variance-1/2
    convention.  Returned ascending.
    """
    n_modes = v.shape[0] // 2
    omega = symplectic_form(n_modes)
    eigs = np.sort(np.abs(np.linalg.eigvals(1j * omega @ v)))
    return eigs[::2]

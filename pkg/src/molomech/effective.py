"""Adiabatic elimination of the cavity: reduced two-mode vibrational model.

When the cavity responds fast (omega_v >> kappa >> |G_l|, gamma_l) it can be
eliminated, leaving each collective mode with an optically shifted frequency
Omega_l = omega_l - omega_{l,opt} and broadened decay Gamma_l = gamma_l +
gamma_{l,opt}, plus an effective vibration-vibration coupling.  The reduced
model is a diagnostic: the full six-quadrature model remains the source of
truth, and :func:`compare_with_full` quantifies the agreement.
"""

from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass

import numpy as np

from .dynamics import solve_lyapunov
from .entanglement import ModePair, log_negativity, pair_negativity

__all__ = [
    "RegimeReport",
    "RegimeWarning",
    "EffectiveParams",
    "ComparisonReport",
    "effective_params",
    "reduced_drift",
    "reduced_diffusion",
    "compare_with_full",
    "COMPARISON_COLUMNS",
]


class RegimeWarning(UserWarning):
    """The reduced model is being evaluated outside its validity regime."""


@dataclass(frozen=True)
class RegimeReport:
    """Dimensionless ratios governing the adiabatic-elimination accuracy.

    `ok` requires the resonant red-detuned hierarchy: detuning within 1e-6 of
    omega_v, kappa/omega_v <= 0.1, and |G_l|, gamma_l each <= 0.2 kappa.
    """

    kappa_ratio: float
    coupling_ratio: tuple
    damping_ratio: tuple
    detuning_mismatch: float
    ok: bool


@dataclass(frozen=True)
class EffectiveParams:
    """Reduced-model parameters at one steady state.

    G_eff_1 and G_eff_2 are the exact coefficients of delta_B2^dag and delta_B2
    in the eliminated equation of motion; G_approx is their resonant
    single-coupling approximation (i/2omega_v - 1/kappa) G1 G2.  `rotation` is
    the drive phase removed so the enhanced couplings G_rotated are real.
    """

    Omega_l: tuple
    Gamma_l: tuple
    omega_opt: tuple
    gamma_opt: tuple
    G_eff_1: complex
    G_eff_2: complex
    G_approx: complex
    rotation: float
    G_rotated: tuple
    delta: float
    validity: RegimeReport


def _regime(p, delta, g_rot):
    kappa_ratio = p.kappa / p.omega_v
    coupling_ratio = tuple(abs(g) / p.kappa for g in g_rot)
    damping_ratio = (p.gamma1 / p.kappa, p.gamma2 / p.kappa)
    mismatch = abs(delta - p.omega_v) / p.omega_v
    ok = (
        mismatch <= 1e-6
        and kappa_ratio <= 0.1
        and max(coupling_ratio) <= 0.2
        and max(damping_ratio) <= 0.2
    )
    return RegimeReport(
        kappa_ratio=kappa_ratio,
        coupling_ratio=coupling_ratio,
        damping_ratio=damping_ratio,
        detuning_mismatch=mismatch,
        ok=ok,
    )


def effective_params(ss, p):
    """Optical shifts, induced damping, and effective couplings at steady state `ss`.

    The drive phase arg(a_ss) is rotated away first, making the enhanced
    couplings real (the elimination formulas assume this); the vibrational
    resonances are omega_1 = omega_2 = omega_v.
    """
    phi = cmath.phase(ss.a_ss)
    g_rot = tuple(g * abs(ss.a_ss) for g in (p.g1, p.g2))
    delta = ss.delta
    w = p.omega_v
    lor_minus = p.kappa**2 + (delta - w) ** 2
    lor_plus = p.kappa**2 + (delta + w) ** 2

    omega_opt = []
    gamma_opt = []
    for g in g_rot:
        omega_opt.append(g**2 * (delta + w) / lor_plus + g**2 * (delta - w) / lor_minus)
        gamma_opt.append(g**2 * p.kappa / lor_minus - g**2 * p.kappa / lor_plus)
    product = g_rot[0] * g_rot[1]
    g_eff_1 = (
        product * (p.kappa + 1j * (delta - w)) / lor_minus
        - product * (p.kappa - 1j * (delta + w)) / lor_plus
    )
    g_eff_2 = (
        product * (p.kappa + 1j * (delta + w)) / lor_plus
        - product * (p.kappa - 1j * (delta - w)) / lor_minus
    )
    g_approx = (1j / (2.0 * w) - 1.0 / p.kappa) * product
    return EffectiveParams(
        Omega_l=(w - omega_opt[0], w - omega_opt[1]),
        Gamma_l=(p.gamma1 + gamma_opt[0], p.gamma2 + gamma_opt[1]),
        omega_opt=tuple(omega_opt),
        gamma_opt=tuple(gamma_opt),
        G_eff_1=g_eff_1,
        G_eff_2=g_eff_2,
        G_approx=g_approx,
        rotation=phi,
        G_rotated=g_rot,
        delta=delta,
        validity=_regime(p, delta, g_rot),
    )


def _regime_check(eff):
    if not eff.validity.ok:
        warnings.warn(
            "reduced model evaluated outside its validity regime "
            f"(kappa/omega_v={eff.validity.kappa_ratio:.3g}, "
            f"|G|/kappa={max(eff.validity.coupling_ratio):.3g}, "
            f"gamma/kappa={max(eff.validity.damping_ratio):.3g}, "
            f"|delta-omega_v|/omega_v={eff.validity.detuning_mismatch:.3g})",
            RegimeWarning,
            stacklevel=3,
        )


def reduced_drift(eff):
    """4x4 drift of the eliminated model, quadrature order (X1, Y1, X2, Y2).

    Mode l precesses at Omega_l and decays at Gamma_l; the modes couple through
    G_approx, whose real part enters the Y rows and imaginary part the X rows.
    Warns (never raises) outside the validity regime: comparison scans probe
    the breakdown on purpose.
    """
    _regime_check(eff)
    o1, o2 = eff.Omega_l
    c1, c2 = eff.Gamma_l
    gre = eff.G_approx.real
    gim = eff.G_approx.imag
    return np.array(
        [
            [-c1, o1, 0.0, -2.0 * gim],
            [-o1, -c1, 0.0, 2.0 * gre],
            [0.0, -2.0 * gim, -c2, o2],
            [0.0, 2.0 * gre, -o2, -c2],
        ]
    )


def reduced_diffusion(eff, p):
    """4x4 diffusion of the eliminated model.

    Each mode keeps its thermal diffusion (2 n_l + 1) gamma_l and gains the
    cavity-noise contribution sampled at its own resonance: the two Lorentzian
    sideband rates G_l^2 kappa / (kappa^2 + (delta -+ omega_v)^2), whose
    difference is the induced damping gamma_{l,opt} and whose sum is the
    induced diffusion.  The shared cavity noise correlates the two modes, so
    the (X1, X2) and (Y1, Y2) entries carry the geometric-mean cross term,
    whose sign follows sign(G1 G2).
    """
    _regime_check(eff)
    w = p.omega_v
    lor_minus = p.kappa**2 + (eff.delta - w) ** 2
    lor_plus = p.kappa**2 + (eff.delta + w) ** 2
    sample = p.kappa / lor_minus + p.kappa / lor_plus
    g1, g2 = eff.G_rotated
    d1 = (2.0 * p.n1 + 1.0) * p.gamma1 + g1**2 * sample
    d2 = (2.0 * p.n2 + 1.0) * p.gamma2 + g2**2 * sample
    cross = g1 * g2 * sample
    q = np.diag([d1, d1, d2, d2])
    q[0, 2] = q[2, 0] = cross
    q[1, 3] = q[3, 1] = cross
    return q


COMPARISON_COLUMNS = (
    "kappa_ratio",
    "coupling_ratio_1",
    "coupling_ratio_2",
    "damping_ratio_1",
    "damping_ratio_2",
    "eigen_deviation",
    "block_deviation",
    "log_neg_full",
    "log_neg_reduced",
)


@dataclass(frozen=True)
class ComparisonReport:
    """Reduced-vs-full agreement at one operating point.

    eigen_deviation: worst relative distance between the four slow eigenvalues
    of the full drift and the reduced spectrum.  block_deviation: worst
    covariance-entry mismatch on the vibrational block, relative to that
    block's largest entry (the drive-phase rotation touches only the cavity
    quadratures, so the blocks are directly comparable).
    """

    eigen_deviation: float
    block_deviation: float
    log_neg_full: float
    log_neg_reduced: float
    validity: RegimeReport

    def to_row(self):
        v = self.validity
        return (
            v.kappa_ratio,
            v.coupling_ratio[0],
            v.coupling_ratio[1],
            v.damping_ratio[0],
            v.damping_ratio[1],
            self.eigen_deviation,
            self.block_deviation,
            self.log_neg_full,
            self.log_neg_reduced,
        )


def _match_spectra(slow, reduced):
    # Greedy pairing by distance; spectra are 4 points, exact assignment is overkill.
    slow = list(slow)
    worst = 0.0
    for lam in reduced:
        j = int(np.argmin([abs(lam - s) for s in slow]))
        ref = slow.pop(j)
        worst = max(worst, abs(lam - ref) / max(abs(ref), 1e-300))
    return worst


def compare_with_full(p, ss):
    """Run both models at one steady state and report the deviations.

    Uses the full six-quadrature model as the oracle: slow spectrum, the
    vibrational covariance block, and the vibration-vibration logarithmic
    negativity.
    """
    from .dynamics import build_diffusion, build_drift

    a_full = build_drift(ss, p)
    q_full = build_diffusion(p)
    v_full = solve_lyapunov(a_full, q_full)

    eff = effective_params(ss, p)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", RegimeWarning)
        a_red = reduced_drift(eff)
        q_red = reduced_diffusion(eff, p)
    v_red = solve_lyapunov(a_red, q_red)

    full_eigs = np.linalg.eigvals(a_full)
    slow = sorted(full_eigs, key=lambda lam: abs(lam.real))[:4]
    eigen_dev = _match_spectra(slow, np.linalg.eigvals(a_red))

    block = v_full[0:4, 0:4]
    block_dev = float(np.max(np.abs(v_red - block)) / np.max(np.abs(block)))

    e_full = log_negativity(v_full, ModePair.B1_B2).log_negativity
    _, e_red = pair_negativity(v_red)
    return ComparisonReport(
        eigen_deviation=eigen_dev,
        block_deviation=block_dev,
        log_neg_full=e_full,
        log_neg_reduced=e_red,
        validity=eff.validity,
    )

"""Classical steady state of the driven cavity-molecule system.

The mean cavity amplitude obeys a self-consistency condition: each collective
vibrational mode is displaced in proportion to the intracavity intensity
I = |a_ss|^2, and the displacement pulls the effective cavity detuning.  Two
entry points cover the two natural parameterizations:

* :func:`solve_effective_detuning` - the effective detuning delta is prescribed
  (the figure-style sweeps); the steady state is then unique and explicit.
* :func:`solve_laser_detuning` - the bare laser detuning delta_p is prescribed;
  I solves a cubic that admits one or three positive roots (optical
  bistability), and every real branch is returned.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "SteadyState",
    "solve_effective_detuning",
    "solve_laser_detuning",
    "pulling_coefficient",
    "linearized_couplings",
]


@dataclass(frozen=True)
class SteadyState:
    """Classical fixed point: cavity amplitude, mode displacements, couplings.

    G = (G1, G2) are the linearized (intensity-enhanced) couplings g_l * a_ss
    entering the fluctuation dynamics.  `branch` tags bistable solutions
    ("low"/"middle"/"high" by intensity); None when delta was prescribed.
    """

    a_ss: complex
    B_ss: tuple
    delta: float
    delta_p: float
    G: tuple
    branch: str | None = None

    @property
    def intensity(self):
        return abs(self.a_ss) ** 2


def pulling_coefficient(p):
    """eta = sum_l 2 g_l^2 omega_v / (gamma_l^2 + omega_v^2): detuning pull per photon."""
    w = p.omega_v
    return (
        2.0 * p.g1**2 * w / (p.gamma1**2 + w**2)
        + 2.0 * p.g2**2 * w / (p.gamma2**2 + w**2)
    )


def _mode_displacement(g_l, gamma_l, intensity, omega_v):
    # B_l = -i g_l I / (i omega_v + gamma_l); zero-coupling modes stay at rest.
    if g_l == 0.0:
        return 0.0 + 0.0j
    return -1j * g_l * intensity / (1j * omega_v + gamma_l)


def _assemble(p, delta, delta_p, a_ss, branch=None):
    intensity = abs(a_ss) ** 2
    b1 = _mode_displacement(p.g1, p.gamma1, intensity, p.omega_v)
    b2 = _mode_displacement(p.g2, p.gamma2, intensity, p.omega_v)
    return SteadyState(
        a_ss=a_ss,
        B_ss=(b1, b2),
        delta=delta,
        delta_p=delta_p,
        G=(p.g1 * a_ss, p.g2 * a_ss),
        branch=branch,
    )


def solve_effective_detuning(p):
    """Steady state at prescribed effective detuning p.delta.

    a_ss = -i Omega / (i delta + kappa) is explicit; the bare detuning is then
    reconstructed as delta_p = delta + eta I.
    """
    if p.delta is None:
        raise ValueError("ScaledParams.delta must be set for the effective-detuning solve")
    a_ss = -1j * p.Omega / (1j * p.delta + p.kappa)
    delta_p = p.delta + pulling_coefficient(p) * abs(a_ss) ** 2
    return _assemble(p, p.delta, delta_p, a_ss)


def solve_laser_detuning(p, delta_p):
    """All steady states at prescribed bare detuning delta_p, ascending intensity.

    I solves eta^2 I^3 - 2 delta_p eta I^2 + (delta_p^2 + kappa^2) I = |Omega|^2.
    Roots from the companion matrix are polished by Newton iteration to 1e-14
    relative and deduplicated at 1e-10 relative.  Branch tags: a single root is
    "low"; two roots (a fold point) are "low"/"high"; three are
    "low"/"middle"/"high".
    """
    eta = pulling_coefficient(p)
    drive = abs(p.Omega) ** 2
    if eta == 0.0:
        roots = [drive / (delta_p**2 + p.kappa**2)]
    else:
        coeffs = [eta**2, -2.0 * delta_p * eta, delta_p**2 + p.kappa**2, -drive]
        raw = np.roots(coeffs)
        scale_ = max(abs(r) for r in raw) or 1.0
        roots = []
        for r in raw:
            if abs(r.imag) > 1e-8 * scale_:
                continue
            x = float(r.real)
            if x < 0.0:
                continue
            # Newton polish against the exact cubic.
            for _ in range(60):
                f = ((eta * x - 2.0 * delta_p) * eta * x + delta_p**2 + p.kappa**2) * x - drive
                df = 3.0 * eta**2 * x**2 - 4.0 * delta_p * eta * x + delta_p**2 + p.kappa**2
                if df == 0.0:
                    break
                step = f / df
                x -= step
                if abs(step) <= 1e-14 * max(abs(x), 1e-300):
                    break
            if x >= 0.0:
                roots.append(x)
        roots.sort()
        deduped = []
        for x in roots:
            if deduped and abs(x - deduped[-1]) <= 1e-10 * max(x, 1e-300):
                continue
            deduped.append(x)
        roots = deduped
    if not roots:
        raise RuntimeError(
            f"no physical steady state found at delta_p={delta_p} (drive {drive})"
        )
    tags = {1: ("low",), 2: ("low", "high"), 3: ("low", "middle", "high")}[len(roots)]
    out = []
    for intensity, tag in zip(roots, tags):
        delta = delta_p - eta * intensity
        # Fix the amplitude phase from the input-output relation at this delta.
        a_ss = -1j * p.Omega / (1j * delta + p.kappa)
        # The modulus is governed by the cubic root, not floating-point cancellation.
        if abs(a_ss) > 0.0:
            a_ss *= np.sqrt(intensity) / abs(a_ss)
        out.append(_assemble(p, delta, delta_p, a_ss, branch=tag))
    return out


def linearized_couplings(ss, p):
    """(G1, G2) = (g1 a_ss, g2 a_ss): enhanced couplings for the fluctuation dynamics."""
    return (p.g1 * ss.a_ss, p.g2 * ss.a_ss)

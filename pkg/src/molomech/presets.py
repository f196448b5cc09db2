"""Named sweep presets reproducing the headline parameter studies.

Two base parameter sets are in play (laboratory units, frequencies as
rate/2pi).  The cavity-vibration studies use nu_v = 30 THz, kappa = 10 THz
(kappa/omega_v = 1/3), gamma_l = 0.003 THz (1e-4 omega_v), g_v = 30 GHz,
N = 100, M = 0, n_bar = 0.01 (T near 312 K).  The vibration-vibration studies
raise the damping to gamma_l = 9 THz (0.3 omega_v), split the ensemble
(M = 50), drive harder (Omega = 60 omega_v) at delta = 2 omega_v, and cool to
n_bar = 0.001 (T near 210 K).  Heatmap axis ranges are documented here and are
plain data: override any of them through the config file or --set.
"""

from __future__ import annotations

import dataclasses

from .entanglement import ModePair
from .parameters import SystemSpec
from .sweep import Axis, ConfigError, SweepSpec

__all__ = ["preset", "PRESET_NAMES", "CAVITY_VIBRATION_BASE", "VIBRATION_VIBRATION_BASE"]

CAVITY_VIBRATION_BASE = SystemSpec(
    nu_v=30.0,
    nu_p=300.0,
    nu_l=288.0,
    kappa=10.0,
    gamma1=0.003,
    gamma2=0.003,
    g_v=30.0,
    Omega=16.0,
    N=100,
    M=0,
    n1=0.01,
    n2=0.01,
    delta=0.4,
)

VIBRATION_VIBRATION_BASE = dataclasses.replace(
    CAVITY_VIBRATION_BASE,
    nu_l=240.0,
    gamma1=9.0,
    gamma2=9.0,
    Omega=60.0,
    M=50,
    n1=0.001,
    n2=0.001,
    delta=2.0,
)


def _fig2():
    # Drive-detuning map of cavity-vibration entanglement; peak near delta 0.4.
    return SweepSpec(
        base=CAVITY_VIBRATION_BASE,
        axes=(
            Axis(path="delta", min=0.0, max=1.0, count=101),
            Axis(path="Omega", min=0.0, max=16.0, count=81),
        ),
        pairs=(ModePair.A_B2,),
        name="fig2",
    )


def _fig3a():
    # Molecule number vs cavity decay; N values match the headline curves.
    return SweepSpec(
        base=CAVITY_VIBRATION_BASE,
        axes=(
            Axis(path="N", values=(25, 50, 100, 200, 400)),
            Axis(path="kappa", min=10.0, max=20.0, count=5),
        ),
        pairs=(ModePair.A_B2,),
        name="fig3a",
    )


def _fig3b():
    # Thermal robustness: occupation up to 200 on a log grid, N below the
    # static instability threshold (about 180 at kappa/omega_v = 1/3).
    return SweepSpec(
        base=CAVITY_VIBRATION_BASE,
        axes=(
            Axis(path="N", values=(25, 50, 100, 160)),
            Axis(path="n_bar", min=0.01, max=200.0, count=22, spacing="log"),
        ),
        pairs=(ModePair.A_B2,),
        name="fig3b",
    )


def _fig4a():
    # Drive-detuning map of vibration-vibration entanglement; peak near delta 2.
    return SweepSpec(
        base=VIBRATION_VIBRATION_BASE,
        axes=(
            Axis(path="delta", min=0.0, max=3.0, count=61),
            Axis(path="Omega", min=0.0, max=60.0, count=31),
        ),
        pairs=(ModePair.B1_B2,),
        name="fig4a",
    )


def _fig4b():
    # Detuning vs thermal occupation; entanglement dies above n_bar 0.003
    # (measured extinction near 0.0034, so the axis step is 0.0005).
    return SweepSpec(
        base=VIBRATION_VIBRATION_BASE,
        axes=(
            Axis(path="delta", min=1.0, max=3.0, count=41),
            Axis(path="n_bar", min=0.0, max=0.006, count=13),
        ),
        pairs=(ModePair.B1_B2,),
        name="fig4b",
    )


def _fig4c():
    # Partition scan: the symmetric split M = N/2 maximizes G1 G2.
    return SweepSpec(
        base=VIBRATION_VIBRATION_BASE,
        axes=(
            Axis(path="M", min=0.0, max=100.0, count=101),
            Axis(path="kappa", values=(7.5, 10.0, 12.5, 15.0, 17.5)),
        ),
        pairs=(ModePair.B1_B2,),
        name="fig4c",
    )


def _fig4d():
    # Ensemble-size scan at the symmetric split M = N/2; the grid maximum
    # (N = 400 at kappa = 7.5 THz) sits near 0.02.
    return SweepSpec(
        base=VIBRATION_VIBRATION_BASE,
        axes=(
            Axis(path="N", min=20.0, max=400.0, count=20),
            Axis(path="kappa", values=(7.5, 10.0, 12.5, 15.0, 17.5)),
        ),
        pairs=(ModePair.B1_B2,),
        split_half=True,
        name="fig4d",
    )


def _blue_detuned():
    # Blue side of the resonance with couplings capped near 0.006 omega_v:
    # the drive ceiling 0.2 omega_v keeps |G_2| <= 0.006 everywhere on the grid.
    base = dataclasses.replace(CAVITY_VIBRATION_BASE, nu_l=312.0, delta=-0.4, Omega=0.1)
    return SweepSpec(
        base=base,
        axes=(
            Axis(path="delta", min=-1.0, max=-0.01, count=45),
            Axis(path="Omega", min=0.0, max=0.2, count=21),
        ),
        pairs=(ModePair.A_B1, ModePair.A_B2, ModePair.B1_B2),
        name="blue_detuned",
    )


_PRESETS = {
    "fig2": _fig2,
    "fig3a": _fig3a,
    "fig3b": _fig3b,
    "fig4a": _fig4a,
    "fig4b": _fig4b,
    "fig4c": _fig4c,
    "fig4d": _fig4d,
    "blue_detuned": _blue_detuned,
}

PRESET_NAMES = tuple(sorted(_PRESETS))


def preset(name):
    """Build the named preset; unknown names raise :class:`ConfigError`."""
    try:
        builder = _PRESETS[name]
    except KeyError:
        raise ConfigError(
            f"preset: unknown name {name!r} (choose from {', '.join(PRESET_NAMES)})"
        ) from None
    return builder()

"""System parameters, unit ingestion, and vibrational coupling estimates.

Physical inputs (laboratory units: THz, GHz, K, amu, um^3) enter through
:class:`SystemSpec` and :class:`MicroscopicSpec` and are converted exactly once,
by :func:`scale`, into the dimensionless frame omega_v = 1 used by the dynamics
layer.  Two independent routes estimate the single-molecule optomechanical
coupling g_v: a polarizability-derivative (Raman) route and a level-diagram
route through the electronic excited state; the two are tied together by
:func:`raman_tensor_element`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .constants import (
    ATOMIC_MASS,
    BOLTZMANN,
    CUBIC_MICRON,
    GHZ,
    HBAR,
    PLANCK,
    THZ,
    VACUUM_PERMITTIVITY,
)

__all__ = [
    "SystemSpec",
    "MicroscopicSpec",
    "ScaledParams",
    "thermal_occupation",
    "scale",
    "bare_detuning",
    "coupling_phenomenological",
    "coupling_microscopic",
    "polarizability_coupling",
    "raman_tensor_element",
    "resonance_denominator",
    "roelli_reference",
    "ResonancePoleError",
]


class ResonancePoleError(ValueError):
    """A denominator in the level-diagram coupling formula is (numerically) singular."""


def thermal_occupation(nu, temperature):
    """Bose occupation n = 1/(exp(h nu / kB T) - 1) of a mode at nu [THz], T [K].

    Returns 0.0 exactly at T = 0.  Uses ordinary (not angular) frequency, so the
    exponent is h*nu/(kB*T).
    """
    if nu <= 0.0:
        raise ValueError(f"mode frequency must be positive, got {nu} THz")
    if temperature < 0.0:
        raise ValueError(f"temperature must be nonnegative, got {temperature} K")
    if temperature == 0.0:
        return 0.0
    x = PLANCK * nu * THZ / (BOLTZMANN * temperature)
    if x > 700.0:
        # expm1 would overflow; the occupation itself underflows smoothly.
        return math.exp(-x)
    return 1.0 / math.expm1(x)


@dataclass(frozen=True)
class SystemSpec:
    """Laboratory-unit description of N molecules in a driven plasmonic cavity.

    Frequencies are nu = rate/2pi in THz; g_v is in GHz and keeps its sign.
    Omega (cavity drive amplitude) and delta (effective detuning) are already
    expressed in units of omega_v: both enter the equations of motion only in
    the scaled frame, and the figure-style sweeps vary them directly.

    delta is optional: it drives the effective-detuning solver, while the
    laser-detuning solver derives the bare detuning from nu_p - nu_l instead.
    Thermal occupations come from `temperature` unless n1/n2 override them.
    """

    nu_v: float  # vibrational frequency [THz]
    nu_p: float  # plasmon (cavity) frequency [THz]
    nu_l: float  # drive laser frequency [THz]
    kappa: float  # cavity amplitude decay rate /2pi [THz]
    gamma1: float  # collective mode B1 decay rate /2pi [THz]
    gamma2: float  # collective mode B2 decay rate /2pi [THz]
    g_v: float  # single-molecule coupling /2pi [GHz], signed
    Omega: float = 0.0  # drive amplitude [units of omega_v]
    N: int = 1  # total number of molecules
    M: int = 0  # molecules assigned to collective mode B1
    temperature: float | None = None  # [K]
    n1: float | None = None  # explicit occupation override for B1
    n2: float | None = None  # explicit occupation override for B2
    delta: float | None = None  # effective detuning [units of omega_v]

    def __post_init__(self):
        for name in ("nu_v", "nu_p", "nu_l", "kappa", "gamma1", "gamma2"):
            if getattr(self, name) <= 0.0:
                raise ValueError(f"{name} must be positive, got {getattr(self, name)}")
        if self.N < 1:
            raise ValueError(f"N must be >= 1, got {self.N}")
        if not 0 <= self.M <= self.N:
            raise ValueError(f"M must satisfy 0 <= M <= N, got M={self.M}, N={self.N}")
        if self.temperature is None and (self.n1 is None or self.n2 is None):
            raise ValueError("either temperature or both n1 and n2 must be given")
        if self.temperature is not None and self.temperature < 0.0:
            raise ValueError(f"temperature must be nonnegative, got {self.temperature}")
        for name in ("n1", "n2"):
            value = getattr(self, name)
            if value is not None and value < 0.0:
                raise ValueError(f"{name} must be nonnegative, got {value}")

    def occupations(self):
        """Resolved (n1, n2): explicit overrides win over the temperature route."""
        n1 = self.n1 if self.n1 is not None else thermal_occupation(self.nu_v, self.temperature)
        n2 = self.n2 if self.n2 is not None else thermal_occupation(self.nu_v, self.temperature)
        return n1, n2


@dataclass(frozen=True)
class MicroscopicSpec:
    """Molecular inputs for the two g_v estimates.

    The level-diagram route uses (lam, f, omega_e_tilde) in the same frequency
    unit as the omega_v passed to :func:`coupling_microscopic` (hbar = 1).
    The polarizability route uses SI: R_v = d(alpha)/dx in F m, m in amu,
    V_p in um^3.  mu is the transition dipole in the hbar = 1 unit system of
    the level-diagram route and only enters :func:`raman_tensor_element`.
    """

    lam: float = 0.0  # Franck-Condon displacement factor (dimensionless)
    f: float = 0.0  # electron-photon coupling [frequency units of omega_v]
    omega_e_tilde: float = 0.0  # shifted electronic transition frequency
    mu: float = 0.0  # Raman transition dipole (hbar = 1 units)
    m: float = 1.0  # effective vibrational mass [amu]
    R_v: float = 0.0  # polarizability derivative d(alpha)/dx [F m]
    V_p: float = 1.0  # cavity mode volume [um^3]
    eps0: float = VACUUM_PERMITTIVITY  # [F/m]

    def __post_init__(self):
        if self.m <= 0.0:
            raise ValueError(f"mass must be positive, got {self.m} amu")
        if self.V_p <= 0.0:
            raise ValueError(f"mode volume must be positive, got {self.V_p} um^3")
        if self.eps0 <= 0.0:
            raise ValueError(f"eps0 must be positive, got {self.eps0}")


def roelli_reference():
    """Reference molecule/cavity set for the picocavity coupling estimate.

    R_v^2/m = 3e-8 eps0^2 m^4 kg^-1, the value consistent with the published
    -g_v/2pi of about 21 GHz at nu_p = 333 THz, nu_v = 29.9 THz,
    V_p = 1.5e-6 um^3 (a resonantly enhanced Raman mode; equivalently about
    5e5 eps0^2 Angstrom^4 amu^-1).  The mass split (10 amu) is conventional:
    only the ratio R_v^2/m enters the coupling.
    """
    m_amu = 10.0
    ratio = 3.0e-8  # eps0^2 m^4 / kg
    r_v = math.sqrt(ratio * m_amu * ATOMIC_MASS) * VACUUM_PERMITTIVITY
    return MicroscopicSpec(m=m_amu, R_v=r_v, V_p=1.5e-6)


def polarizability_coupling(omega_p, omega_v, r_v, m, v_p, eps0=1.0, hbar=1.0):
    """g_v = -omega_p R_v sqrt(hbar / 2 m omega_v) / (eps0 V_p), consistent units.

    Angular frequencies in, angular coupling out.  The unit system is the
    caller's; :func:`coupling_phenomenological` wraps this in SI.
    """
    x_zpf = math.sqrt(hbar / (2.0 * m * omega_v))
    return -omega_p * r_v * x_zpf / (eps0 * v_p)


def coupling_phenomenological(spec, nu_p, nu_v):
    """Signed g_v/2pi in GHz from the polarizability-derivative route.

    nu_p, nu_v in THz; molecular inputs from `spec` (R_v in F m, m in amu,
    V_p in um^3).  Positive R_v gives negative g_v: the molecule red-shifts
    the cavity as the bond stretches.
    """
    g_angular = polarizability_coupling(
        2.0 * math.pi * nu_p * THZ,
        2.0 * math.pi * nu_v * THZ,
        spec.R_v,
        spec.m * ATOMIC_MASS,
        spec.V_p * CUBIC_MICRON,
        eps0=spec.eps0,
        hbar=HBAR,
    )
    return g_angular / (2.0 * math.pi * GHZ)


def resonance_denominator(omega_e_tilde, omega_v, omega_p):
    """1/M(v): the bracketed sum of electronic-resonance terms.

    M(v)^-1 = (omega_v + oe)/((omega_v + oe)^2 - omega_p^2)
            - (omega_v - oe)/((omega_v - oe)^2 - omega_p^2)
            - 2 oe/(oe^2 - omega_p^2)
    with oe = omega_e_tilde.  Returns the bracket itself (not its reciprocal).
    """
    oe = omega_e_tilde
    d_plus = (omega_v + oe) ** 2 - omega_p**2
    d_minus = (omega_v - oe) ** 2 - omega_p**2
    d_el = oe**2 - omega_p**2
    scale_ = max(omega_p**2, oe**2, 1e-300)
    for name, den in (("(omega_v+oe)^2-omega_p^2", d_plus),
                      ("(omega_v-oe)^2-omega_p^2", d_minus),
                      ("oe^2-omega_p^2", d_el)):
        if abs(den) < 1e-9 * scale_:
            raise ResonancePoleError(
                f"resonance denominator {name} vanishes "
                f"(|{den:.3e}| < 1e-09 * {scale_:.3e})"
            )
    return (omega_v + oe) / d_plus - (omega_v - oe) / d_minus - 2.0 * oe / d_el


def coupling_microscopic(lam, f, omega_e_tilde, omega_v, omega_p):
    """g_v = -2 lam f^2 / M(v) from the displaced-excited-state level diagram.

    All frequencies in one common unit (hbar = 1); the result carries the same
    unit.  Raises :class:`ResonancePoleError` within 1e-9 relative distance of
    any electronic resonance pole.
    """
    return -2.0 * lam * f**2 * resonance_denominator(omega_e_tilde, omega_v, omega_p)


def raman_tensor_element(lam, mu, m_v, m, omega_v, hbar=1.0):
    """d(alpha)/dx = (lam |mu|^2 / (M(v) hbar)) sqrt(2 m omega_v / hbar).

    m_v is the resonance denominator M(v) (reciprocal of
    :func:`resonance_denominator`'s bracket).  Feeding the result into
    :func:`polarizability_coupling` with f^2 = mu^2 omega_p / (2 eps0 V_p)
    reproduces :func:`coupling_microscopic` identically.
    """
    return lam * abs(mu) ** 2 / (m_v * hbar) * math.sqrt(2.0 * m * omega_v / hbar)


@dataclass(frozen=True)
class ScaledParams:
    """Dimensionless parameters in the canonical frame omega_v = 1.

    g1 = g_v sqrt(M) and g2 = g_v sqrt(N - M) are the collective couplings of
    the two bright vibrational modes; g1^2 + g2^2 = N g_v^2 holds by
    construction and is validated to 1e-12 relative.
    """

    delta: float | None  # effective detuning (None until a laser-mode solve fixes it)
    kappa: float
    gamma1: float
    gamma2: float
    g_v: float
    Omega: complex
    g1: float
    g2: float
    n1: float
    n2: float
    N: int
    M: int
    omega_v: float = 1.0

    def __post_init__(self):
        total = self.g1**2 + self.g2**2
        target = self.N * self.g_v**2
        if abs(total - target) > 1e-12 * max(abs(target), 1e-300):
            raise ValueError(
                f"g1^2 + g2^2 = {total!r} inconsistent with N g_v^2 = {target!r}"
            )

    @classmethod
    def make(cls, *, delta, kappa, gamma1, gamma2, g_v, Omega, n1, n2, N, M):
        """Build directly in the scaled frame (tests and small studies)."""
        return cls(
            delta=delta,
            kappa=kappa,
            gamma1=gamma1,
            gamma2=gamma2,
            g_v=g_v,
            Omega=Omega,
            g1=g_v * math.sqrt(M),
            g2=g_v * math.sqrt(N - M),
            n1=n1,
            n2=n2,
            N=N,
            M=M,
        )


def scale(spec):
    """Convert a :class:`SystemSpec` to :class:`ScaledParams` (omega_v = 1).

    This is the single point where laboratory units are consumed: every rate is
    divided by nu_v, g_v additionally by the GHz/THz factor.  Omega and delta
    are passed through unchanged (already in units of omega_v).
    """
    n1, n2 = spec.occupations()
    g_v = (spec.g_v / 1000.0) / spec.nu_v
    return ScaledParams(
        delta=spec.delta,
        kappa=spec.kappa / spec.nu_v,
        gamma1=spec.gamma1 / spec.nu_v,
        gamma2=spec.gamma2 / spec.nu_v,
        g_v=g_v,
        Omega=spec.Omega,
        g1=g_v * math.sqrt(spec.M),
        g2=g_v * math.sqrt(spec.N - spec.M),
        n1=n1,
        n2=n2,
        N=spec.N,
        M=spec.M,
    )


def bare_detuning(spec):
    """Bare cavity-laser detuning (nu_p - nu_l)/nu_v in units of omega_v."""
    return (spec.nu_p - spec.nu_l) / spec.nu_v

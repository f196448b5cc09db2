"""Physical constants (CODATA 2018 exact/recommended values) and unit factors.

All thermal and microscopic-coupling formulas use these values; everything
downstream of the scaling step works in the dimensionless frame omega_v = 1
and never touches them.
"""

PLANCK = 6.62607015e-34  # J s (exact)
HBAR = 1.054571817e-34  # J s
BOLTZMANN = 1.380649e-23  # J / K (exact)
VACUUM_PERMITTIVITY = 8.8541878128e-12  # F / m
ATOMIC_MASS = 1.66053906660e-27  # kg

THZ = 1.0e12  # Hz per THz
GHZ = 1.0e9  # Hz per GHz
CUBIC_MICRON = 1.0e-18  # m^3 per um^3
SQUARE_ANGSTROM = 1.0e-20  # m^2 per A^2

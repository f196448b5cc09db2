"""Steady-state Gaussian entanglement of molecular ensembles in a driven cavity.

The layers, bottom up: `parameters` (unit ingestion and coupling estimates),
`steady_state` (classical fixed points, optical bistability), `dynamics`
(drift/diffusion, stability, Lyapunov covariance), `entanglement`
(logarithmic negativity), `effective` (cavity-eliminated two-mode model),
`pipeline` (single-point evaluation), `sweep`/`presets`/`cli` (parameter
grids and file emission).
"""

from ._version import __version__
from .dynamics import (
    CovarianceDivergenceError,
    StabilityReport,
    UnstableSystemError,
    build_diffusion,
    build_drift,
    integrate_covariance,
    lyapunov_residual,
    solve_lyapunov,
    stability,
    symplectic_eigenvalues,
    symplectic_form,
)
from .effective import (
    COMPARISON_COLUMNS,
    ComparisonReport,
    EffectiveParams,
    RegimeReport,
    RegimeWarning,
    compare_with_full,
    effective_params,
    reduced_diffusion,
    reduced_drift,
)
from .entanglement import (
    EntanglementReport,
    ModePair,
    UnphysicalCovarianceError,
    eta_minus,
    log_negativity,
    pair_negativity,
    reduce_covariance,
)
from .parameters import (
    MicroscopicSpec,
    ResonancePoleError,
    ScaledParams,
    SystemSpec,
    bare_detuning,
    coupling_microscopic,
    coupling_phenomenological,
    polarizability_coupling,
    raman_tensor_element,
    resonance_denominator,
    roelli_reference,
    scale,
    thermal_occupation,
)
from .pipeline import (
    EFFECTIVE_DETUNING,
    LASER_DETUNING,
    PointResult,
    evaluate_point,
    evaluate_system,
)
from .presets import PRESET_NAMES, preset
from .steady_state import (
    SteadyState,
    linearized_couplings,
    pulling_coefficient,
    solve_effective_detuning,
    solve_laser_detuning,
)
from .sweep import (
    Axis,
    ConfigError,
    SweepResult,
    SweepSpec,
    run_sweep,
    write_csv,
    write_json,
    write_results,
)

__all__ = [name for name in dir() if not name.startswith("_")]

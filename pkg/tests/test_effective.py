"""Adiabatic elimination of the cavity: effective two-mode model."""
from __future__ import annotations

import math
import warnings

import numpy as np
import pytest

from molomech.effective import (
    COMPARISON_COLUMNS,
    EffectiveParams,
    RegimeReport,
    RegimeWarning,
    compare_with_full,
    effective_params,
    reduced_diffusion,
    reduced_drift,
)
from molomech.parameters import ScaledParams
from molomech.steady_state import solve_effective_detuning

REL = 1e-12


def make_params(**overrides):
    base = dict(delta=0.4, kappa=1.0 / 3.0, gamma1=1e-4, gamma2=1e-4,
                g_v=1e-3, Omega=16.0, n1=0.0, n2=0.0, N=100, M=50)
    base.update(overrides)
    return ScaledParams.make(**base)


def validity_point(kappa):
    """Parameters deep in the elimination regime: delta = omega_v, |G_l| = 0.005."""
    omega = 0.005 * math.sqrt(1.0 + kappa**2) / (1e-3 * math.sqrt(50.0))
    return make_params(delta=1.0, kappa=kappa, Omega=omega)


def eff_at(p):
    return effective_params(solve_effective_detuning(p), p)


def test_effective_params_frozen_oracle():
    # Frozen against a 50-digit evaluation of the elimination formulas.
    p = make_params(delta=0.73, kappa=0.21, gamma1=3e-4, gamma2=5e-4,
                    Omega=2.3, M=37)
    ss = solve_effective_detuning(p)
    assert abs(ss.a_ss) == pytest.approx(3.0278888550513531, rel=REL)
    eff = effective_params(ss, p)
    assert eff.omega_opt[0] == pytest.approx(-5.8958191371871523e-4, rel=REL)
    assert eff.omega_opt[1] == pytest.approx(-1.0038827179534881e-3, rel=REL)
    assert eff.gamma_opt[0] == pytest.approx(5.8540048170652577e-4, rel=REL)
    assert eff.gamma_opt[1] == pytest.approx(9.9676298236516549e-4, rel=REL)
    assert eff.G_eff_1.real == pytest.approx(7.6387533670344478e-4, rel=REL)
    assert eff.G_eff_1.imag == pytest.approx(-7.6933158910846938e-4, rel=REL)
    assert eff.G_eff_2.real == pytest.approx(-7.6387533670344478e-4, rel=REL)
    assert eff.G_eff_2.imag == pytest.approx(-7.6933158910846938e-4, rel=REL)
    assert eff.G_approx.real == pytest.approx(-2.1078111663676756e-3, rel=REL)
    assert eff.G_approx.imag == pytest.approx(2.2132017246860594e-4, rel=REL)
    assert eff.Omega_l[0] == pytest.approx(1.0 - eff.omega_opt[0], rel=REL)
    assert eff.Gamma_l[1] == pytest.approx(p.gamma2 + eff.gamma_opt[1], rel=REL)


def test_effective_params_resonant_reference():
    eff = eff_at(validity_point(0.05))
    assert eff.G_rotated[0] == pytest.approx(0.005, rel=REL)
    assert eff.G_rotated[1] == pytest.approx(0.005, rel=REL)
    assert eff.omega_opt[0] == pytest.approx(1.2492192379762648e-5, rel=REL)
    assert eff.gamma_opt[0] == pytest.approx(4.996876951905059e-4, rel=REL)
    assert eff.G_eff_1 == pytest.approx(
        4.996876951905059e-4 + 1.2492192379762648e-5j, rel=REL)
    assert eff.G_eff_2 == pytest.approx(
        -4.996876951905059e-4 + 1.2492192379762648e-5j, rel=REL)
    assert eff.G_approx == pytest.approx(-5e-4 + 1.25e-5j, rel=REL)
    assert eff.validity.ok


def test_exchange_conjugation_identity():
    # The two elimination coefficients are exact negative conjugates for any
    # detuning, not just on resonance.
    rng = np.random.default_rng(5)
    for _ in range(20):
        p = make_params(delta=float(rng.uniform(0.1, 3.0)),
                        kappa=float(rng.uniform(0.02, 0.8)),
                        Omega=float(rng.uniform(0.5, 20.0)),
                        M=int(rng.integers(1, 100)))
        eff = eff_at(p)
        scale = max(abs(eff.G_eff_1), 1e-300)
        assert abs(eff.G_eff_2 + eff.G_eff_1.conjugate()) <= 1e-15 * scale


def test_resonant_approximation_quality():
    # Narrow cavity: the single-coefficient approximation tracks both exact
    # coefficients to better than 5%, improving as kappa shrinks.
    errors = []
    for kappa in (0.05, 0.02, 0.01):
        eff = eff_at(validity_point(kappa))
        err2 = abs(eff.G_approx - eff.G_eff_2) / abs(eff.G_eff_2)
        err1 = abs(eff.G_approx + eff.G_eff_1.conjugate()) / abs(eff.G_eff_1)
        assert err2 < 0.05 and err1 < 0.05
        errors.append(err2)
    assert errors[0] > errors[1] > errors[2]


def test_coupling_scales_with_partition_geometric_mean():
    ratios = {}
    for m in range(5, 100, 5):
        eff = eff_at(make_params(delta=1.0, kappa=0.05, Omega=1.0, M=m))
        ratios[m] = abs(eff.G_approx) / math.sqrt(m * (100 - m))
    values = list(ratios.values())
    assert max(values) - min(values) <= 1e-12 * values[0]
    strongest = max(ratios, key=lambda m: math.sqrt(m * (100 - m)))
    assert strongest == 50


def test_induced_damping_positive_red_detuned():
    for delta in np.linspace(0.2, 3.0, 8):
        for kappa in (0.05, 1.0 / 3.0):
            eff = eff_at(make_params(delta=float(delta), kappa=kappa, Omega=4.0))
            assert eff.gamma_opt[0] > 0.0 and eff.gamma_opt[1] > 0.0


def test_zero_coupling_limit():
    eff = eff_at(make_params(Omega=0.0))
    assert eff.Omega_l == (1.0, 1.0)
    assert eff.Gamma_l == (1e-4, 1e-4)
    assert eff.G_eff_1 == 0.0 and eff.G_eff_2 == 0.0 and eff.G_approx == 0.0
    assert eff.omega_opt == (0.0, 0.0) and eff.gamma_opt == (0.0, 0.0)


def _handmade_eff(g_rotated=(0.1, 0.2), g_approx=0.5 - 0.25j):
    report = RegimeReport(kappa_ratio=0.05, coupling_ratio=(0.1, 0.1),
                          damping_ratio=(0.1, 0.1), detuning_mismatch=0.0,
                          ok=True)
    return EffectiveParams(
        Omega_l=(0.99, 1.01), Gamma_l=(2e-3, 3e-3),
        omega_opt=(0.01, -0.01), gamma_opt=(1e-3, 2e-3),
        G_eff_1=0j, G_eff_2=0j, G_approx=g_approx,
        rotation=0.0, G_rotated=g_rotated, delta=1.0, validity=report)


def test_reduced_drift_layout():
    a = reduced_drift(_handmade_eff())
    expected = np.array([
        [-2e-3, 0.99, 0.0, 0.5],
        [-0.99, -2e-3, 0.0, 1.0],
        [0.0, 0.5, -3e-3, 1.01],
        [0.0, 1.0, -1.01, -3e-3],
    ])
    np.testing.assert_allclose(a, expected, atol=0.0)


def test_reduced_drift_warns_outside_regime():
    p = make_params()  # kappa = 1/3 is far outside the narrow-cavity regime
    eff = eff_at(p)
    assert not eff.validity.ok
    with pytest.warns(RegimeWarning):
        reduced_drift(eff)
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        reduced_drift(_handmade_eff())  # ok=True: must stay silent


def test_reduced_diffusion_thermal_limit():
    p = make_params(gamma1=2e-4, gamma2=3e-4, n1=0.5, n2=0.0)
    q = reduced_diffusion(_handmade_eff(g_rotated=(0.0, 0.0)), p)
    np.testing.assert_allclose(q, np.diag([4e-4, 4e-4, 3e-4, 3e-4]), atol=0.0)


def test_reduced_diffusion_cross_sign_tracks_coupling_sign():
    p = make_params()
    q_pos = reduced_diffusion(_handmade_eff(g_rotated=(0.1, 0.1)), p)
    q_neg = reduced_diffusion(_handmade_eff(g_rotated=(0.1, -0.1)), p)
    assert q_pos[0, 2] > 0.0
    assert q_neg[0, 2] == pytest.approx(-q_pos[0, 2], rel=REL)
    np.testing.assert_allclose(np.diag(q_pos), np.diag(q_neg), atol=0.0)
    assert q_pos[1, 3] == q_pos[0, 2] and q_pos[0, 1] == 0.0


def test_reduced_model_tracks_full_model():
    p = validity_point(0.05)
    report = compare_with_full(p, solve_effective_detuning(p))
    assert report.validity.ok
    assert report.eigen_deviation < 0.05
    assert report.block_deviation < 0.10


def test_comparison_breakdown_grows_with_linewidth():
    devs = []
    for kappa in (0.05, 0.1, 0.2, 1.0 / 3.0, 0.5):
        p = validity_point(kappa)
        devs.append(compare_with_full(p, solve_effective_detuning(p)).block_deviation)
    assert all(b > a for a, b in zip(devs, devs[1:]))


def test_comparison_row_matches_columns():
    p = validity_point(0.05)
    report = compare_with_full(p, solve_effective_detuning(p))
    row = report.to_row()
    assert len(row) == len(COMPARISON_COLUMNS) == 9
    assert row[0] == report.validity.kappa_ratio
    assert row[5] == report.eigen_deviation
    assert row[8] == report.log_neg_reduced

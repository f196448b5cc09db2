"""End-to-end evaluation of one parameter point.

This stitches the layers together: scaled parameters -> classical steady state
-> drift/diffusion -> stability -> steady covariance -> per-pair entanglement.
Instability and per-point numerical failures are captured in the result rather
than raised, so sweeps never abort on a bad grid point.
"""

from __future__ import annotations

from dataclasses import dataclass

from .dynamics import build_diffusion, build_drift, solve_lyapunov, stability
from .entanglement import ModePair, UnphysicalCovarianceError, log_negativity
from .parameters import bare_detuning, scale
from .steady_state import solve_effective_detuning, solve_laser_detuning

__all__ = [
    "PointResult",
    "evaluate_point",
    "evaluate_system",
    "EFFECTIVE_DETUNING",
    "LASER_DETUNING",
]

EFFECTIVE_DETUNING = "effective-detuning"
LASER_DETUNING = "laser-detuning"


@dataclass(frozen=True)
class PointResult:
    """Everything computed at one grid point (one steady-state branch).

    `covariance` is None and `reports` empty when the point is unstable;
    `error` carries the message of any per-point numerical failure.
    """

    params: object
    steady: object
    stability: object
    covariance: object
    reports: tuple
    error: str | None = None


def _finish(p, ss):
    a = build_drift(ss, p)
    report = stability(a)
    if not report.stable:
        return PointResult(
            params=p, steady=ss, stability=report, covariance=None, reports=()
        )
    v = solve_lyapunov(a, build_diffusion(p))
    try:
        reports = tuple(log_negativity(v, pair) for pair in ModePair)
    except UnphysicalCovarianceError as exc:
        return PointResult(
            params=p,
            steady=ss,
            stability=report,
            covariance=v,
            reports=(),
            error=str(exc),
        )
    return PointResult(
        params=p, steady=ss, stability=report, covariance=v, reports=reports
    )


def evaluate_point(p, mode=EFFECTIVE_DETUNING, delta_p=None):
    """Evaluate scaled parameters `p`; returns one result per steady-state branch.

    Effective-detuning mode uses p.delta and yields exactly one result.
    Laser-detuning mode needs `delta_p` and yields one result per real branch
    of the bistability cubic.  All three mode pairs are always reported; the
    caller selects.
    """
    try:
        if mode == EFFECTIVE_DETUNING:
            branches = [solve_effective_detuning(p)]
        elif mode == LASER_DETUNING:
            if delta_p is None:
                raise ValueError("laser-detuning mode requires delta_p")
            branches = solve_laser_detuning(p, delta_p)
        else:
            raise ValueError(f"unknown mode {mode!r}")
    except Exception as exc:  # recorded, not raised: sweeps must survive bad points
        return (
            PointResult(
                params=p,
                steady=None,
                stability=None,
                covariance=None,
                reports=(),
                error=f"{type(exc).__name__}: {exc}",
            ),
        )
    out = []
    for ss in branches:
        try:
            out.append(_finish(p, ss))
        except Exception as exc:
            out.append(
                PointResult(
                    params=p,
                    steady=ss,
                    stability=None,
                    covariance=None,
                    reports=(),
                    error=f"{type(exc).__name__}: {exc}",
                )
            )
    return tuple(out)


def evaluate_system(spec, mode=EFFECTIVE_DETUNING):
    """Evaluate a laboratory-unit :class:`SystemSpec` (scales, then dispatches).

    In laser-detuning mode the bare detuning comes from the spec's nu_p - nu_l.
    """
    p = scale(spec)
    if mode == LASER_DETUNING:
        return evaluate_point(p, mode=mode, delta_p=bare_detuning(spec))
    return evaluate_point(p, mode=mode)

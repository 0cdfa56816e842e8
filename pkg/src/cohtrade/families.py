"""Parameterized three-qubit state families and closed-form sweeps."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .coherence import EPS_INEQ, l1_coherence, subset_coherence
from .inequalities import InequalityResult, run_suite
from .states import LocalDims, PureState, density_from_pure
from .tangle import three_tangle

FAMILIES = ("ghz", "w", "two-term")

_TWO_PI = 2.0 * math.pi
_THREE_QUBITS = LocalDims((2, 2, 2))

#: Sweep quantities with known closed forms, in emission order.
QUANTITIES = ("c123", "c12", "c13", "c23", "tau")


@dataclass(frozen=True, eq=False)
class FamilyPoint:
    """One member of a parameterized family, with its realized state."""

    family: str
    params: tuple[float, ...]
    state: PureState


def ghz_state(phi: float) -> PureState:
    """cos(phi)|000> + sin(phi)|111>."""
    amps = np.zeros(8, dtype=np.complex128)
    amps[0] = math.cos(phi)
    amps[7] = math.sin(phi)
    return PureState(_THREE_QUBITS, amps)


def w_state(theta: float, phi: float) -> PureState:
    """sin(theta)cos(phi)|100> + sin(theta)sin(phi)|010> + cos(theta)|001>."""
    amps = np.zeros(8, dtype=np.complex128)
    amps[4] = math.sin(theta) * math.cos(phi)
    amps[2] = math.sin(theta) * math.sin(phi)
    amps[1] = math.cos(theta)
    return PureState(_THREE_QUBITS, amps)


def two_term_state(alpha: float) -> PureState:
    """cos(alpha)|000> + sin(alpha)|100>."""
    amps = np.zeros(8, dtype=np.complex128)
    amps[0] = math.cos(alpha)
    amps[4] = math.sin(alpha)
    return PureState(_THREE_QUBITS, amps)


def family_point(family: str, params: Sequence[float]) -> FamilyPoint:
    params = tuple(float(p) for p in params)
    if family == "ghz":
        (phi,) = params
        if not 0.0 <= phi < _TWO_PI:
            raise ValueError(f"ghz parameter phi={phi} outside [0, 2pi)")
        state = ghz_state(phi)
    elif family == "w":
        theta, phi = params
        if not 0.0 <= theta < math.pi:
            raise ValueError(f"w parameter theta={theta} outside [0, pi)")
        if not 0.0 <= phi < _TWO_PI:
            raise ValueError(f"w parameter phi={phi} outside [0, 2pi)")
        state = w_state(theta, phi)
    elif family == "two-term":
        (alpha,) = params
        if not 0.0 <= alpha < _TWO_PI:
            raise ValueError(f"two-term parameter alpha={alpha} outside [0, 2pi)")
        state = two_term_state(alpha)
    else:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")
    return FamilyPoint(family, params, state)


def closed_forms(family: str, params: Sequence[float]) -> dict[str, float]:
    """Closed-form c123, c12, c13, c23 and tau at the given parameters."""
    params = tuple(float(p) for p in params)
    if family == "ghz":
        (phi,) = params
        s, c = math.sin(phi), math.cos(phi)
        return {
            "c123": 2.0 * abs(s * c),
            "c12": 0.0,
            "c13": 0.0,
            "c23": 0.0,
            "tau": 4.0 * abs(c * c * s * s),
        }
    if family == "w":
        theta, phi = params
        st, ct = math.sin(theta), math.cos(theta)
        sp, cp = math.sin(phi), math.cos(phi)
        c12 = 2.0 * abs(st * st * sp * cp)
        c13 = 2.0 * abs(st * ct * cp)
        c23 = 2.0 * abs(st * ct * sp)
        return {"c123": c12 + c13 + c23, "c12": c12, "c13": c13, "c23": c23, "tau": 0.0}
    if family == "two-term":
        (alpha,) = params
        c = 2.0 * abs(math.cos(alpha) * math.sin(alpha))
        return {"c123": c, "c12": c, "c13": c, "c23": 0.0, "tau": 0.0}
    raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")


def numeric_quantities(point: FamilyPoint) -> dict[str, float]:
    rho = density_from_pure(point.state)
    return {
        "c123": l1_coherence(rho),
        "c12": subset_coherence(rho, (1, 2)),
        "c13": subset_coherence(rho, (1, 3)),
        "c23": subset_coherence(rho, (2, 3)),
        "tau": three_tangle(point.state).tau,
    }


@dataclass(frozen=True, eq=False)
class SweepRecord:
    """One grid point: state, closed forms, numeric values and suite results."""

    point: FamilyPoint
    closed: dict[str, float]
    numeric: dict[str, float]
    results: tuple[InequalityResult, ...]


def default_grid(family: str, points: int) -> list[tuple[float, ...]]:
    """Evenly spaced parameter grid; the w family gets a points x points grid."""
    if points < 1:
        raise ValueError(f"points must be >= 1, got {points}")
    if family == "ghz":
        return [(phi,) for phi in np.linspace(0.0, _TWO_PI, points, endpoint=False)]
    if family == "w":
        thetas = np.linspace(0.0, math.pi, points, endpoint=False)
        phis = np.linspace(0.0, _TWO_PI, points, endpoint=False)
        return [(float(t), float(p)) for t in thetas for p in phis]
    if family == "two-term":
        return [(a,) for a in np.linspace(0.0, math.pi / 2.0, points)]
    raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")


def family_sweep(
    family: str,
    grid: Iterable[Sequence[float]],
    tolerance: float = EPS_INEQ,
) -> list[SweepRecord]:
    """Run the full verifier suite at every grid point."""
    records = []
    for params in grid:
        point = family_point(family, params)
        records.append(
            SweepRecord(
                point,
                closed_forms(family, point.params),
                numeric_quantities(point),
                tuple(run_suite(point.state, tolerance)),
            )
        )
    return records

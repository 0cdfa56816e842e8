"""l1-norm coherence of full states and reductions, plus residual slack terms."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Mapping, Sequence

import numpy as np

from .states import (
    DensityOperator,
    LocalDims,
    SubsystemSet,
    _as_subsystem,
    partial_trace,
)

EPS_INEQ = 1e-9


def l1_coherence(rho: DensityOperator) -> float:
    """Sum of the absolute values of all off-diagonal entries."""
    off = np.abs(rho.mat)
    np.fill_diagonal(off, 0.0)
    return float(off.sum())


def subset_coherence(rho: DensityOperator, parties: "SubsystemSet | Iterable[int]") -> float:
    """Coherence of the reduced state on ``parties``."""
    parties = _as_subsystem(parties)
    if len(parties) == rho.dims.n_parties:
        return l1_coherence(rho)
    return l1_coherence(partial_trace(rho, parties))


@dataclass(frozen=True, eq=False)
class CoherenceProfile:
    """Coherence of every requested reduction, keyed by subsystem."""

    dims: LocalDims
    by_subset: Mapping[SubsystemSet, float]

    def value(self, parties: "SubsystemSet | Iterable[int]") -> float:
        return self.by_subset[_as_subsystem(parties)]

    def sum_over_size(self, m: int) -> float:
        return sum(v for s, v in self.by_subset.items() if len(s) == m)


def coherence_profile(
    rho: DensityOperator, sizes: Sequence[int] | None = None
) -> CoherenceProfile:
    """Compute C_a for every subset a of each requested size (default: all sizes)."""
    n = rho.dims.n_parties
    if sizes is None:
        sizes = range(1, n + 1)
    by_subset: dict[SubsystemSet, float] = {}
    for m in sizes:
        if not 1 <= m <= n:
            raise ValueError(f"subset size {m} out of range 1..{n}")
        for parties in combinations(range(1, n + 1), m):
            subset = SubsystemSet(parties)
            by_subset[subset] = subset_coherence(rho, subset)
    return CoherenceProfile(rho.dims, by_subset)


# Residual of the three-qubit half-sum bound: weighted off-diagonal magnitudes
# |rho[row, col]|, transcribed term by term; rows/columns are binary labels
# i1 i2 i3.  Entries whose basis labels differ in exactly two parties enter
# once, entries differing in all three parties enter twice.
THEOREM1_D_TERMS: tuple[tuple[int, int, int], ...] = (
    (0b000, 0b011, 1),
    (0b000, 0b101, 1),
    (0b000, 0b110, 1),
    (0b001, 0b010, 1),
    (0b001, 0b100, 1),
    (0b001, 0b111, 1),
    (0b010, 0b100, 1),
    (0b010, 0b111, 1),
    (0b011, 0b101, 1),
    (0b011, 0b110, 1),
    (0b100, 0b111, 1),
    (0b101, 0b110, 1),
    (0b011, 0b000, 1),
    (0b101, 0b000, 1),
    (0b110, 0b000, 1),
    (0b010, 0b001, 1),
    (0b100, 0b001, 1),
    (0b111, 0b001, 1),
    (0b100, 0b010, 1),
    (0b111, 0b010, 1),
    (0b101, 0b011, 1),
    (0b110, 0b011, 1),
    (0b111, 0b100, 1),
    (0b110, 0b101, 1),
    (0b000, 0b111, 2),
    (0b001, 0b110, 2),
    (0b010, 0b101, 2),
    (0b011, 0b100, 2),
    (0b100, 0b011, 2),
    (0b101, 0b010, 2),
    (0b110, 0b001, 2),
    (0b111, 0b000, 2),
)


def theorem1_slack_D(rho: DensityOperator) -> float:
    """Residual D of the half-sum bound: 2*C123 - (C12+C13+C23) >= D >= 0."""
    if rho.dims.dims != (2, 2, 2):
        raise ValueError(f"three-qubit state required, got dims {rho.dims.dims}")
    mat = rho.mat
    return float(sum(w * abs(mat[r, c]) for r, c, w in THEOREM1_D_TERMS))


def correlated_coherence(rho: DensityOperator) -> float:
    """Bipartite coherence minus both marginal coherences; expected nonnegative."""
    if rho.dims.n_parties != 2:
        raise ValueError(f"bipartite state required, got {rho.dims.n_parties} parties")
    c_full = l1_coherence(rho)
    c_a = l1_coherence(partial_trace(rho, (1,)))
    c_b = l1_coherence(partial_trace(rho, (2,)))
    return c_full - c_a - c_b

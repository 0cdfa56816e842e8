"""Executable verifiers for every coherence trade-off bound, plus CSV plumbing.

Verifier names are stable identifiers used for CSV rows, CLI addressing and
search objectives:

* ``thm1``             half-sum pairwise bound, three qubits
* ``eq3``              sum of single-party coherences, three qubits
* ``eq4-pivot{p}``     additive two-pair conjecture (documented false)
* ``eq5-single{s}``    single + complement split, three qubits
* ``cor1-m{m}``        size-m subset-family bound, any number of qubits
* ``cor2-m{m}``        the same bound when any local dimension exceeds 2
* ``thm2``             alias for the m = n-1 subset-family bound
* ``thm3``             tangle-strengthened half-sum bound, pure three qubits
* ``eq10``             tangle-strengthened singles bound, pure three qubits
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, TextIO, Union

from .coherence import EPS_INEQ, l1_coherence, subset_coherence
from .states import DensityOperator, PureState, SubsystemSet, density_from_pure
from .tangle import three_tangle

State = Union[PureState, DensityOperator]

#: Verifiers excluded from pass/fail exit policies: their violations are data.
CONJECTURE_PREFIX = "eq4"


@dataclass(frozen=True)
class InequalityResult:
    """Outcome of one verified bound; ``holds`` means slack >= -tolerance."""

    name: str
    lhs: float
    rhs: float
    slack: float
    holds: bool
    tolerance: float


def _result(name: str, lhs: float, rhs: float, tolerance: float) -> InequalityResult:
    slack = lhs - rhs
    return InequalityResult(name, lhs, rhs, slack, slack >= -tolerance, tolerance)


def is_conjecture(name: str) -> bool:
    return name.startswith(CONJECTURE_PREFIX)


@dataclass(frozen=True)
class SubsetFamily:
    """All size-m subsets of n party labels, in lexicographic order."""

    m: int
    n: int
    members: tuple[SubsystemSet, ...]


def gamma(m: int, n: int) -> SubsetFamily:
    if not 1 <= m <= n:
        raise ValueError(f"subset size m={m} out of range 1..{n}")
    members = tuple(SubsystemSet(c) for c in combinations(range(1, n + 1), m))
    return SubsetFamily(m, n, members)


def _require_three_qubit(rho: DensityOperator) -> None:
    if rho.dims.dims != (2, 2, 2):
        raise ValueError(f"three-qubit state required, got dims {rho.dims.dims}")


def _as_density(state: State) -> DensityOperator:
    if isinstance(state, PureState):
        return density_from_pure(state)
    if isinstance(state, DensityOperator):
        return state
    raise TypeError(f"expected PureState or DensityOperator, got {type(state).__name__}")


def _pairwise_coherences(rho: DensityOperator) -> tuple[float, float, float]:
    c12 = subset_coherence(rho, (1, 2))
    c13 = subset_coherence(rho, (1, 3))
    c23 = subset_coherence(rho, (2, 3))
    return c12, c13, c23


def verify_theorem1(rho: DensityOperator, tolerance: float = EPS_INEQ) -> InequalityResult:
    """C123 >= (C12 + C13 + C23) / 2 for any three-qubit state."""
    _require_three_qubit(rho)
    c12, c13, c23 = _pairwise_coherences(rho)
    return _result("thm1", l1_coherence(rho), (c12 + c13 + c23) / 2.0, tolerance)


def verify_singles_sum(rho: DensityOperator, tolerance: float = EPS_INEQ) -> InequalityResult:
    """Full coherence >= sum of all single-party coherences."""
    n = rho.dims.n_parties
    singles = sum(subset_coherence(rho, (p,)) for p in range(1, n + 1))
    return _result("eq3", l1_coherence(rho), singles, tolerance)


def verify_additive_conjecture(
    rho: DensityOperator, pivot: int, tolerance: float = EPS_INEQ
) -> InequalityResult:
    """C123 >= sum of the two pairwise coherences containing ``pivot``.

    This bound is known to be violated; results document the violation
    rather than signalling failure.
    """
    _require_three_qubit(rho)
    if pivot not in (1, 2, 3):
        raise ValueError(f"pivot must be 1, 2 or 3, got {pivot}")
    pairs = [p for p in ((1, 2), (1, 3), (2, 3)) if pivot in p]
    rhs = sum(subset_coherence(rho, p) for p in pairs)
    return _result(f"eq4-pivot{pivot}", l1_coherence(rho), rhs, tolerance)


def verify_marginal_split(
    rho: DensityOperator, single: int, tolerance: float = EPS_INEQ
) -> InequalityResult:
    """C123 >= C_single + C_complement for any three-qubit state."""
    _require_three_qubit(rho)
    if single not in (1, 2, 3):
        raise ValueError(f"single must be 1, 2 or 3, got {single}")
    complement = tuple(p for p in (1, 2, 3) if p != single)
    rhs = subset_coherence(rho, (single,)) + subset_coherence(rho, complement)
    return _result(f"eq5-single{single}", l1_coherence(rho), rhs, tolerance)


def corollary_name(dims, m: int) -> str:
    return f"cor1-m{m}" if dims.all_qubits else f"cor2-m{m}"


def verify_corollary1(
    rho: DensityOperator, m: int, tolerance: float = EPS_INEQ
) -> InequalityResult:
    """Full coherence >= (sum of C_a over all size-m subsets) / C(n-1, m-1).

    Works for arbitrary local dimensions; m = n-1 reproduces the (n-1)-partite
    bound and m = 2, n = 3 reproduces the half-sum bound.
    """
    n = rho.dims.n_parties
    family = gamma(m, n)
    total = sum(subset_coherence(rho, a) for a in family.members)
    rhs = total / math.comb(n - 1, m - 1)
    return _result(corollary_name(rho.dims, m), l1_coherence(rho), rhs, tolerance)


def verify_theorem3(psi: PureState, tolerance: float = EPS_INEQ) -> InequalityResult:
    """C123 >= (C12 + C13 + C23) / 2 + tau for pure three-qubit states."""
    if not isinstance(psi, PureState):
        raise TypeError("pure state required: the tangle bound does not cover mixed states")
    rho = density_from_pure(psi)
    _require_three_qubit(rho)
    c12, c13, c23 = _pairwise_coherences(rho)
    tau = three_tangle(psi).tau
    return _result("thm3", l1_coherence(rho), (c12 + c13 + c23) / 2.0 + tau, tolerance)


def verify_eq10(psi: PureState, tolerance: float = EPS_INEQ) -> InequalityResult:
    """C123 >= C1 + C2 + C3 + tau for pure three-qubit states."""
    if not isinstance(psi, PureState):
        raise TypeError("pure state required: the tangle bound does not cover mixed states")
    rho = density_from_pure(psi)
    _require_three_qubit(rho)
    singles = sum(subset_coherence(rho, (p,)) for p in (1, 2, 3))
    tau = three_tangle(psi).tau
    return _result("eq10", l1_coherence(rho), singles + tau, tolerance)


def suite_names(dims, pure: bool) -> list[str]:
    """Registry-ordered verifier names applicable to the given input."""
    names: list[str] = []
    if dims.dims == (2, 2, 2):
        names.append("thm1")
        names.append("eq3")
        names.extend(f"eq4-pivot{p}" for p in (1, 2, 3))
        names.extend(f"eq5-single{s}" for s in (1, 2, 3))
    names.extend(corollary_name(dims, m) for m in range(1, dims.n_parties + 1))
    if pure and dims.dims == (2, 2, 2):
        names.extend(["thm3", "eq10"])
    return names


def run_suite(state: State, tolerance: float = EPS_INEQ) -> list[InequalityResult]:
    """Run every applicable verifier, in registry order.

    Pure-only verifiers are skipped for mixed input and three-qubit-only
    verifiers for other dimensions; the subset-family bound runs for every m.
    Input is validated up front so a malformed state yields no partial results.
    """
    psi = state if isinstance(state, PureState) else None
    rho = _as_density(state).validate()
    dims = rho.dims
    results: list[InequalityResult] = []
    if dims.dims == (2, 2, 2):
        results.append(verify_theorem1(rho, tolerance))
        results.append(verify_singles_sum(rho, tolerance))
        for pivot in (1, 2, 3):
            results.append(verify_additive_conjecture(rho, pivot, tolerance))
        for single in (1, 2, 3):
            results.append(verify_marginal_split(rho, single, tolerance))
    for m in range(1, dims.n_parties + 1):
        results.append(verify_corollary1(rho, m, tolerance))
    if psi is not None and dims.dims == (2, 2, 2):
        results.append(verify_theorem3(psi, tolerance))
        results.append(verify_eq10(psi, tolerance))
    return results


# ---------------------------------------------------------------------------
# CSV schema: name,lhs,rhs,slack,holds,tolerance with 17 significant digits,
# enough for exact double round-trips.  Aggregate rows are prefixed "AGG".
# ---------------------------------------------------------------------------

CSV_HEADER = "name,lhs,rhs,slack,holds,tolerance"


def format_real(x: float) -> str:
    return f"{x:.17g}"


def result_to_csv(r: InequalityResult) -> str:
    return ",".join(
        (
            r.name,
            format_real(r.lhs),
            format_real(r.rhs),
            format_real(r.slack),
            "true" if r.holds else "false",
            format_real(r.tolerance),
        )
    )


def write_results_csv(fh: TextIO, results: Iterable[InequalityResult]) -> None:
    fh.write(CSV_HEADER + "\n")
    for r in results:
        fh.write(result_to_csv(r) + "\n")


def parse_results_csv(fh: TextIO) -> list[InequalityResult]:
    """Read standard result rows back; aggregate ("AGG") rows are skipped."""
    results = []
    for i, line in enumerate(fh):
        line = line.strip()
        if not line or (i == 0 and line == CSV_HEADER):
            continue
        fields = line.split(",")
        if fields[0] == "AGG":
            continue
        if len(fields) != 6:
            raise ValueError(f"expected 6 fields per row, got {len(fields)}: {line!r}")
        name, lhs, rhs, slack, holds, tol = fields
        if holds not in ("true", "false"):
            raise ValueError(f"holds must be 'true' or 'false', got {holds!r}")
        results.append(
            InequalityResult(
                name, float(lhs), float(rhs), float(slack), holds == "true", float(tol)
            )
        )
    return results

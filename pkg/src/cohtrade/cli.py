"""Batch command-line driver: verify, sweep, sample, search and oracle."""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

from .coherence import EPS_INEQ
from .families import FAMILIES, QUANTITIES, default_grid, family_sweep
from .inequalities import (
    CSV_HEADER,
    InequalityResult,
    format_real,
    is_conjecture,
    run_suite,
    write_results_csv,
)
from .search import minimize_slack
from .states import InvalidStateError, LocalDims, sample_ginibre_mixed, sample_haar_pure
from .stateio import read_state_file
from .tangle import ckw_tangle_oracle, dprime_slack, three_tangle

_PARAM_NAMES = {"ghz": ("phi",), "w": ("theta", "phi"), "two-term": ("alpha",)}


@dataclass(frozen=True)
class TrialReport:
    """Per-verifier aggregate over a random ensemble."""

    name: str
    trials: int
    violations: int
    min_slack: float
    argmin_seed: int
    tolerance: float


def ensemble_reports(
    dims: LocalDims,
    trials: int,
    seed: int,
    mixed: bool = False,
    rank: int | None = None,
    tolerance: float = EPS_INEQ,
) -> list[TrialReport]:
    """Run the verifier suite on ``trials`` sampled states; trial t uses seed + t."""
    stats: dict[str, list] = {}
    order: list[str] = []
    for t in range(trials):
        trial_seed = seed + t
        if mixed:
            state = sample_ginibre_mixed(dims, rank if rank is not None else dims.total_dim, trial_seed)
        else:
            state = sample_haar_pure(dims, trial_seed)
        for r in run_suite(state, tolerance):
            if r.name not in stats:
                stats[r.name] = [0, 0, float("inf"), trial_seed]
                order.append(r.name)
            entry = stats[r.name]
            entry[0] += 1
            if not r.holds:
                entry[1] += 1
            if r.slack < entry[2]:
                entry[2] = r.slack
                entry[3] = trial_seed
    return [
        TrialReport(name, s[0], s[1], s[2], s[3], tolerance)
        for name, s in ((name, stats[name]) for name in order)
    ]


def _print_result_table(results: list[InequalityResult], out) -> None:
    print(f"{'name':<14}{'lhs':<24}{'rhs':<24}{'slack':<24}holds", file=out)
    for r in results:
        status = "yes" if r.holds else ("violated (conjecture)" if is_conjecture(r.name) else "VIOLATED")
        print(
            f"{r.name:<14}{r.lhs:<24.16g}{r.rhs:<24.16g}{r.slack:<24.16g}{status}",
            file=out,
        )


def _cmd_verify(args) -> int:
    try:
        state = read_state_file(args.statefile)
    except (OSError, InvalidStateError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    results = run_suite(state, args.tolerance)
    _print_result_table(results, sys.stdout)
    if args.csv:
        with open(args.csv, "w", encoding="utf-8") as fh:
            write_results_csv(fh, results)
    failures = [r for r in results if not r.holds and not is_conjecture(r.name)]
    for r in failures:
        print(f"bound violated: {r.name} (slack {r.slack:.3e})", file=sys.stderr)
    return 1 if failures else 0


def _cmd_sweep(args) -> int:
    grid = default_grid(args.family, args.points)
    records = family_sweep(args.family, grid, args.tolerance)
    param_names = _PARAM_NAMES[args.family]

    worst = {q: 0.0 for q in QUANTITIES}
    min_slack: dict[str, float] = {}
    for rec in records:
        for q in QUANTITIES:
            worst[q] = max(worst[q], abs(rec.numeric[q] - rec.closed[q]))
        for r in rec.results:
            min_slack[r.name] = min(min_slack.get(r.name, float("inf")), r.slack)
    print(f"family {args.family}: {len(records)} points")
    for q in QUANTITIES:
        print(f"  max |numeric - closed| for {q}: {worst[q]:.3e}")
    for name, slack in min_slack.items():
        note = " (conjecture)" if is_conjecture(name) else ""
        print(f"  min slack {name}: {slack:.6g}{note}")

    if args.csv:
        verifier_names = [r.name for r in records[0].results]
        header = (
            ["family", "index", *param_names]
            + [col for q in QUANTITIES for col in (f"{q}_closed", q)]
            + [col for v in verifier_names for col in (f"{v}:slack", f"{v}:holds")]
        )
        with open(args.csv, "w", encoding="utf-8") as fh:
            fh.write(",".join(header) + "\n")
            for i, rec in enumerate(records):
                row = [args.family, str(i)]
                row += [format_real(p) for p in rec.point.params]
                for q in QUANTITIES:
                    row += [format_real(rec.closed[q]), format_real(rec.numeric[q])]
                for r in rec.results:
                    row += [format_real(r.slack), "true" if r.holds else "false"]
                fh.write(",".join(row) + "\n")
    return 0


def _cmd_sample(args) -> int:
    dims = LocalDims(args.dims)
    if args.trials < 1:
        print("error: --trials must be >= 1", file=sys.stderr)
        return 2
    if args.rank is not None and not args.mixed:
        print("error: --rank requires --mixed", file=sys.stderr)
        return 2
    if args.rank is not None and not 1 <= args.rank <= dims.total_dim:
        print(f"error: --rank must be in 1..{dims.total_dim}", file=sys.stderr)
        return 2
    reports = ensemble_reports(dims, args.trials, args.seed, args.mixed, args.rank, args.tolerance)
    kind = "mixed" if args.mixed else "pure"
    print(f"dims {args.dims} {kind}: {args.trials} trials, base seed {args.seed}")
    print(f"{'name':<14}{'trials':<9}{'violations':<12}{'min slack':<26}extremal seed")
    for rep in reports:
        print(
            f"{rep.name:<14}{rep.trials:<9}{rep.violations:<12}"
            f"{rep.min_slack:<26.17g}{rep.argmin_seed}"
        )
    for rep in reports:
        if rep.violations and not is_conjecture(rep.name):
            print(
                f"WARNING: proved bound {rep.name} violated in {rep.violations} trials "
                f"(min slack {rep.min_slack:.3e}, seed {rep.argmin_seed})",
                file=sys.stderr,
            )
    if args.csv:
        with open(args.csv, "w", encoding="utf-8") as fh:
            fh.write(CSV_HEADER + "\n")
            for rep in reports:
                fh.write(
                    ",".join(
                        (
                            "AGG",
                            rep.name,
                            str(rep.trials),
                            str(rep.violations),
                            format_real(rep.min_slack),
                            str(rep.argmin_seed),
                            format_real(rep.tolerance),
                        )
                    )
                    + "\n"
                )
    return 0


def _cmd_search(args) -> int:
    dims = LocalDims(args.dims)
    try:
        outcome = minimize_slack(
            args.objective, dims, args.restarts, args.seed, args.iterations, args.rounds
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(f"objective {outcome.objective} at dims {dims.dims}")
    print(f"  best slack:  {outcome.best_value:.17g}")
    print(f"  evaluations: {outcome.evaluations}")
    print(f"  seed:        {outcome.seed}")
    print("  best state amplitudes:")
    for i, amp in enumerate(outcome.best_state.amps):
        print(f"    [{i}] {amp.real:+.12f} {amp.imag:+.12f}i")
    return 0


def _cmd_oracle(args) -> int:
    dims = LocalDims((2, 2, 2))
    max_diff = 0.0
    min_dprime_slack = float("inf")
    for t in range(args.trials):
        psi = sample_haar_pure(dims, args.seed + t)
        tau = three_tangle(psi).tau
        max_diff = max(max_diff, abs(tau - ckw_tangle_oracle(psi)))
        min_dprime_slack = min(min_dprime_slack, dprime_slack(psi) - tau)
    print(f"tangle oracle comparison over {args.trials} Haar states (base seed {args.seed})")
    print(f"  max |tau_formula - tau_monogamy|: {max_diff:.3e}")
    print(f"  min (D'/2 - tau):                 {min_dprime_slack:.3e}")
    agree = max_diff < 1e-8
    print(f"  agreement within 1e-8: {'yes' if agree else 'NO'}")
    return 0


def _dims_arg(text: str) -> tuple[int, ...]:
    try:
        dims = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"dims must be comma-separated integers, got {text!r}")
    if not dims or any(d < 2 for d in dims):
        raise argparse.ArgumentTypeError(f"every local dimension must be >= 2, got {text!r}")
    return dims


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cohtrade",
        description="Verify l1-coherence trade-off bounds on multipartite states.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run the verifier suite on a state file")
    p.add_argument("statefile")
    p.add_argument("--tolerance", type=float, default=EPS_INEQ)
    p.add_argument("--csv", help="write results to this CSV file")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("sweep", help="sweep a parameterized family against closed forms")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("--points", type=int, default=64)
    p.add_argument("--tolerance", type=float, default=EPS_INEQ)
    p.add_argument("--csv")
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("sample", help="run the suite over a random ensemble")
    p.add_argument("--dims", type=_dims_arg, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--mixed", action="store_true")
    p.add_argument("--rank", type=int, help="Ginibre rank (requires --mixed; default: full)")
    p.add_argument("--tolerance", type=float, default=EPS_INEQ)
    p.add_argument("--csv")
    p.set_defaults(func=_cmd_sample)

    p = sub.add_parser("search", help="minimize a verifier's slack over pure states")
    p.add_argument("--objective", required=True)
    p.add_argument("--dims", type=_dims_arg, default=(2, 2, 2))
    p.add_argument("--restarts", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--iterations", type=int, default=200)
    p.add_argument("--rounds", type=int, default=12, help="simplex re-inflations per restart")
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("oracle", help="compare the tangle formula against its oracle")
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_oracle)

    return parser


def cli_main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (InvalidStateError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(cli_main())


if __name__ == "__main__":
    main()

"""Command-line surface: solve, bound, export, inspect, and cross-check.

Exit codes: 0 optimal/ok, 2 incumbent-only, 3 infeasible or mismatch,
1 usage or I/O error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from pathlib import Path

from .exact import (
    available_chord_slots,
    branch_and_bound,
    brute_force,
    star_with_chords,
    structural_lower_bounds,
)
from .graph import graph_metrics, read_edge_list
from .lp import (
    ConstraintSystem,
    build_maxmin,
    build_minmax_distance,
    check_assignment,
    export_lp,
)
from .reporting import (
    ExperimentSpec,
    fraction_json,
    hamiltonian_for,
    metrics_row,
    report_json_dict,
    run_experiment,
)
from .space import SampleSpace

STATUS_EXIT = {"optimal": 0, "incumbent": 2, "infeasible": 3}


def parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc


def resolve_seed(args: argparse.Namespace) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get("NETOPT_SEED")
    if env is not None:
        return int(env)
    return 0


def build_space(args: argparse.Namespace) -> SampleSpace:
    connected = args.space == "connected"
    density = getattr(args, "density", None)
    return SampleSpace(connected=connected, density=density)


def add_model_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--n", type=int, required=True, help="number of nodes")
    p.add_argument("--alpha", type=parse_fraction, default=Fraction(1, 2),
                   help="weight split, rational 'p/q' or decimal (default 1/2)")
    p.add_argument("--space", choices=("connected", "all"), default="connected")
    p.add_argument("--density", type=int, default=None,
                   help="also fix the edge count to this value")
    p.add_argument("--model", choices=("triads_vs_nonedges", "distance_vs_flow"),
                   default="triads_vs_nonedges")
    p.add_argument("--delta-file", default=None,
                   help="distance-matrix file for the distance model "
                        "(default: seeded unit-square generator)")
    p.add_argument("--seed", type=int, default=None,
                   help="PRNG seed (falls back to NETOPT_SEED, then 0)")


def add_run_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--gamma", type=parse_fraction, default=None,
                   help="two-stage suboptimality tolerance in [0, 1]")
    p.add_argument("--out-dir", default=None, help="write result files here")
    p.add_argument("--node-limit", type=int, default=10_000_000)
    p.add_argument("--time-limit", type=float, default=300.0)
    p.add_argument("--restarts", type=int, default=10)


def make_spec(args: argparse.Namespace, solver: str) -> ExperimentSpec:
    return ExperimentSpec(
        n=args.n,
        model=args.model,
        alpha=args.alpha,
        space=build_space(args),
        solver=solver,
        gamma=getattr(args, "gamma", None),
        seed=resolve_seed(args),
        delta_source=args.delta_file,
        restarts=getattr(args, "restarts", 10),
        node_limit=getattr(args, "node_limit", 10_000_000),
        time_limit=getattr(args, "time_limit", 300.0),
    )


def cmd_bound(args: argparse.Namespace) -> int:
    bound = structural_lower_bounds(args.n, args.alpha)
    witness = star_with_chords(
        args.n, min(bound.min_triangles, available_chord_slots(args.n))
    )
    print(json.dumps({
        "n": args.n,
        "alpha": fraction_json(args.alpha),
        "min_triangles": bound.min_triangles,
        "min_edges": bound.min_edges,
        "witness_edges": witness.edge_count,
    }, indent=2))
    return 0


def cmd_solve(args: argparse.Namespace) -> int:
    spec = make_spec(args, args.solver)
    report = run_experiment(spec, args.out_dir)
    print(json.dumps(report_json_dict(report), indent=2))
    return STATUS_EXIT[report.result.status]


def cmd_heuristic(args: argparse.Namespace) -> int:
    spec = make_spec(args, "local_search")
    report = run_experiment(spec, args.out_dir)
    print(json.dumps(report_json_dict(report), indent=2))
    return STATUS_EXIT[report.result.status]


def cmd_export_lp(args: argparse.Namespace) -> int:
    space = build_space(args)
    if args.model == "triads_vs_nonedges":
        cs = build_maxmin(args.n, args.alpha, space)
    else:
        spec = make_spec(args, "brute")
        from .reporting import resolve_delta

        delta = resolve_delta(spec)
        cs = build_minmax_distance(args.n, args.alpha, delta, space)
    export_lp(cs, args.out)
    if args.ir_json:
        Path(args.ir_json).write_text(cs.to_json() + "\n")
    print(f"wrote {args.out}" + (f" and {args.ir_json}" if args.ir_json else ""))
    return 0


def cmd_metrics(args: argparse.Namespace) -> int:
    with open(args.graph_file) as f:
        g = read_edge_list(f)
    print(metrics_row(graph_metrics(g)))
    return 0


def cmd_check(args: argparse.Namespace) -> int:
    cs = ConstraintSystem.from_json_dict(json.loads(Path(args.ir_json).read_text()))
    assignment = json.loads(Path(args.assignment).read_text())
    result = check_assignment(cs, assignment, tolerance=Fraction(args.tol))
    for v in result.row_violations:
        print(f"violated {v.row}: lhs={float(v.lhs)} {v.relation} rhs={float(v.rhs)} "
              f"(by {float(v.amount)})")
    for note in result.variable_violations:
        print(f"variable: {note}")
    for note in result.semantic_notes:
        print(f"semantic: {note}")
    print("FEASIBLE" if result.feasible else "INFEASIBLE")
    return 0 if result.feasible else 3


def cmd_oracle_compare(args: argparse.Namespace) -> int:
    ns = [int(v) for v in args.n_list.split(",")]
    alphas = [parse_fraction(v) for v in args.alpha_list.split(",")]
    space = build_space(args)
    all_ok = True
    for n in ns:
        for alpha in alphas:
            spec = ExperimentSpec(n=n, alpha=alpha, space=space, solver="brute")
            h = hamiltonian_for(spec)
            ref, _ = brute_force(n, space, h)
            cand = branch_and_bound(n, space, h)
            ok = (
                cand.status == "optimal"
                and ref.status == "optimal"
                and cand.objective == ref.objective
            )
            all_ok &= ok
            print(
                f"n={n} alpha={alpha} brute={ref.objective} bnb={cand.objective} "
                f"nodes={cand.nodes_explored} {'OK' if ok else 'MISMATCH'}"
            )
    return 0 if all_ok else 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ergmax",
        description="Synthesize maximally probable networks over constrained graph spaces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bound", help="structural lower bounds and their witness construction")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha", type=parse_fraction, required=True)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("solve", help="exact solve by brute force or branch-and-bound")
    add_model_flags(p)
    add_run_flags(p)
    p.add_argument("--solver", choices=("brute", "bnb"), default="bnb")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("heuristic", help="first-improve local search with restarts")
    add_model_flags(p)
    add_run_flags(p)
    p.set_defaults(func=cmd_heuristic)

    p = sub.add_parser("export-lp", help="write the CPLEX-LP file for a model")
    add_model_flags(p)
    p.add_argument("--out", required=True, help="LP file path")
    p.add_argument("--ir-json", default=None, help="also dump the constraint IR as JSON")
    p.set_defaults(func=cmd_export_lp)

    p = sub.add_parser("metrics", help="density/CC/APL row for an edge-list file")
    p.add_argument("graph_file")
    p.set_defaults(func=cmd_metrics)

    p = sub.add_parser("check", help="verify an external solver assignment against the IR")
    p.add_argument("--ir-json", required=True)
    p.add_argument("--assignment", required=True, help="JSON mapping variable -> value")
    p.add_argument("--tol", default="0", help="violation tolerance (rational or decimal)")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("oracle-compare", help="brute force vs branch-and-bound on a grid")
    p.add_argument("--n-list", default="4,5")
    p.add_argument("--alpha-list", default="3/10,1/2,7/10")
    p.add_argument("--space", choices=("connected", "all"), default="connected")
    p.add_argument("--density", type=int, default=None)
    p.set_defaults(func=cmd_oracle_compare)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

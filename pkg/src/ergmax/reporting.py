"""Experiment orchestration, metric tables, and graph/result exporters."""

from __future__ import annotations

import json
from dataclasses import dataclass
from decimal import ROUND_HALF_EVEN, Decimal
from fractions import Fraction
from pathlib import Path
from typing import Any

from .exact import (
    SolveResult,
    branch_and_bound,
    brute_force,
    solve_two_stage,
    star_with_chords,
    structural_lower_bounds,
    available_chord_slots,
)
from .graph import Graph, GraphMetrics, edge_list_string, graph_metrics
from .local_search import SearchConfig, multi_restart
from .space import SampleSpace
from .stats import (
    DeltaMatrix,
    Hamiltonian,
    StatisticKind,
    StatisticSpec,
    random_unit_square_delta,
)

MODELS = ("triads_vs_nonedges", "distance_vs_flow")
SOLVERS = ("brute", "bnb", "local_search")


@dataclass
class ExperimentSpec:
    """One solvable experiment: model, space, solver, and reproducibility knobs."""

    n: int
    model: str = "triads_vs_nonedges"
    alpha: Fraction = Fraction(1, 2)
    space: SampleSpace = SampleSpace.connected_graphs()
    solver: str = "bnb"
    gamma: Fraction | None = None
    seed: int = 0
    delta_source: str | None = None  # path to a matrix file; None -> seeded generator
    restarts: int = 10
    node_limit: int = 10_000_000
    time_limit: float = 300.0

    def __post_init__(self) -> None:
        if self.model not in MODELS:
            raise ValueError(f"model must be one of {MODELS}")
        if self.solver not in SOLVERS:
            raise ValueError(f"solver must be one of {SOLVERS}")
        self.alpha = Fraction(self.alpha)
        if self.gamma is not None:
            self.gamma = Fraction(self.gamma)


def resolve_delta(spec: ExperimentSpec) -> DeltaMatrix | None:
    if spec.model != "distance_vs_flow":
        return None
    if spec.delta_source is None:
        return random_unit_square_delta(spec.n, spec.seed)
    from .stats import read_delta

    with open(spec.delta_source) as f:
        return read_delta(f)


def hamiltonian_for(spec: ExperimentSpec, delta: DeltaMatrix | None = None) -> Hamiltonian:
    if spec.model == "triads_vs_nonedges":
        return Hamiltonian.max_min_pair(
            spec.alpha,
            StatisticSpec(StatisticKind.NON_EDGES),
            StatisticSpec(StatisticKind.TRIANGLES),
            sense="maximize",
        )
    if delta is None:
        delta = resolve_delta(spec)
    return Hamiltonian.max_min_pair(
        spec.alpha,
        StatisticSpec(StatisticKind.PHYSICAL_DISTANCE, delta),
        StatisticSpec(StatisticKind.FLOW_DISTANCE),
        sense="minimize",
    )


@dataclass
class ExperimentReport:
    spec: ExperimentSpec
    hamiltonian: Hamiltonian
    result: SolveResult
    metrics: GraphMetrics | None
    p_star: Fraction | None = None
    p_star_objective: str | None = None


def run_experiment(spec: ExperimentSpec, out_dir: str | Path | None = None) -> ExperimentReport:
    """Solve per the spec; optionally write JSON, table row, DOT, and edge list."""
    delta = resolve_delta(spec)
    h = hamiltonian_for(spec, delta)
    p_star = None
    p_star_objective = None

    if spec.gamma is not None:
        if spec.model != "triads_vs_nonedges" or spec.solver == "local_search":
            raise ValueError(
                "two-stage gamma solves support the triads model with brute or bnb solvers"
            )
        two = solve_two_stage(
            spec.n,
            spec.space,
            list(h.terms),
            spec.gamma,
            method=spec.solver,
        )
        if two.stage2 is None:
            result = two.stage1
        else:
            result = two.stage2
            p_star = two.p_star
            p_star_objective = two.p_star_objective
    elif spec.solver == "brute":
        result, _ = brute_force(spec.n, spec.space, h)
    elif spec.solver == "bnb":
        incumbent = _warm_start(spec, h)
        result = branch_and_bound(
            spec.n,
            spec.space,
            h,
            incumbent=incumbent,
            node_limit=spec.node_limit,
            time_limit=spec.time_limit,
        )
    else:
        cfg = SearchConfig(
            seed=spec.seed,
            restarts=spec.restarts,
            start="star_plus_chords" if spec.model == "triads_vs_nonedges" else "star",
        )
        result = multi_restart(spec.n, h, spec.space, cfg)

    metrics = graph_metrics(result.graph) if result.graph is not None else None
    report = ExperimentReport(spec, h, result, metrics, p_star, p_star_objective)
    if out_dir is not None:
        write_report_files(report, Path(out_dir))
    return report


def _warm_start(spec: ExperimentSpec, h: Hamiltonian) -> Graph | None:
    """Feasible construction used to seed branch-and-bound."""
    if spec.space.density is not None:
        return None
    if not spec.space.connected:
        return None
    if spec.model == "triads_vs_nonedges":
        chords = min(
            structural_lower_bounds(spec.n, spec.alpha).min_triangles,
            available_chord_slots(spec.n),
        )
        return star_with_chords(spec.n, chords)
    return Graph.star(spec.n)


# ---------------------------------------------------------------------------
# formatting


def fraction_json(q: Fraction | int | None) -> dict[str, Any] | None:
    if q is None:
        return None
    q = Fraction(q)
    return {"fraction": f"{q.numerator}/{q.denominator}", "decimal": float(q)}


def format_decimal(q: Fraction, places: int = 5) -> str:
    """Exact rational rounded half-even to a fixed number of decimal places."""
    d = Decimal(q.numerator) / Decimal(q.denominator)
    quantum = Decimal(1).scaleb(-places)
    return str(d.quantize(quantum, rounding=ROUND_HALF_EVEN))


def metrics_row(metrics: GraphMetrics) -> str:
    """Density, clustering coefficient, average path length at five decimals."""
    apl = "n/a" if metrics.average_path_length is None else format_decimal(metrics.average_path_length)
    return (
        f"{format_decimal(metrics.density)}, "
        f"{format_decimal(metrics.clustering_coefficient)}, "
        f"{apl}"
    )


def dot_string(g: Graph) -> str:
    lines = ["graph G {"]
    lines.extend(f"  {v};" for v in range(g.n))
    lines.extend(f"  {i} -- {j};" for i, j in sorted(g.edges()))
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_dot(g: Graph, path: str | Path) -> None:
    Path(path).write_text(dot_string(g))


def metrics_json(metrics: GraphMetrics | None) -> dict[str, Any] | None:
    if metrics is None:
        return None
    return {
        "edge_count": metrics.edge_count,
        "triangle_count": metrics.triangle_count,
        "density": fraction_json(metrics.density),
        "clustering_transitivity": fraction_json(metrics.clustering_coefficient),
        "clustering_average_local": fraction_json(metrics.average_local_clustering),
        "average_path_length": fraction_json(metrics.average_path_length),
    }


def report_json_dict(report: ExperimentReport) -> dict[str, Any]:
    spec = report.spec
    result = report.result
    return {
        "spec": {
            "n": spec.n,
            "model": spec.model,
            "alpha": fraction_json(spec.alpha),
            "gamma": fraction_json(spec.gamma),
            "space": spec.space.label(),
            "solver": spec.solver,
            "seed": spec.seed,
            "restarts": spec.restarts,
            "delta_source": spec.delta_source,
            "node_limit": spec.node_limit,
            "time_limit": spec.time_limit,
        },
        "status": result.status,
        "objective": fraction_json(result.objective),
        "p_star": fraction_json(report.p_star),
        "p_star_objective": report.p_star_objective,
        "statistics": [
            {
                "kind": spec_.kind.value,
                "weight": fraction_json(theta),
                "value": fraction_json(value),
            }
            for (theta, spec_), value in zip(report.hamiltonian.terms, result.statistic_values)
        ]
        if result.graph is not None
        else [],
        "graph": None
        if result.graph is None
        else {
            "n": result.graph.n,
            "edge_count": result.graph.edge_count,
            "edges": [list(e) for e in sorted(result.graph.edges())],
        },
        "metrics": metrics_json(report.metrics),
        "telemetry": {
            "nodes_explored": result.nodes_explored,
            "bound_at_root": fraction_json(result.bound_at_root),
            "wall_time_s": result.wall_time,
        },
    }


def write_report_files(report: ExperimentReport, out_dir: Path) -> None:
    out_dir.mkdir(parents=True, exist_ok=True)
    (out_dir / "result.json").write_text(json.dumps(report_json_dict(report), indent=2) + "\n")
    if report.result.graph is not None:
        g = report.result.graph
        (out_dir / "graph.txt").write_text(edge_list_string(g))
        export_dot(g, out_dir / "graph.dot")
        assert report.metrics is not None
        (out_dir / "row.txt").write_text(metrics_row(report.metrics) + "\n")

"""Linear-constraint encodings of graph structure, with CPLEX-LP export.

The builders compile binary edge variables, triangle indicators, and
flow-based connectivity/routing constraints into an explicit
:class:`ConstraintSystem` that can be written as a CPLEX LP text file or
dumped as JSON.  Nothing here solves anything: the module's checker
verifies externally produced assignments against both the rows and the
graph semantics they are supposed to encode.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from decimal import Decimal
from fractions import Fraction
from typing import Any, Iterable, Mapping

from .graph import (
    DisconnectedGraphError,
    Graph,
    all_pairs,
    count_triangles,
    is_connected,
    num_pairs,
    reachable_mask,
)
from .space import SampleSpace

Number = Fraction | int


@dataclass(frozen=True)
class Variable:
    name: str
    kind: str  # 'binary' | 'continuous'
    lower: Fraction | None = None
    upper: Fraction | None = None


@dataclass(frozen=True)
class Row:
    name: str
    coeffs: dict[str, Fraction]
    relation: str  # '<=' | '=' | '>='
    rhs: Fraction


@dataclass(frozen=True)
class AffineExpr:
    """A linear expression plus constant, used to splice statistics into models."""

    coeffs: dict[str, Fraction]
    constant: Fraction = Fraction(0)


class ConstraintSystem:
    """Ordered collection of variables, rows and one objective."""

    def __init__(self, name: str = "model"):
        self.name = name
        self.variables: list[Variable] = []
        self.rows: list[Row] = []
        self.objective_sense = "minimize"
        self.objective: dict[str, Fraction] = {}
        self.meta: dict[str, Any] = {}
        self._var_names: set[str] = set()
        self._row_names: set[str] = set()

    def has_variable(self, name: str) -> bool:
        return name in self._var_names

    def add_variable(
        self,
        name: str,
        kind: str,
        lower: Number | None = None,
        upper: Number | None = None,
    ) -> None:
        if name in self._var_names:
            raise ValueError(f"variable {name!r} declared twice")
        if kind not in ("binary", "continuous"):
            raise ValueError(f"unknown variable kind {kind!r}")
        self.variables.append(
            Variable(
                name,
                kind,
                None if lower is None else Fraction(lower),
                None if upper is None else Fraction(upper),
            )
        )
        self._var_names.add(name)

    def add_row(
        self,
        name: str,
        coeffs: Mapping[str, Number],
        relation: str,
        rhs: Number,
    ) -> None:
        if name in self._row_names:
            raise ValueError(f"row {name!r} declared twice")
        if relation not in ("<=", "=", ">="):
            raise ValueError(f"unknown relation {relation!r}")
        unknown = [v for v in coeffs if v not in self._var_names]
        if unknown:
            raise ValueError(f"row {name!r} references undeclared variables {unknown}")
        self.rows.append(
            Row(name, {v: Fraction(c) for v, c in coeffs.items()}, relation, Fraction(rhs))
        )
        self._row_names.add(name)

    def set_objective(self, sense: str, coeffs: Mapping[str, Number]) -> None:
        if sense not in ("maximize", "minimize"):
            raise ValueError(f"unknown sense {sense!r}")
        unknown = [v for v in coeffs if v not in self._var_names]
        if unknown:
            raise ValueError(f"objective references undeclared variables {unknown}")
        self.objective_sense = sense
        self.objective = {v: Fraction(c) for v, c in coeffs.items()}

    # -- serialization ----------------------------------------------------

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "meta": self.meta,
            "objective": {
                "sense": self.objective_sense,
                "coeffs": {v: str(c) for v, c in self.objective.items()},
            },
            "variables": [
                {
                    "name": v.name,
                    "kind": v.kind,
                    "lower": None if v.lower is None else str(v.lower),
                    "upper": None if v.upper is None else str(v.upper),
                }
                for v in self.variables
            ],
            "rows": [
                {
                    "name": r.name,
                    "coeffs": {v: str(c) for v, c in r.coeffs.items()},
                    "relation": r.relation,
                    "rhs": str(r.rhs),
                }
                for r in self.rows
            ],
        }

    def to_json(self, indent: int = 2) -> str:
        return json.dumps(self.to_json_dict(), indent=indent)

    @classmethod
    def from_json_dict(cls, data: dict[str, Any]) -> "ConstraintSystem":
        cs = cls(data.get("name", "model"))
        cs.meta = dict(data.get("meta", {}))
        for v in data["variables"]:
            cs.add_variable(
                v["name"],
                v["kind"],
                None if v["lower"] is None else Fraction(v["lower"]),
                None if v["upper"] is None else Fraction(v["upper"]),
            )
        for r in data["rows"]:
            cs.add_row(
                r["name"],
                {v: Fraction(c) for v, c in r["coeffs"].items()},
                r["relation"],
                Fraction(r["rhs"]),
            )
        obj = data["objective"]
        cs.set_objective(obj["sense"], {v: Fraction(c) for v, c in obj["coeffs"].items()})
        return cs


# ---------------------------------------------------------------------------
# variable-name scheme (deterministic given n and formulation options)


def x_name(i: int, j: int) -> str:
    return f"x_{i}_{j}"


def w_name(i: int, j: int, k: int) -> str:
    return f"w_{i}_{j}_{k}"


def flow_name(i: int, j: int) -> str:
    return f"f_{i}_{j}"


def mcflow_name(h: int, i: int, j: int) -> str:
    return f"fm_{h}_{i}_{j}"


def ensure_edge_variables(cs: ConstraintSystem, n: int) -> None:
    """Declare the binary edge variable for every pair, once."""
    cs.meta.setdefault("n", n)
    if cs.meta["n"] != n:
        raise ValueError("constraint system already built for a different n")
    for i, j in all_pairs(n):
        name = x_name(i, j)
        if not cs.has_variable(name):
            cs.add_variable(name, "binary")


def triples(n: int) -> Iterable[tuple[int, int, int]]:
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                yield i, j, k


# ---------------------------------------------------------------------------
# builders


def build_fixed_density(n: int, d: int, cs: ConstraintSystem | None = None) -> ConstraintSystem:
    """Binary edge variables plus the single equality fixing the edge count."""
    if not (0 <= d <= num_pairs(n)):
        raise ValueError(f"edge count {d} out of range for n={n}")
    cs = cs or ConstraintSystem("fixed_density")
    ensure_edge_variables(cs, n)
    cs.add_row("edge_count", {x_name(i, j): 1 for i, j in all_pairs(n)}, "=", d)
    return cs


def build_triangle_indicators(
    n: int,
    variant: str = "and",
    cs: ConstraintSystem | None = None,
) -> ConstraintSystem:
    """Binary triangle indicators w_ijk for every triple i < j < k.

    ``variant='and'`` is the standard 4-row AND linearization, which pins
    w to the product of the three edge variables without auxiliaries.
    ``variant='aux'`` is an alternative 6-row system with auxiliary
    variables whose third sandwich row repeats the first edge instead of
    covering the closing edge; it does NOT pin w for every corner and is
    kept only for comparison experiments.
    """
    if n < 3:
        raise ValueError("triangle indicators need n >= 3")
    if variant not in ("and", "aux"):
        raise ValueError(f"unknown variant {variant!r}")
    cs = cs or ConstraintSystem("triangle_indicators")
    ensure_edge_variables(cs, n)
    cs.meta["triangle_variant"] = variant
    for i, j, k in triples(n):
        w = w_name(i, j, k)
        xij, xjk, xik = x_name(i, j), x_name(j, k), x_name(i, k)
        cs.add_variable(w, "binary")
        if variant == "and":
            cs.add_row(f"tri_ub1_{i}_{j}_{k}", {w: 1, xij: -1}, "<=", 0)
            cs.add_row(f"tri_ub2_{i}_{j}_{k}", {w: 1, xjk: -1}, "<=", 0)
            cs.add_row(f"tri_ub3_{i}_{j}_{k}", {w: 1, xik: -1}, "<=", 0)
            cs.add_row(
                f"tri_lb_{i}_{j}_{k}", {xij: 1, xjk: 1, xik: 1, w: -1}, "<=", 2
            )
        else:
            y = f"y_{i}_{j}_{k}"
            z = f"z_{i}_{j}_{k}"
            cs.add_variable(y, "binary")
            cs.add_variable(z, "binary")
            # sandwich rows; the third deliberately repeats x_ij
            for tag, xv in (("e1", xij), ("e2", xjk), ("e3", xij)):
                cs.add_row(f"triaux_{tag}lo_{i}_{j}_{k}", {xv: 1, z: 1}, ">=", 1)
                cs.add_row(f"triaux_{tag}hi_{i}_{j}_{k}", {xv: 1, y: -1}, "<=", 0)
            cs.add_row(f"triaux_wlo_{i}_{j}_{k}", {y: 1, z: -1, w: -1}, "<=", 0)
            cs.add_row(f"triaux_whi_{i}_{j}_{k}", {w: 1, z: 1}, "<=", 1)
            cs.add_row(f"triaux_sum_{i}_{j}_{k}", {xij: 1, xjk: 1, xik: 1, z: 1}, "<=", 3)
    return cs


def build_connectivity_flow(
    n: int, root: int = 0, cs: ConstraintSystem | None = None
) -> ConstraintSystem:
    """Single-commodity flow whose feasibility is equivalent to connectivity.

    n-1 units leave the root and one unit terminates at every other node;
    each pair's two directed flows share the capacity n * x_ij.
    """
    if not (0 <= root < n):
        raise ValueError("root out of range")
    cs = cs or ConstraintSystem("connectivity_flow")
    ensure_edge_variables(cs, n)
    cs.meta["flow_root"] = root
    for i, j in all_pairs(n):
        cs.add_variable(flow_name(i, j), "continuous", lower=0)
        cs.add_variable(flow_name(j, i), "continuous", lower=0)
    for k in range(n):
        coeffs: dict[str, Fraction] = {}
        for j in range(n):
            if j == k:
                continue
            coeffs[flow_name(k, j)] = Fraction(1)
            coeffs[flow_name(j, k)] = Fraction(-1)
        cs.add_row(f"flow_balance_{k}", coeffs, "=", n - 1 if k == root else -1)
    for i, j in all_pairs(n):
        cs.add_row(
            f"flow_cap_{i}_{j}",
            {flow_name(i, j): 1, flow_name(j, i): 1, x_name(i, j): -n},
            "<=",
            0,
        )
    return cs


def build_multicommodity_flow(n: int, cs: ConstraintSystem | None = None) -> ConstraintSystem:
    """One commodity per node, n-1 units from its node to all others.

    All commodities share the per-pair capacity n^2 * x_ij; minimizing
    the total flow makes it the flow-distance statistic.
    """
    if n < 2:
        raise ValueError("multicommodity flow needs n >= 2")
    cs = cs or ConstraintSystem("multicommodity_flow")
    ensure_edge_variables(cs, n)
    for h in range(n):
        for i, j in all_pairs(n):
            cs.add_variable(mcflow_name(h, i, j), "continuous", lower=0)
            cs.add_variable(mcflow_name(h, j, i), "continuous", lower=0)
    for h in range(n):
        for k in range(n):
            coeffs = {}
            for j in range(n):
                if j == k:
                    continue
                coeffs[mcflow_name(h, k, j)] = Fraction(1)
                coeffs[mcflow_name(h, j, k)] = Fraction(-1)
            cs.add_row(f"mcflow_balance_{h}_{k}", coeffs, "=", n - 1 if k == h else -1)
    for i, j in all_pairs(n):
        coeffs = {mcflow_name(h, a, b): Fraction(1) for h in range(n) for a, b in ((i, j), (j, i))}
        coeffs[x_name(i, j)] = Fraction(-n * n)
        cs.add_row(f"mcflow_cap_{i}_{j}", coeffs, "<=", 0)
    return cs


# -- affine views of the statistics over LP variables -----------------------


def non_edges_expression(n: int) -> AffineExpr:
    return AffineExpr({x_name(i, j): Fraction(-1) for i, j in all_pairs(n)}, Fraction(num_pairs(n)))


def triangles_expression(n: int) -> AffineExpr:
    return AffineExpr({w_name(i, j, k): Fraction(1) for i, j, k in triples(n)})


def physical_distance_expression(n: int, delta) -> AffineExpr:
    return AffineExpr({x_name(i, j): Fraction(delta[i][j]) for i, j in all_pairs(n)})


def multicommodity_flow_expression(n: int) -> AffineExpr:
    """Total circulating flow; epigraph-sound only on the minimization side."""
    coeffs = {}
    for h in range(n):
        for i, j in all_pairs(n):
            coeffs[mcflow_name(h, i, j)] = Fraction(1)
            coeffs[mcflow_name(h, j, i)] = Fraction(1)
    return AffineExpr(coeffs)


def _add_space_rows(cs: ConstraintSystem, n: int, space: SampleSpace) -> None:
    if space.density is not None:
        build_fixed_density(n, space.density, cs)
    if space.connected:
        build_connectivity_flow(n, 0, cs)
    cs.meta["space"] = space.label()


def build_maxmin(
    n: int,
    alpha: Fraction,
    space: SampleSpace = SampleSpace.connected_graphs(),
    cs: ConstraintSystem | None = None,
) -> ConstraintSystem:
    """Full robust model: maximize H with H below each weighted statistic.

    H <= alpha * (non-edges) and H <= (1 - alpha) * (triangles); a
    zero-weight epigraph row is emitted as written, so alpha in {0, 1}
    pins the optimum at 0.
    """
    alpha = Fraction(alpha)
    if not (0 <= alpha <= 1):
        raise ValueError("alpha must lie in [0, 1]")
    space.validate_for(n)
    cs = cs or ConstraintSystem("maxmin_nonedges_triangles")
    ensure_edge_variables(cs, n)
    build_triangle_indicators(n, "and", cs)
    _add_space_rows(cs, n, space)
    pairs = num_pairs(n)
    cs.add_variable("H", "continuous", lower=0, upper=alpha * pairs)
    ne = non_edges_expression(n)
    row = {name: alpha * -c for name, c in ne.coeffs.items()}  # H - alpha*S1 <= 0
    row["H"] = Fraction(1)
    cs.add_row("epi_non_edges", row, "<=", alpha * ne.constant)
    tri = triangles_expression(n)
    row = {name: -(1 - alpha) * c for name, c in tri.coeffs.items()}
    row["H"] = Fraction(1)
    cs.add_row("epi_triangles", row, "<=", 0)
    cs.set_objective("maximize", {"H": 1})
    cs.meta["alpha"] = str(alpha)
    cs.meta["formulation"] = "maxmin_nonedges_triangles"
    return cs


def build_minmax_distance(
    n: int,
    alpha: Fraction,
    delta,
    space: SampleSpace = SampleSpace.connected_graphs(),
    cs: ConstraintSystem | None = None,
) -> ConstraintSystem:
    """Min-max mirror: minimize H with H above each weighted distance statistic.

    Connectivity is implied by the multicommodity balance rows, so no
    separate connectivity flow is added.
    """
    alpha = Fraction(alpha)
    if not (0 <= alpha <= 1):
        raise ValueError("alpha must lie in [0, 1]")
    space.validate_for(n)
    cs = cs or ConstraintSystem("minmax_distance")
    ensure_edge_variables(cs, n)
    build_multicommodity_flow(n, cs)
    if space.density is not None:
        build_fixed_density(n, space.density, cs)
    cs.meta["space"] = space.label()
    cs.add_variable("H", "continuous", lower=0)
    phys = physical_distance_expression(n, delta)
    row = {name: alpha * c for name, c in phys.coeffs.items()}
    row["H"] = Fraction(-1)
    cs.add_row("epi_physical", row, "<=", 0)  # alpha*S1 - H <= 0
    flow = multicommodity_flow_expression(n)
    row = {name: (1 - alpha) * c for name, c in flow.coeffs.items()}
    row["H"] = Fraction(-1)
    cs.add_row("epi_flow", row, "<=", 0)
    cs.set_objective("minimize", {"H": 1})
    cs.meta["alpha"] = str(alpha)
    cs.meta["formulation"] = "minmax_distance"
    return cs


def build_robust_second_stage(
    base: ConstraintSystem,
    terms: list[tuple[Fraction, AffineExpr]],
    p_star: Fraction,
    gamma: Fraction,
) -> ConstraintSystem:
    """Add epigraph rows H <= theta_j * S_j plus the suboptimality floor.

    The floor requires the weighted sum of statistics to stay above
    gamma * p_star, tying the robust solve to a first-stage optimum.
    """
    gamma = Fraction(gamma)
    if not (0 <= gamma <= 1):
        raise ValueError("gamma must lie in [0, 1]")
    cs = base
    if not cs.has_variable("H"):
        cs.add_variable("H", "continuous", lower=0)
    floor_coeffs: dict[str, Fraction] = {}
    floor_const = Fraction(0)
    for idx, (theta, expr) in enumerate(terms, start=1):
        theta = Fraction(theta)
        row = {name: -theta * c for name, c in expr.coeffs.items()}
        row["H"] = row.get("H", Fraction(0)) + 1
        cs.add_row(f"epi_term_{idx}", row, "<=", theta * expr.constant)
        for name, c in expr.coeffs.items():
            floor_coeffs[name] = floor_coeffs.get(name, Fraction(0)) + theta * c
        floor_const += theta * expr.constant
    cs.add_row("suboptimality_floor", floor_coeffs, ">=", gamma * Fraction(p_star) - floor_const)
    cs.set_objective("maximize", {"H": 1})
    cs.meta["gamma"] = str(gamma)
    cs.meta["p_star"] = str(Fraction(p_star))
    return cs


# ---------------------------------------------------------------------------
# CPLEX LP text export


def _fmt_number(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    rest = q.denominator
    for p in (2, 5):
        while rest % p == 0:
            rest //= p
    if rest == 1:
        return str(Decimal(q.numerator) / Decimal(q.denominator))
    return repr(float(q))


def _fmt_terms(coeffs: Mapping[str, Fraction]) -> str:
    parts = []
    for name, c in coeffs.items():
        sign = "-" if c < 0 else "+"
        parts.append(f"{sign} {_fmt_number(abs(c))} {name}")
    return " ".join(parts)


def lp_string(cs: ConstraintSystem) -> str:
    """Render the system in CPLEX LP text format with deterministic ordering."""
    lines = [f"\\ {cs.name}"]
    lines.append("Maximize" if cs.objective_sense == "maximize" else "Minimize")
    lines.append(f" obj: {_fmt_terms(cs.objective)}".rstrip())
    lines.append("Subject To")
    for row in cs.rows:
        rel = row.relation
        lines.append(f" {row.name}: {_fmt_terms(row.coeffs)} {rel} {_fmt_number(row.rhs)}")
    bounds = []
    for v in cs.variables:
        if v.kind == "binary":
            continue
        if v.lower is None and v.upper is None:
            bounds.append(f" {v.name} free")
        elif v.upper is None:
            bounds.append(f" {_fmt_number(v.lower or Fraction(0))} <= {v.name}")
        elif v.lower is None:
            bounds.append(f" -infinity <= {v.name} <= {_fmt_number(v.upper)}")
        else:
            bounds.append(f" {_fmt_number(v.lower)} <= {v.name} <= {_fmt_number(v.upper)}")
    if bounds:
        lines.append("Bounds")
        lines.extend(bounds)
    binaries = [v.name for v in cs.variables if v.kind == "binary"]
    if binaries:
        lines.append("Binaries")
        lines.extend(f" {name}" for name in binaries)
    lines.append("End")
    return "\n".join(lines) + "\n"


def export_lp(cs: ConstraintSystem, path) -> None:
    with open(path, "w") as f:
        f.write(lp_string(cs))


# ---------------------------------------------------------------------------
# assignment construction and checking


def edge_assignment(g: Graph) -> dict[str, Fraction]:
    return {
        x_name(i, j): Fraction(1 if g.has_edge(i, j) else 0) for i, j in all_pairs(g.n)
    }


def triangle_indicator_assignment(g: Graph, variant: str = "and") -> dict[str, Fraction]:
    values: dict[str, Fraction] = {}
    for i, j, k in triples(g.n):
        prod = int(g.has_edge(i, j) and g.has_edge(j, k) and g.has_edge(i, k))
        values[w_name(i, j, k)] = Fraction(prod)
        if variant == "aux":
            values[f"y_{i}_{j}_{k}"] = Fraction(1)
            values[f"z_{i}_{j}_{k}"] = Fraction(1 - prod)
    return values


def _bfs_tree(g: Graph, root: int) -> tuple[list[int], list[int]]:
    """(parent, visit order) of a BFS tree; raises if g is disconnected."""
    adj = g.adjacency()
    parent = [-1] * g.n
    order = [root]
    seen = 1 << root
    frontier = [root]
    while frontier:
        nxt = []
        for u in frontier:
            m = adj[u] & ~seen
            while m:
                low = m & -m
                v = low.bit_length() - 1
                seen |= low
                parent[v] = u
                order.append(v)
                nxt.append(v)
                m ^= low
        frontier = nxt
    if seen != (1 << g.n) - 1:
        raise DisconnectedGraphError("graph is disconnected; no spanning tree exists")
    return parent, order


def _subtree_sizes(parent: list[int], order: list[int]) -> list[int]:
    size = [1] * len(parent)
    for v in reversed(order[1:]):
        size[parent[v]] += size[v]
    return size


def connectivity_flow_assignment(g: Graph, root: int = 0) -> dict[str, Fraction]:
    """Feasible flow certifying connectivity: route along a BFS tree."""
    parent, order = _bfs_tree(g, root)
    size = _subtree_sizes(parent, order)
    values = {
        flow_name(a, b): Fraction(0)
        for i, j in all_pairs(g.n)
        for a, b in ((i, j), (j, i))
    }
    for v in order[1:]:
        values[flow_name(parent[v], v)] = Fraction(size[v])
    return values


def multicommodity_flow_assignment(g: Graph) -> dict[str, Fraction]:
    """Shortest-path routing for every commodity, via per-root BFS trees."""
    values: dict[str, Fraction] = {}
    for h in range(g.n):
        parent, order = _bfs_tree(g, h)
        size = _subtree_sizes(parent, order)
        for i, j in all_pairs(g.n):
            values[mcflow_name(h, i, j)] = Fraction(0)
            values[mcflow_name(h, j, i)] = Fraction(0)
        for v in order[1:]:
            values[mcflow_name(h, parent[v], v)] = Fraction(size[v])
    return values


def zero_capacity_cut(g: Graph, root: int = 0) -> frozenset[int]:
    """Nodes reachable from the root; a proper subset certifies flow infeasibility.

    Every pair crossing the cut has no edge, so the shared capacity rows
    force zero flow across it while the balance rows demand a positive
    net outflow.
    """
    mask = reachable_mask(g, root)
    return frozenset(v for v in range(g.n) if mask >> v & 1)


def maxmin_assignment(
    n: int, alpha: Fraction, g: Graph, space: SampleSpace = SampleSpace.connected_graphs()
) -> dict[str, Fraction]:
    """Complete variable assignment for a `build_maxmin` system at graph g."""
    alpha = Fraction(alpha)
    values = edge_assignment(g)
    values.update(triangle_indicator_assignment(g, "and"))
    if space.connected:
        values.update(connectivity_flow_assignment(g, 0))
    s1 = Fraction(num_pairs(n) - g.edge_count)
    s2 = Fraction(count_triangles(g))
    values["H"] = min(alpha * s1, (1 - alpha) * s2)
    return values


@dataclass(frozen=True)
class RowViolation:
    row: str
    relation: str
    lhs: Fraction
    rhs: Fraction
    amount: Fraction  # positive violation magnitude


@dataclass
class CheckResult:
    feasible: bool
    row_violations: list[RowViolation] = field(default_factory=list)
    variable_violations: list[str] = field(default_factory=list)
    semantic_notes: list[str] = field(default_factory=list)
    graph: Graph | None = None


def check_assignment(
    cs: ConstraintSystem,
    assignment: Mapping[str, Number | float],
    tolerance: Number = 0,
) -> CheckResult:
    """Verify an assignment against every row, bound, and the graph semantics.

    The assignment must cover every declared variable.  Beyond the rows,
    the x variables are decoded into a graph and the triangle indicators
    and flow rows are checked against triangle counts and connectivity.
    """
    tol = Fraction(tolerance)
    values: dict[str, Fraction] = {}
    missing = []
    for v in cs.variables:
        if v.name not in assignment:
            missing.append(v.name)
        else:
            raw = assignment[v.name]
            values[v.name] = Fraction(str(raw)) if isinstance(raw, float) else Fraction(raw)
    if missing:
        raise ValueError(f"assignment is missing variables: {missing[:5]}"
                         + ("..." if len(missing) > 5 else ""))

    result = CheckResult(feasible=True)
    for v in cs.variables:
        val = values[v.name]
        lo = Fraction(0) if v.kind == "binary" else v.lower
        hi = Fraction(1) if v.kind == "binary" else v.upper
        if lo is not None and val < lo - tol:
            result.variable_violations.append(f"{v.name} = {val} below lower bound {lo}")
        if hi is not None and val > hi + tol:
            result.variable_violations.append(f"{v.name} = {val} above upper bound {hi}")
        if v.kind == "binary" and min(abs(val), abs(1 - val)) > tol:
            result.variable_violations.append(f"{v.name} = {val} is not 0/1")

    violated_rows = set()
    for row in cs.rows:
        lhs = sum((c * values[name] for name, c in row.coeffs.items()), start=Fraction(0))
        if row.relation == "<=":
            amount = lhs - row.rhs
        elif row.relation == ">=":
            amount = row.rhs - lhs
        else:
            amount = abs(lhs - row.rhs)
        if amount > tol:
            result.row_violations.append(RowViolation(row.name, row.relation, lhs, row.rhs, amount))
            violated_rows.add(row.name)

    n = cs.meta.get("n")
    if n is not None and all(cs.has_variable(x_name(i, j)) for i, j in all_pairs(n)):
        g = Graph.from_edges(
            n, (pair for pair in all_pairs(n) if values[x_name(*pair)] >= Fraction(1, 2))
        )
        result.graph = g
        tri_total = Fraction(0)
        w_present = False
        for i, j, k in triples(n):
            name = w_name(i, j, k)
            if not cs.has_variable(name):
                continue
            w_present = True
            tri_total += values[name]
            expected = int(g.has_edge(i, j) and g.has_edge(j, k) and g.has_edge(i, k))
            if values[name] != expected:
                result.semantic_notes.append(
                    f"{name} = {values[name]} but the edge product is {expected}"
                )
        if w_present and tri_total != count_triangles(g):
            result.semantic_notes.append(
                f"sum of triangle indicators {tri_total} != triangle count {count_triangles(g)}"
            )
        flow_rows = [r.name for r in cs.rows if r.name.startswith("flow_")]
        if flow_rows:
            flow_ok = not any(name in violated_rows for name in flow_rows)
            if flow_ok and not is_connected(g):
                result.semantic_notes.append(
                    "connectivity flow rows hold but the decoded graph is disconnected"
                )
            if not flow_ok and is_connected(g):
                result.semantic_notes.append(
                    "decoded graph is connected but the given flow violates its rows"
                )

    result.feasible = not result.row_violations and not result.variable_violations
    return result

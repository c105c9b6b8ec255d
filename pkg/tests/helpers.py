"""Shared independent oracles used across the test suite.

Everything here deliberately avoids the production code paths it is
used to check: triangles by triple enumeration, connectivity by
union-find, shortest paths by dense Floyd-Warshall.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Iterator

from ergmax import Graph, Hamiltonian, StatisticKind, StatisticSpec
from ergmax.graph import num_pairs


def iter_graphs(n: int) -> Iterator[Graph]:
    for bits in range(1 << num_pairs(n)):
        yield Graph(n, bits)


def triangle_count_by_triples(g: Graph) -> int:
    total = 0
    for i, j, k in itertools.combinations(range(g.n), 3):
        if g.has_edge(i, j) and g.has_edge(j, k) and g.has_edge(i, k):
            total += 1
    return total


def union_find_connected(g: Graph) -> bool:
    parent = list(range(g.n))

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for i, j in g.edges():
        parent[find(i)] = find(j)
    return len({find(v) for v in range(g.n)}) == 1


def floyd_warshall_hops(g: Graph) -> list[list[float]]:
    inf = float("inf")
    dist = [[0 if i == j else inf for j in range(g.n)] for i in range(g.n)]
    for i, j in g.edges():
        dist[i][j] = dist[j][i] = 1
    for k in range(g.n):
        for i in range(g.n):
            dik = dist[i][k]
            if dik == inf:
                continue
            row_k = dist[k]
            row_i = dist[i]
            for j in range(g.n):
                alt = dik + row_k[j]
                if alt < row_i[j]:
                    row_i[j] = alt
    return dist


def ordered_hop_sum(g: Graph) -> int:
    """Independent flow-distance oracle from Floyd-Warshall distances."""
    dist = floyd_warshall_hops(g)
    total = 0
    for i in range(g.n):
        for j in range(g.n):
            if i != j:
                if dist[i][j] == float("inf"):
                    raise ValueError("disconnected")
                total += int(dist[i][j])
    return total


def triads_maxmin(alpha: Fraction, sense: str = "maximize") -> Hamiltonian:
    return Hamiltonian.max_min_pair(
        Fraction(alpha),
        StatisticSpec(StatisticKind.NON_EDGES),
        StatisticSpec(StatisticKind.TRIANGLES),
        sense=sense,
    )


def mc_flow_lp_value(g: Graph) -> float | None:
    """Minimum of the multicommodity-flow LP with edges fixed to g (HiGHS).

    Returns None when the LP is infeasible.  This is the route that does
    NOT go through BFS, so it can cross-validate the combinatorial
    flow-distance statistic.
    """
    import numpy as np
    from scipy.optimize import linprog

    from ergmax import lp

    n = g.n
    cs = lp.build_multicommodity_flow(n)
    obj = lp.multicommodity_flow_expression(n)
    x_vals = lp.edge_assignment(g)
    names = [v.name for v in cs.variables if v.name.startswith("fm_")]
    idx = {name: i for i, name in enumerate(names)}
    c = np.array([float(obj.coeffs.get(name, 0)) for name in names])
    A_eq, b_eq, A_ub, b_ub = [], [], [], []
    for row in cs.rows:
        coeffs = np.zeros(len(names))
        const = 0.0
        for name, coef in row.coeffs.items():
            if name in idx:
                coeffs[idx[name]] = float(coef)
            else:
                const += float(coef) * float(x_vals[name])
        rhs = float(row.rhs) - const
        if row.relation == "=":
            A_eq.append(coeffs)
            b_eq.append(rhs)
        elif row.relation == "<=":
            A_ub.append(coeffs)
            b_ub.append(rhs)
        else:
            A_ub.append(-coeffs)
            b_ub.append(-rhs)
    res = linprog(
        c,
        A_ub=np.array(A_ub),
        b_ub=np.array(b_ub),
        A_eq=np.array(A_eq),
        b_eq=np.array(b_eq),
        bounds=(0, None),
        method="highs",
    )
    if res.status == 2:  # infeasible
        return None
    assert res.status == 0, res.message
    return float(res.fun)


def solve_ir_with_milp(cs) -> tuple[float, dict[str, float]] | None:
    """Solve a whole constraint system with scipy's MILP (HiGHS).

    Acts as the external integer-programming solver the LP export is
    meant for.  Returns (objective, assignment) or None if infeasible.
    """
    import numpy as np
    from scipy.optimize import Bounds, LinearConstraint, milp

    names = [v.name for v in cs.variables]
    idx = {name: i for i, name in enumerate(names)}
    nv = len(names)
    sign = -1.0 if cs.objective_sense == "maximize" else 1.0
    c = np.zeros(nv)
    for name, coef in cs.objective.items():
        c[idx[name]] = sign * float(coef)
    integrality = np.array([1 if v.kind == "binary" else 0 for v in cs.variables])
    lb = np.array(
        [0.0 if v.kind == "binary" else (-np.inf if v.lower is None else float(v.lower))
         for v in cs.variables]
    )
    ub = np.array(
        [1.0 if v.kind == "binary" else (np.inf if v.upper is None else float(v.upper))
         for v in cs.variables]
    )
    constraints = []
    for row in cs.rows:
        a = np.zeros(nv)
        for name, coef in row.coeffs.items():
            a[idx[name]] = float(coef)
        rhs = float(row.rhs)
        if row.relation == "<=":
            constraints.append(LinearConstraint(a, -np.inf, rhs))
        elif row.relation == ">=":
            constraints.append(LinearConstraint(a, rhs, np.inf))
        else:
            constraints.append(LinearConstraint(a, rhs, rhs))
    res = milp(c, constraints=constraints, integrality=integrality, bounds=Bounds(lb, ub))
    if res.status == 2:
        return None
    assert res.success, res.message
    return sign * res.fun, dict(zip(names, (float(x) for x in res.x)))

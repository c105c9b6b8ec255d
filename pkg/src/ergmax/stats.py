"""Network statistics and the exponential-model objective built from them.

A :class:`Hamiltonian` is either a weighted sum of statistics (the
classical exponential-family exponent) or a weighted min/max of them
(the robust variant).  Weights stay :class:`~fractions.Fraction` all the
way through so that objective comparisons are exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import TextIO

import numpy as np

from .graph import DisconnectedGraphError, Graph, num_pairs, total_hop_count, count_triangles

DeltaMatrix = tuple[tuple[Fraction, ...], ...]


class StatisticKind(str, Enum):
    NON_EDGES = "non_edges"
    TRIANGLES = "triangles"
    PHYSICAL_DISTANCE = "physical_distance"
    FLOW_DISTANCE = "flow_distance"


def validate_delta(delta: DeltaMatrix) -> None:
    """Reject asymmetric, negative, or nonzero-diagonal distance matrices."""
    n = len(delta)
    for row in delta:
        if len(row) != n:
            raise ValueError("distance matrix must be square")
    for i in range(n):
        if delta[i][i] != 0:
            raise ValueError("distance matrix diagonal must be zero")
        for j in range(i + 1, n):
            if delta[i][j] != delta[j][i]:
                raise ValueError(f"distance matrix asymmetric at ({i}, {j})")
            if delta[i][j] < 0:
                raise ValueError(f"negative distance at ({i}, {j})")


@dataclass(frozen=True)
class StatisticSpec:
    """One structural statistic; a distance matrix is required iff kind is physical."""

    kind: StatisticKind
    delta: DeltaMatrix | None = None

    def __post_init__(self) -> None:
        if self.kind is StatisticKind.PHYSICAL_DISTANCE:
            if self.delta is None:
                raise ValueError("physical_distance needs a distance matrix")
            validate_delta(self.delta)
        elif self.delta is not None:
            raise ValueError(f"{self.kind.value} takes no distance matrix")


def s_non_edges(g: Graph) -> int:
    """Count of absent pairs: n(n-1)/2 minus the edge count."""
    return num_pairs(g.n) - g.edge_count


def s_physical_distance(g: Graph, delta: DeltaMatrix) -> Fraction:
    """Total distance over present edges."""
    if len(delta) != g.n:
        raise ValueError(f"distance matrix is {len(delta)}x{len(delta)}, graph has n={g.n}")
    return sum((delta[i][j] for i, j in g.edges()), start=Fraction(0))


def s_flow_distance(g: Graph) -> int:
    """Minimum total circulating flow delivering one unit between every ordered pair.

    Each unit routes along a shortest path, so the optimum equals the sum
    of shortest-path hop counts over ordered pairs; the equivalent linear
    program lives in :mod:`ergmax.lp` for export and cross-validation.
    """
    if not isinstance(g, Graph):
        raise TypeError("expected a Graph")
    try:
        return total_hop_count(g)
    except DisconnectedGraphError as exc:
        raise DisconnectedGraphError("no feasible circulation on a disconnected graph") from exc


def evaluate_statistic(spec: StatisticSpec, g: Graph) -> Fraction | int:
    if spec.kind is StatisticKind.NON_EDGES:
        return s_non_edges(g)
    if spec.kind is StatisticKind.TRIANGLES:
        return count_triangles(g)
    if spec.kind is StatisticKind.PHYSICAL_DISTANCE:
        assert spec.delta is not None
        return s_physical_distance(g, spec.delta)
    if spec.kind is StatisticKind.FLOW_DISTANCE:
        return s_flow_distance(g)
    raise ValueError(f"unknown statistic kind {spec.kind!r}")


class HamiltonianForm(str, Enum):
    LINEAR = "linear"
    MAX_MIN = "max_min"


@dataclass(frozen=True)
class Hamiltonian:
    """Objective over network statistics.

    ``linear`` form evaluates to the weighted sum of statistics.  The
    ``max_min`` form evaluates to the weighted minimum when maximizing
    (and to the weighted maximum when minimizing, i.e. the min-max
    mirror obtained by switching negative weights to positive).  When
    ``alpha`` is set the form must be ``max_min`` with exactly two terms
    weighted (alpha, 1 - alpha).
    """

    form: HamiltonianForm
    terms: tuple[tuple[Fraction, StatisticSpec], ...]
    sense: str = "maximize"
    alpha: Fraction | None = None

    def __post_init__(self) -> None:
        if self.sense not in ("maximize", "minimize"):
            raise ValueError("sense must be 'maximize' or 'minimize'")
        if not self.terms:
            raise ValueError("a Hamiltonian needs at least one term")
        if self.alpha is not None:
            if self.form is not HamiltonianForm.MAX_MIN or len(self.terms) != 2:
                raise ValueError("alpha rescaling needs the max_min form with two terms")
            if not (0 <= self.alpha <= 1):
                raise ValueError("alpha must lie in [0, 1]")
            t1, t2 = self.terms
            if t1[0] != self.alpha or t2[0] != 1 - self.alpha:
                raise ValueError("term weights must equal (alpha, 1 - alpha)")

    @classmethod
    def linear(
        cls,
        terms: list[tuple[Fraction, StatisticSpec]],
        sense: str = "maximize",
    ) -> "Hamiltonian":
        return cls(HamiltonianForm.LINEAR, tuple(terms), sense)

    @classmethod
    def max_min(
        cls,
        terms: list[tuple[Fraction, StatisticSpec]],
        sense: str = "maximize",
    ) -> "Hamiltonian":
        return cls(HamiltonianForm.MAX_MIN, tuple(terms), sense)

    @classmethod
    def max_min_pair(
        cls,
        alpha: Fraction,
        first: StatisticSpec,
        second: StatisticSpec,
        sense: str = "maximize",
    ) -> "Hamiltonian":
        """Two-term robust objective with weights (alpha, 1 - alpha)."""
        alpha = Fraction(alpha)
        return cls(
            HamiltonianForm.MAX_MIN,
            ((alpha, first), (1 - alpha, second)),
            sense,
            alpha,
        )


def eval_hamiltonian(h: Hamiltonian, g: Graph) -> Fraction:
    """Exact objective value of ``h`` at ``g``."""
    weighted = [theta * Fraction(evaluate_statistic(spec, g)) for theta, spec in h.terms]
    if h.form is HamiltonianForm.LINEAR:
        return sum(weighted, start=Fraction(0))
    return min(weighted) if h.sense == "maximize" else max(weighted)


def statistic_values(h: Hamiltonian, g: Graph) -> tuple[Fraction | int, ...]:
    """Raw (unweighted) statistic values per term, in term order."""
    return tuple(evaluate_statistic(spec, g) for _, spec in h.terms)


def improves(candidate: Fraction, incumbent: Fraction, sense: str) -> bool:
    """Strict improvement test under the given optimization sense."""
    return candidate > incumbent if sense == "maximize" else candidate < incumbent


# ---------------------------------------------------------------------------
# distance matrices

_GRID = 10**6  # distances snap to a 6-decimal rational grid


def random_unit_square_delta(n: int, seed: int) -> DeltaMatrix:
    """Euclidean distances between n seeded uniform points in the unit square.

    Entries are rounded to 6 decimals and stored exactly, so runs are
    reproducible and downstream arithmetic stays rational.
    """
    rng = np.random.default_rng(seed)
    pts = rng.random((n, 2))
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == j:
                row.append(Fraction(0))
            else:
                d = math.hypot(pts[i, 0] - pts[j, 0], pts[i, 1] - pts[j, 1])
                row.append(Fraction(round(d * _GRID), _GRID))
        rows.append(tuple(row))
    return tuple(rows)


def uniform_delta(n: int, value: Fraction = Fraction(1)) -> DeltaMatrix:
    """Constant off-diagonal distance matrix."""
    value = Fraction(value)
    return tuple(
        tuple(Fraction(0) if i == j else value for j in range(n)) for i in range(n)
    )


def write_delta(delta: DeltaMatrix, out: TextIO) -> None:
    out.write(f"{len(delta)}\n")
    for row in delta:
        out.write(" ".join(_format_exact_decimal(v) for v in row) + "\n")


def _format_exact_decimal(value: Fraction) -> str:
    from decimal import Decimal

    if value.denominator == 1:
        return str(value.numerator)
    rest = value.denominator
    for p in (2, 5):
        while rest % p == 0:
            rest //= p
    if rest == 1:
        return str(Decimal(value.numerator) / Decimal(value.denominator))
    return repr(float(value))


def read_delta(inp: TextIO) -> DeltaMatrix:
    """Parse the distance-matrix format: n, then n lines of n decimals.

    Values parse exactly; any asymmetry is rejected outright.
    """
    header = inp.readline().split()
    if len(header) != 1:
        raise ValueError("distance-matrix header must be a single count")
    n = int(header[0])
    rows = []
    for _ in range(n):
        fields = inp.readline().split()
        if len(fields) != n:
            raise ValueError(f"each matrix row needs exactly {n} entries")
        rows.append(tuple(Fraction(f) for f in fields))
    delta = tuple(rows)
    validate_delta(delta)
    return delta

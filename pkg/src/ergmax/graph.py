"""Bitset-backed undirected simple graphs with exact structural metrics.

Edges of a graph on nodes ``0..n-1`` live in a single Python integer,
one bit per unordered pair ``(i, j)`` with ``i < j``, ranked
lexicographically.  All metric arithmetic is exact (:class:`~fractions.Fraction`
or plain ``int``); decimal rendering is left to the reporting layer.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, TextIO


class DisconnectedGraphError(ValueError):
    """A metric that requires a connected graph was asked of a disconnected one."""


def num_pairs(n: int) -> int:
    """Number of unordered node pairs on ``n`` nodes."""
    return n * (n - 1) // 2


def edge_index(i: int, j: int, n: int) -> int:
    """Lexicographic rank of the pair ``(i, j)`` among all pairs with ``i < j < n``."""
    if not (0 <= i < j < n):
        raise ValueError(f"invalid pair ({i}, {j}) for n={n}: need 0 <= i < j < n")
    return i * n - i * (i + 1) // 2 + (j - i - 1)


def pair_of(index: int, n: int) -> tuple[int, int]:
    """Inverse of :func:`edge_index`."""
    if not (0 <= index < num_pairs(n)):
        raise ValueError(f"pair index {index} out of range for n={n}")
    i = 0
    row = n - 1
    while index >= row:
        index -= row
        i += 1
        row -= 1
    return i, i + 1 + index


def all_pairs(n: int) -> Iterator[tuple[int, int]]:
    """All unordered pairs ``(i, j)``, ``i < j``, in lexicographic order."""
    for i in range(n):
        for j in range(i + 1, n):
            yield i, j


class Graph:
    """Undirected simple graph on ``n`` labeled nodes.

    The edge set is an integer bitset indexed by :func:`edge_index`, so
    self-loops and parallel edges are unrepresentable.  Instances are
    treated as immutable: the mutating-style operations (``toggled``,
    ``with_edge``, ``without_edge``) return new graphs.
    """

    __slots__ = ("n", "bits", "_adj")

    def __init__(self, n: int, bits: int = 0):
        if n < 1:
            raise ValueError("graph needs at least one node")
        if bits < 0 or bits >> num_pairs(n):
            raise ValueError(f"edge bitset out of range for n={n}")
        self.n = n
        self.bits = bits
        self._adj: tuple[int, ...] | None = None

    # -- constructors ------------------------------------------------------

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(n, (1 << num_pairs(n)) - 1)

    @classmethod
    def star(cls, n: int, center: int = 0) -> "Graph":
        g = cls(n)
        bits = 0
        for v in range(n):
            if v != center:
                bits |= 1 << edge_index(min(center, v), max(center, v), n)
        return cls(n, bits)

    @classmethod
    def path(cls, n: int) -> "Graph":
        bits = 0
        for v in range(n - 1):
            bits |= 1 << edge_index(v, v + 1, n)
        return cls(n, bits)

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        if n < 3:
            raise ValueError("a cycle needs at least 3 nodes")
        g = cls.path(n)
        return g.with_edge(0, n - 1)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        bits = 0
        for i, j in edges:
            if i > j:
                i, j = j, i
            bits |= 1 << edge_index(i, j, n)
        return cls(n, bits)

    # -- basic queries -----------------------------------------------------

    @property
    def pair_count(self) -> int:
        return num_pairs(self.n)

    @property
    def edge_count(self) -> int:
        return self.bits.bit_count()

    def has_edge(self, i: int, j: int) -> bool:
        if i > j:
            i, j = j, i
        return bool(self.bits >> edge_index(i, j, self.n) & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        bits = self.bits
        while bits:
            low = bits & -bits
            yield pair_of(low.bit_length() - 1, self.n)
            bits ^= low

    def adjacency(self) -> tuple[int, ...]:
        """Per-node neighbor bitmasks (bit ``v`` of ``adjacency()[u]`` = edge uv)."""
        if self._adj is None:
            adj = [0] * self.n
            for i, j in self.edges():
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            self._adj = tuple(adj)
        return self._adj

    def degree(self, v: int) -> int:
        return self.adjacency()[v].bit_count()

    def common_neighbor_count(self, i: int, j: int) -> int:
        adj = self.adjacency()
        return (adj[i] & adj[j]).bit_count()

    # -- derived graphs ----------------------------------------------------

    def toggled(self, i: int, j: int) -> "Graph":
        if i > j:
            i, j = j, i
        return Graph(self.n, self.bits ^ (1 << edge_index(i, j, self.n)))

    def with_edge(self, i: int, j: int) -> "Graph":
        if i > j:
            i, j = j, i
        return Graph(self.n, self.bits | (1 << edge_index(i, j, self.n)))

    def without_edge(self, i: int, j: int) -> "Graph":
        if i > j:
            i, j = j, i
        return Graph(self.n, self.bits & ~(1 << edge_index(i, j, self.n)))

    # -- dunder ------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.bits == other.bits

    def __hash__(self) -> int:
        return hash((self.n, self.bits))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={sorted(self.edges())})"


# ---------------------------------------------------------------------------
# structural counts


def count_triangles(g: Graph) -> int:
    """Number of node triples ``i < j < k`` with all three edges present."""
    adj = g.adjacency()
    total = 0
    for i, j in g.edges():
        # common neighbors above j close a triangle exactly once per triple
        total += ((adj[i] & adj[j]) >> (j + 1)).bit_count()
    return total


def connected_triples(g: Graph) -> int:
    """Number of paths of length two (open or closed), i.e. sum of C(deg, 2)."""
    adj = g.adjacency()
    return sum(d * (d - 1) // 2 for d in (a.bit_count() for a in adj))


def reachable_mask(g: Graph, start: int = 0) -> int:
    """Bitmask of nodes reachable from ``start``."""
    adj = g.adjacency()
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= adj[low.bit_length() - 1]
            f ^= low
        frontier = nxt & ~seen
        seen |= frontier
    return seen


def is_connected(g: Graph) -> bool:
    """True iff one traversal from node 0 reaches every node."""
    return reachable_mask(g, 0) == (1 << g.n) - 1


def hop_counts(g: Graph, source: int) -> list[int]:
    """BFS hop counts from ``source``; unreachable nodes get -1."""
    adj = g.adjacency()
    dist = [-1] * g.n
    dist[source] = 0
    seen = 1 << source
    frontier = seen
    d = 0
    while frontier:
        d += 1
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= adj[low.bit_length() - 1]
            f ^= low
        frontier = nxt & ~seen
        seen |= frontier
        f = frontier
        while f:
            low = f & -f
            dist[low.bit_length() - 1] = d
            f ^= low
    return dist


def _hop_sum_from(g: Graph, source: int) -> int:
    """Sum of BFS hop counts from ``source``; raises if any node is unreachable."""
    adj = g.adjacency()
    seen = 1 << source
    frontier = seen
    d = 0
    total = 0
    while frontier:
        d += 1
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= adj[low.bit_length() - 1]
            f ^= low
        frontier = nxt & ~seen
        seen |= frontier
        total += d * frontier.bit_count()
    if seen != (1 << g.n) - 1:
        raise DisconnectedGraphError("hop sums are undefined on a disconnected graph")
    return total


def total_hop_count(g: Graph) -> int:
    """Sum of shortest-path hop counts over all ordered node pairs."""
    return sum(_hop_sum_from(g, s) for s in range(g.n))


def average_path_length(g: Graph) -> Fraction:
    """Mean shortest-path hop count over ordered node pairs (connected graphs only)."""
    if g.n == 1:
        return Fraction(0)
    return Fraction(total_hop_count(g), g.n * (g.n - 1))


def clustering_coefficient(g: Graph) -> Fraction:
    """Global transitivity: 3 * triangles / connected triples (0 if no triples)."""
    triples = connected_triples(g)
    if triples == 0:
        return Fraction(0)
    return Fraction(3 * count_triangles(g), triples)


def average_local_clustering(g: Graph) -> Fraction:
    """Mean over all nodes of the local clustering coefficient (0 for degree < 2)."""
    adj = g.adjacency()
    total = Fraction(0)
    for v in range(g.n):
        nv = adj[v]
        deg = nv.bit_count()
        if deg < 2:
            continue
        # twice the number of edges among v's neighbors
        links2 = 0
        mask = nv
        while mask:
            low = mask & -mask
            links2 += (adj[low.bit_length() - 1] & nv).bit_count()
            mask ^= low
        total += Fraction(links2, deg * (deg - 1))
    return total / g.n


@dataclass(frozen=True)
class GraphMetrics:
    """Reported structural metrics of a single graph, all exact."""

    edge_count: int
    triangle_count: int
    density: Fraction
    clustering_coefficient: Fraction
    average_local_clustering: Fraction
    average_path_length: Fraction | None  # None when the graph is disconnected


def graph_metrics(g: Graph) -> GraphMetrics:
    apl: Fraction | None
    try:
        apl = average_path_length(g)
    except DisconnectedGraphError:
        apl = None
    pairs = num_pairs(g.n)
    return GraphMetrics(
        edge_count=g.edge_count,
        triangle_count=count_triangles(g),
        density=Fraction(g.edge_count, pairs) if pairs else Fraction(0),
        clustering_coefficient=clustering_coefficient(g),
        average_local_clustering=average_local_clustering(g),
        average_path_length=apl,
    )


# ---------------------------------------------------------------------------
# edge-list text format: first line "n m", then m lines "i j" with i < j


def write_edge_list(g: Graph, out: TextIO) -> None:
    out.write(f"{g.n} {g.edge_count}\n")
    for i, j in sorted(g.edges()):
        out.write(f"{i} {j}\n")


def edge_list_string(g: Graph) -> str:
    lines = [f"{g.n} {g.edge_count}"]
    lines.extend(f"{i} {j}" for i, j in sorted(g.edges()))
    return "\n".join(lines) + "\n"


def read_edge_list(inp: TextIO) -> Graph:
    header = inp.readline().split()
    if len(header) != 2:
        raise ValueError("edge-list header must be 'n m'")
    n, m = int(header[0]), int(header[1])
    edges = []
    for _ in range(m):
        fields = inp.readline().split()
        if len(fields) != 2:
            raise ValueError("edge line must be 'i j'")
        i, j = int(fields[0]), int(fields[1])
        if not (0 <= i < j < n):
            raise ValueError(f"edge ({i}, {j}) violates 0 <= i < j < n")
        edges.append((i, j))
    return Graph.from_edges(n, edges)

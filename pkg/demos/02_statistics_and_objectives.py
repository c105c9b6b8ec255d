"""
Network statistics and graph-probability objectives
===================================================

An exponential random graph model weights structural statistics in the
exponent of the graph probability, so the most probable graph maximizes
the weighted objective.  Two objective forms are supported: the linear
weighted sum and the robust weighted minimum (max-min), which guards
against one statistic collapsing to zero.
"""

from fractions import Fraction

from ergmax import (
    Graph,
    Hamiltonian,
    StatisticKind,
    StatisticSpec,
    eval_hamiltonian,
    s_flow_distance,
    s_non_edges,
    s_physical_distance,
    average_path_length,
    random_unit_square_delta,
)

NE = StatisticSpec(StatisticKind.NON_EDGES)
TRI = StatisticSpec(StatisticKind.TRIANGLES)

star = Graph.star(5)
k4 = Graph.complete(4)

# raw statistics
print("star-5 non-edges:", s_non_edges(star))
print("star-5 circulating flow:", s_flow_distance(star))
print("  ... equals n(n-1) * APL:", 20 * average_path_length(star))

delta = random_unit_square_delta(5, seed=7)
print("star-5 physical distance:", float(s_physical_distance(star, delta)))

# linear objective: plain weighted sum
linear = Hamiltonian.linear([(Fraction(1), NE), (Fraction(2), TRI)])
print("\nlinear objective on K4:", eval_hamiltonian(linear, k4))

# robust objective: weighted minimum with an alpha/(1-alpha) split.
# Trees have no triangles and complete graphs no non-edges, so both
# score zero: the objective rewards graphs balancing the two.
for alpha in (Fraction(3, 10), Fraction(1, 2), Fraction(7, 10)):
    h = Hamiltonian.max_min_pair(alpha, NE, TRI)
    print(f"alpha={alpha}: H(star)={eval_hamiltonian(h, star)}", end="")
    print(f"  H(K4)={eval_hamiltonian(h, k4)}", end="")
    balanced = Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (2, 3)])
    print(f"  H(paw)={eval_hamiltonian(h, balanced)}")

# jointly rescaling the weights never changes which graph wins
h1 = Hamiltonian.max_min([(Fraction(2), NE), (Fraction(3), TRI)])
h5 = Hamiltonian.max_min([(Fraction(10), NE), (Fraction(15), TRI)])
graphs = [Graph(4, bits) for bits in range(64)]
best1 = max(graphs, key=lambda g: eval_hamiltonian(h1, g)).bits
best5 = max(graphs, key=lambda g: eval_hamiltonian(h5, g)).bits
print("\nargmax invariant under joint rescaling:", best1 == best5)

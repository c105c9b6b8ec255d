"""
Bitset graphs and exact structural metrics
==========================================

Graphs live on labeled nodes 0..n-1 with the edge set packed into a
single integer, one bit per node pair in lexicographic order.  Every
metric is computed with exact rational arithmetic; decimals only appear
when formatting.
"""

import io

from ergmax import (
    Graph,
    average_path_length,
    clustering_coefficient,
    count_triangles,
    edge_index,
    graph_metrics,
    is_connected,
    pair_of,
    read_edge_list,
)
from ergmax.graph import edge_list_string
from ergmax.reporting import metrics_row

# pair indexing: (i, j) with i < j maps to a lexicographic rank and back
print("pairs on 4 nodes:", [(pair_of(r, 4)) for r in range(6)])
print("rank of (0, 3):", edge_index(0, 3, 4))

# a few standard graphs
k4 = Graph.complete(4)
star = Graph.star(5)
paw = Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (2, 3)])

for name, g in [("K4", k4), ("star-5", star), ("paw", paw)]:
    print(f"\n{name}: n={g.n} edges={sorted(g.edges())}")
    print("  connected:", is_connected(g))
    print("  triangles:", count_triangles(g))
    print("  clustering:", clustering_coefficient(g))
    if is_connected(g):
        apl = average_path_length(g)
        print("  average path length:", apl, "=", float(apl))

# the reporting row used by the metric tables: density, CC, APL at 5 decimals
print("\ntable rows (density, CC, APL):")
for name, g in [("K4", k4), ("star-5", star)]:
    print(f"  {name}: {metrics_row(graph_metrics(g))}")

# edge-list text format round-trips exactly
text = edge_list_string(paw)
print("\nedge-list format:\n" + text, end="")
assert read_edge_list(io.StringIO(text)) == paw

# graphs are immutable; toggles return new values
denser = paw.with_edge(1, 3)
assert count_triangles(denser) >= count_triangles(paw)
print("after adding (1,3): triangles", count_triangles(paw), "->", count_triangles(denser))

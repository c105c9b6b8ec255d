"""
Medium-scale runs and the reported metric tables
================================================

Two models at reporting scale.  First, the triangle/non-edge tradeoff at
n = 60 for three weight splits, summarized as Density / CC / APL rows.
Second, the distance tradeoff: minimize the worse of total physical
distance (over a seeded unit-square layout) and total circulating flow,
swept across two weight sets, 0.7/0.5/0.3 and 0.1/0.2/0.3.

The distance tradeoff is scale-sensitive: total flow can never drop
below n(n-1), so with unit-square distances the flow term dominates and
the complete graph wins outright.  Scaling the distances (equivalently,
spreading the nodes over a larger region) moves the balance and sparse
clustered layouts emerge.  Runs here use n = 14 to keep the flow
statistic cheap on a desk machine.
"""

import time
from fractions import Fraction

from ergmax import (
    Hamiltonian,
    SampleSpace,
    SearchConfig,
    StatisticKind,
    StatisticSpec,
    graph_metrics,
    multi_restart,
    random_unit_square_delta,
)
from ergmax.reporting import metrics_row

space = SampleSpace.connected_graphs()

# --- triangle/non-edge tradeoff at n = 60 ------------------------------------
print("triads vs non-edges, n=60 (local search, seed 1)")
print("alpha    Density, CC, APL")
NE = StatisticSpec(StatisticKind.NON_EDGES)
TRI = StatisticSpec(StatisticKind.TRIANGLES)
for alpha in (Fraction(7, 10), Fraction(1, 2), Fraction(3, 10)):
    h = Hamiltonian.max_min_pair(alpha, NE, TRI)
    t0 = time.perf_counter()
    res = multi_restart(60, h, space, SearchConfig(seed=1, restarts=2, start="star_plus_chords"))
    row = metrics_row(graph_metrics(res.graph))
    print(f"{str(alpha):7}  {row}   ({time.perf_counter() - t0:.1f}s)")

# --- physical vs routing distance at n = 14 -----------------------------------
n = 14
base = random_unit_square_delta(n, seed=2)
for scale in (1, 20):
    delta = tuple(tuple(v * scale for v in row) for row in base)
    PHYS = StatisticSpec(StatisticKind.PHYSICAL_DISTANCE, delta)
    FLOW = StatisticSpec(StatisticKind.FLOW_DISTANCE)
    print(f"\ndistance tradeoff, n={n}, distance scale x{scale}")
    print("alpha    Density, CC, APL")
    for alpha in (Fraction(7, 10), Fraction(1, 2), Fraction(3, 10),
                  Fraction(1, 10), Fraction(2, 10)):
        h = Hamiltonian.max_min_pair(alpha, PHYS, FLOW, sense="minimize")
        res = multi_restart(n, h, space, SearchConfig(seed=3, restarts=2, start="star"))
        row = metrics_row(graph_metrics(res.graph))
        print(f"{str(alpha):7}  {row}")

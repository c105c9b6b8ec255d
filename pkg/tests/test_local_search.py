import random
from fractions import Fraction

import pytest

from ergmax import (
    Graph,
    SampleSpace,
    SearchConfig,
    branch_and_bound,
    brute_force,
    eval_hamiltonian,
    first_improve,
    has_improving_toggle,
    is_connected,
    multi_restart,
)
from ergmax.local_search import random_connected_graph

from helpers import triads_maxmin

CONNECTED = SampleSpace.connected_graphs()


def test_complete_graph_is_not_locally_optimal():
    # K4 scores 0; dropping any edge yields min(alpha, 2*(1-alpha)) > 0
    h = triads_maxmin(Fraction(1, 2))
    k4 = Graph.complete(4)
    assert eval_hamiltonian(h, k4) == 0
    assert has_improving_toggle(k4, h, CONNECTED)
    res = first_improve(k4, h, CONNECTED, SearchConfig(seed=0))
    assert res.objective > 0
    assert res.status == "incumbent"
    assert not has_improving_toggle(res.graph, h, CONNECTED)


def test_local_optimum_is_a_fixed_point():
    h = triads_maxmin(Fraction(1, 2))
    first = first_improve(Graph.star(6), h, CONNECTED, SearchConfig(seed=3))
    again = first_improve(first.graph, h, CONNECTED, SearchConfig(seed=99))
    assert again.graph == first.graph
    assert again.objective == first.objective


def test_objective_never_decreases_and_stays_feasible():
    h = triads_maxmin(Fraction(7, 10))
    # replay the walk move by move via a tiny iteration cap
    g = Graph.star(6)
    last = eval_hamiltonian(h, g)
    for cap in range(1, 12):
        res = first_improve(
            Graph.star(6), h, CONNECTED, SearchConfig(seed=5, max_iterations=cap)
        )
        assert is_connected(res.graph)
        assert res.objective >= last
        last = res.objective


def test_best_of_restarts_matches_brute_force_at_n5():
    h = triads_maxmin(Fraction(1, 2))
    ref, _ = brute_force(5, CONNECTED, h)
    cfg = SearchConfig(seed=7, restarts=20, start="random_connected")
    res = multi_restart(5, h, CONNECTED, cfg)
    assert res.objective == ref.objective
    assert not has_improving_toggle(res.graph, h, CONNECTED)


def test_multi_restart_is_deterministic():
    h = triads_maxmin(Fraction(7, 10))
    cfg = SearchConfig(seed=11, restarts=5, start="random_connected")
    a = multi_restart(6, h, CONNECTED, cfg)
    b = multi_restart(6, h, CONNECTED, cfg)
    assert a.graph == b.graph
    assert a.objective == b.objective
    assert a.nodes_explored == b.nodes_explored


def test_single_restart_equals_first_improve_with_derived_seed():
    h = triads_maxmin(Fraction(1, 2))
    cfg = SearchConfig(seed=13, restarts=1, start="star")
    combined = multi_restart(6, h, CONNECTED, cfg)
    sub_seed = random.Random(13).randrange(2**63)
    direct = first_improve(
        Graph.star(6), h, CONNECTED, SearchConfig(seed=sub_seed, start="star")
    )
    assert combined.graph == direct.graph
    assert combined.objective == direct.objective


def test_heuristic_value_is_a_valid_bnb_lower_bound():
    h = triads_maxmin(Fraction(7, 10))
    cfg = SearchConfig(seed=2, restarts=5, start="random_connected")
    heur = multi_restart(6, h, CONNECTED, cfg)
    exact = branch_and_bound(6, CONNECTED, h, incumbent=heur.graph)
    assert exact.status == "optimal"
    assert exact.objective >= heur.objective


def test_infeasible_start_is_rejected():
    h = triads_maxmin(Fraction(1, 2))
    with pytest.raises(ValueError):
        first_improve(Graph(5), h, CONNECTED, SearchConfig(seed=0))


def test_fixed_density_space_admits_no_single_toggle():
    h = triads_maxmin(Fraction(1, 2))
    space = SampleSpace.fixed_density(3, connected=True)
    start = Graph.star(4)
    res = first_improve(start, h, space, SearchConfig(seed=0))
    assert res.graph == start  # every toggle changes the edge count


def test_random_connected_graph_is_connected_and_seeded():
    g1 = random_connected_graph(7, random.Random(21))
    g2 = random_connected_graph(7, random.Random(21))
    assert g1 == g2
    assert is_connected(g1)
    sparse = random_connected_graph(9, random.Random(4), p=0.05)
    assert is_connected(sparse)


def test_search_config_validation():
    with pytest.raises(ValueError):
        SearchConfig(restarts=0)
    with pytest.raises(ValueError):
        SearchConfig(max_iterations=0)

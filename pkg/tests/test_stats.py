import io
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ergmax import (
    DisconnectedGraphError,
    Graph,
    Hamiltonian,
    StatisticKind,
    StatisticSpec,
    average_path_length,
    eval_hamiltonian,
    is_connected,
    random_unit_square_delta,
    s_flow_distance,
    s_non_edges,
    s_physical_distance,
)
from ergmax.stats import HamiltonianForm, read_delta, uniform_delta, validate_delta, write_delta

from helpers import iter_graphs, ordered_hop_sum, triads_maxmin

NE = StatisticSpec(StatisticKind.NON_EDGES)
TRI = StatisticSpec(StatisticKind.TRIANGLES)


def test_non_edges_examples():
    assert s_non_edges(Graph.complete(4)) == 0
    assert s_non_edges(Graph(5)) == 10
    assert s_non_edges(Graph.star(5)) == 6


def test_physical_distance_examples():
    assert s_physical_distance(Graph(3), uniform_delta(3)) == 0
    delta = uniform_delta(2, Fraction(3, 2))
    assert s_physical_distance(Graph.from_edges(2, [(0, 1)]), delta) == Fraction(3, 2)
    assert s_physical_distance(Graph.complete(3), uniform_delta(3)) == 3


def test_physical_distance_dimension_mismatch():
    with pytest.raises(ValueError):
        s_physical_distance(Graph.complete(3), uniform_delta(4))


def test_flow_distance_examples():
    assert s_flow_distance(Graph.complete(4)) == 12
    assert s_flow_distance(Graph.path(3)) == 8
    # star on 5 nodes: 8 ordered pairs at hop 1, 12 at hop 2
    assert s_flow_distance(Graph.star(5)) == 32


def test_flow_distance_rejects_disconnected():
    with pytest.raises(DisconnectedGraphError):
        s_flow_distance(Graph.from_edges(4, [(0, 1), (2, 3)]))


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_flow_distance_identity_and_independent_oracle(n):
    for g in iter_graphs(n):
        if not is_connected(g):
            continue
        flow = s_flow_distance(g)
        assert flow == n * (n - 1) * average_path_length(g)
        assert flow == ordered_hop_sum(g)


# -- Hamiltonians ------------------------------------------------------------


def test_eval_examples():
    h = triads_maxmin(Fraction(1, 2))
    assert eval_hamiltonian(h, Graph.star(5)) == 0
    lin = Hamiltonian.linear([(Fraction(1), NE), (Fraction(2), TRI)])
    assert eval_hamiltonian(lin, Graph.complete(4)) == 8
    assert eval_hamiltonian(triads_maxmin(Fraction(7, 10)), Graph.complete(4)) == 0


def test_maxmin_zero_on_trees_and_complete_graphs():
    for n in range(2, 7):
        h = triads_maxmin(Fraction(1, 2))
        assert eval_hamiltonian(h, Graph.star(n)) == 0
        assert eval_hamiltonian(h, Graph.path(n)) == 0
        assert eval_hamiltonian(h, Graph.complete(n)) == 0


def test_min_max_sense_flips_inner_aggregation():
    delta = uniform_delta(3)
    h = Hamiltonian.max_min_pair(
        Fraction(1, 2),
        StatisticSpec(StatisticKind.PHYSICAL_DISTANCE, delta),
        StatisticSpec(StatisticKind.FLOW_DISTANCE),
        sense="minimize",
    )
    k3 = Graph.complete(3)
    # physical = 3, flow = 6; minimize takes the larger weighted term
    assert eval_hamiltonian(h, k3) == Fraction(6, 2)


@settings(max_examples=50)
@given(
    st.integers(min_value=1, max_value=50),
    st.integers(min_value=1, max_value=50),
    st.integers(min_value=1, max_value=20),
)
def test_maxmin_argmax_invariant_under_rescaling(t1, t2, c):
    graphs = [g for g in iter_graphs(4) if is_connected(g)]

    def argmax(theta1, theta2):
        h = Hamiltonian.max_min([(Fraction(theta1), NE), (Fraction(theta2), TRI)])
        best = max(eval_hamiltonian(h, g) for g in graphs)
        return {g.bits for g in graphs if eval_hamiltonian(h, g) == best}

    assert argmax(t1, t2) == argmax(c * t1, c * t2)


def test_hamiltonian_validation():
    with pytest.raises(ValueError):
        Hamiltonian.linear([])
    with pytest.raises(ValueError):
        Hamiltonian(HamiltonianForm.LINEAR, ((Fraction(1), NE),), sense="upward")
    with pytest.raises(ValueError):
        # alpha demands matching term weights
        Hamiltonian(
            HamiltonianForm.MAX_MIN,
            ((Fraction(1, 3), NE), (Fraction(1, 3), TRI)),
            alpha=Fraction(1, 2),
        )
    with pytest.raises(ValueError):
        StatisticSpec(StatisticKind.PHYSICAL_DISTANCE)
    with pytest.raises(ValueError):
        StatisticSpec(StatisticKind.TRIANGLES, uniform_delta(3))


# -- distance matrices -------------------------------------------------------


def test_random_delta_is_symmetric_grid_snapped_and_seeded():
    d1 = random_unit_square_delta(6, seed=9)
    d2 = random_unit_square_delta(6, seed=9)
    d3 = random_unit_square_delta(6, seed=10)
    assert d1 == d2
    assert d1 != d3
    validate_delta(d1)
    for i in range(6):
        for j in range(6):
            assert (d1[i][j] * 10**6).denominator == 1


def test_delta_roundtrip_and_asymmetric_rejection():
    delta = random_unit_square_delta(4, seed=3)
    buf = io.StringIO()
    write_delta(delta, buf)
    assert read_delta(io.StringIO(buf.getvalue())) == delta

    bad = "2\n0 0.5\n0.4 0\n"
    with pytest.raises(ValueError):
        read_delta(io.StringIO(bad))

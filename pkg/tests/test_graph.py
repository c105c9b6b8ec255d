import io
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ergmax import (
    DisconnectedGraphError,
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
from ergmax.graph import edge_list_string, num_pairs

from helpers import iter_graphs, triangle_count_by_triples, union_find_connected


# -- pair indexing -----------------------------------------------------------


def test_edge_index_examples():
    assert edge_index(0, 1, 4) == 0
    assert edge_index(2, 3, 4) == 5
    assert edge_index(0, 3, 4) == 2


@pytest.mark.parametrize("i,j", [(1, 1), (2, 1), (0, 4), (-1, 2)])
def test_edge_index_rejects_bad_pairs(i, j):
    with pytest.raises(ValueError):
        edge_index(i, j, 4)


@pytest.mark.parametrize("n", range(2, 9))
def test_pair_index_roundtrip_exhaustive(n):
    seen = set()
    for i in range(n):
        for j in range(i + 1, n):
            idx = edge_index(i, j, n)
            assert pair_of(idx, n) == (i, j)
            seen.add(idx)
    assert seen == set(range(num_pairs(n)))


@given(st.integers(min_value=2, max_value=200), st.data())
def test_pair_index_roundtrip_random(n, data):
    i = data.draw(st.integers(min_value=0, max_value=n - 2))
    j = data.draw(st.integers(min_value=i + 1, max_value=n - 1))
    assert pair_of(edge_index(i, j, n), n) == (i, j)


# -- triangles ---------------------------------------------------------------


def test_triangle_examples():
    assert count_triangles(Graph.complete(4)) == 4
    assert count_triangles(Graph.star(5)) == 0
    assert count_triangles(Graph.cycle(5)) == 0


@pytest.mark.parametrize("n", [3, 4, 5])
def test_triangles_match_triple_enumeration(n):
    for g in iter_graphs(n):
        assert count_triangles(g) == triangle_count_by_triples(g)


def test_triangles_match_triple_enumeration_n6():
    # full sweep of all 2^15 graphs
    for g in iter_graphs(6):
        assert count_triangles(g) == triangle_count_by_triples(g)


# -- connectivity ------------------------------------------------------------


def test_connectivity_examples():
    assert is_connected(Graph.star(6))
    assert not is_connected(Graph.from_edges(4, [(0, 1), (2, 3)]))
    assert is_connected(Graph(1))


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_connectivity_matches_union_find(n):
    for g in iter_graphs(n):
        assert is_connected(g) == union_find_connected(g)


# -- path lengths ------------------------------------------------------------


def test_average_path_length_examples():
    assert average_path_length(Graph.complete(4)) == 1
    assert average_path_length(Graph.path(3)) == Fraction(4, 3)
    assert average_path_length(Graph.star(5)) == Fraction(8, 5)


def test_average_path_length_rejects_disconnected():
    with pytest.raises(DisconnectedGraphError):
        average_path_length(Graph.from_edges(4, [(0, 1), (2, 3)]))


# -- clustering --------------------------------------------------------------


def test_clustering_examples():
    assert clustering_coefficient(Graph.complete(4)) == 1
    assert clustering_coefficient(Graph.star(5)) == 0
    paw = Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (2, 3)])
    assert clustering_coefficient(paw) == Fraction(3, 5)


def test_average_local_clustering_on_paw():
    # nodes 0,1 close their single neighbor pair; node 2 closes 1 of 3; node 3 has degree 1
    from ergmax import average_local_clustering

    paw = Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (2, 3)])
    assert average_local_clustering(paw) == (1 + 1 + Fraction(1, 3) + 0) / 4


# -- monotonicity under edge addition ----------------------------------------


@settings(max_examples=200)
@given(st.integers(min_value=2, max_value=7), st.data())
def test_adding_an_edge_is_monotone(n, data):
    bits = data.draw(st.integers(min_value=0, max_value=(1 << num_pairs(n)) - 1))
    g = Graph(n, bits)
    absent = [p for p in range(num_pairs(n)) if not bits >> p & 1]
    if not absent:
        return
    p = data.draw(st.sampled_from(absent))
    g2 = Graph(n, bits | 1 << p)
    assert count_triangles(g2) >= count_triangles(g)
    assert g2.edge_count == g.edge_count + 1
    if is_connected(g):
        assert average_path_length(g2) <= average_path_length(g)


# -- metrics bundle ----------------------------------------------------------


def test_graph_metrics_consistency():
    g = Graph.star(5)
    m = graph_metrics(g)
    assert m.density == Fraction(4, 10)
    assert m.edge_count == 4
    assert m.triangle_count == 0
    assert m.average_path_length == Fraction(8, 5)
    disc = graph_metrics(Graph.from_edges(4, [(0, 1), (2, 3)]))
    assert disc.average_path_length is None


def test_triangle_count_below_binomial_bound():
    for g in iter_graphs(5):
        assert count_triangles(g) <= 10  # C(5,3)


# -- edge-list format --------------------------------------------------------


def test_edge_list_roundtrip():
    g = Graph.from_edges(5, [(0, 4), (1, 2), (0, 1)])
    text = edge_list_string(g)
    assert text.splitlines()[0] == "5 3"
    # writer emits sorted lexicographic order
    assert text.splitlines()[1:] == ["0 1", "0 4", "1 2"]
    assert read_edge_list(io.StringIO(text)) == g


@given(st.integers(min_value=1, max_value=8), st.randoms())
def test_edge_list_roundtrip_random(n, rnd):
    bits = rnd.getrandbits(num_pairs(n)) if num_pairs(n) else 0
    g = Graph(n, bits)
    assert read_edge_list(io.StringIO(edge_list_string(g))) == g


def test_edge_list_rejects_malformed():
    with pytest.raises(ValueError):
        read_edge_list(io.StringIO("3\n0 1\n"))
    with pytest.raises(ValueError):
        read_edge_list(io.StringIO("3 1\n1 0\n"))
    with pytest.raises(ValueError):
        read_edge_list(io.StringIO("3 1\n0 3\n"))

from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import cycle, forests, path, umbrella_ordering_exists
from localbox.boxes.boxrep import is_normalized, verify
from localbox.errors import PreconditionError, ValidationError
from localbox.graphs.graph_core import Graph, clique_number, complement, girth, multicyclic_free
from localbox.graphs.interval_algs import (IntervalModel, cointerval_model, diam3_cointerval, interval_color,
                                           is_cointerval, is_interval, sparse_two_box, support, tree_two_box)


def small_atlas() -> list:
    "All 1253 graphs on at most seven vertices"
    return [Graph.from_networkx(H) for H in nx.graph_atlas_g()]


def subdivided_claw() -> Graph:
    return Graph.from_edges(7, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6)])


@pytest.mark.slow
def test_recognition_matches_brute_force():
    "Recognition agrees with the umbrella ordering search on every graph up to seven vertices"
    for G in small_atlas():
        check = is_interval(G)
        assert check.ok == umbrella_ordering_exists(G), G
        if check.ok:
            assert check.model.graph() == G
            assert is_normalized(check.model.as_representation())


def test_cointerval_girth_five():
    "A connected graph of girth at least five is co-interval iff it is a tree of diameter at most three"
    for H in nx.graph_atlas_g():
        if H.number_of_nodes() == 0 or not nx.is_connected(H):
            continue
        G = Graph.from_networkx(H)
        if girth(G) < 5:
            continue
        small_tree = nx.is_tree(H) and nx.diameter(H) <= 3
        assert is_cointerval(G) == small_tree, G
        assert is_cointerval(G) == umbrella_ordering_exists(complement(G)), G


def test_obstructions():
    "Failures come with an induced cycle or an asteroidal triple"
    check = is_interval(cycle(5))
    assert not check.ok
    assert check.obstruction[0] == "induced_cycle"
    assert len(check.obstruction[1]) == 5
    check = is_interval(subdivided_claw())
    assert check.obstruction == ("asteroidal_triple", (4, 5, 6))
    assert is_interval(Graph.empty(0)).ok


def test_interval_model_of_disconnected_graph():
    "Components are laid out side by side"
    G = Graph.from_edges(6, [(0, 1), (1, 2), (4, 5)])
    check = is_interval(G)
    assert check.ok and check.model.graph() == G


def test_cointerval():
    "Co-interval checks work on the support only"
    two_edges = Graph.from_edges(5, [(0, 1), (2, 3)])
    assert support(two_edges) == [0, 1, 2, 3]
    assert not is_cointerval(two_edges)
    labels, model = cointerval_model(path(4))
    assert labels == [0, 1, 2, 3]
    assert model.graph() == complement(path(4))


@pytest.mark.parametrize("T", [
    Graph.from_edges(2, [(0, 1)]),
    Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)]),
    path(4),
    Graph.from_edges(7, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (1, 6)]),
])
def test_diam3_cointerval(T):
    "Interval model of the complement of a double star"
    model = diam3_cointerval(T)
    assert model.graph() == complement(T)


@pytest.mark.parametrize("T", [path(5), cycle(4), Graph.empty(3)])
def test_diam3_cointerval_rejects(T):
    "Long paths, cycles and edgeless graphs are refused"
    with pytest.raises(PreconditionError):
        diam3_cointerval(T)


@settings(max_examples=60, deadline=None)
@given(forests(max_n=14))
def test_tree_two_box(T):
    "Forests have two-dimensional representations"
    R = tree_two_box(T)
    assert R.dims == 2
    assert verify(R, T, 2).ok


def test_tree_two_box_rejects_cycles():
    "Only forests"
    with pytest.raises(PreconditionError):
        tree_two_box(cycle(3))


@st.composite
def sparse_graphs(draw):
    "Forests with at most one extra edge per tree"
    T = draw(forests(max_n=14))
    edges = set(T.edges)
    for comp in multicyclic_free(T).components:
        missing = [(u, v) for u, v in combinations(sorted(comp), 2) if (u, v) not in edges]
        if missing and draw(st.booleans()):
            edges.add(missing[draw(st.integers(0, len(missing) - 1))])
    return Graph.from_edges(T.n, edges)


@settings(max_examples=80, deadline=None)
@given(sparse_graphs())
def test_sparse_two_box(G):
    "At most one cycle per component gives two boxes"
    R = sparse_two_box(G)
    assert R.dims == 2
    assert verify(R, G, 2).ok
    assert is_normalized(R)


@pytest.mark.parametrize("k", [3, 4, 5, 8])
def test_sparse_two_box_cycles_with_pendants(k):
    "Cycles with hanging paths and trees"
    edges = [(i, (i + 1) % k) for i in range(k)]
    edges += [(0, k), (k, k + 1), (1, k + 2), (k + 2, k + 3), (k + 2, k + 4), (k - 1, k + 5)]
    G = Graph.from_edges(k + 6, edges)
    assert verify(sparse_two_box(G), G, 2).ok


def test_sparse_two_box_rejects_two_cycles():
    "A component with two cycles is refused"
    with pytest.raises(PreconditionError, match="vertex 0"):
        sparse_two_box(Graph.complete(4))


def test_interval_color():
    "Left-endpoint greedy uses clique-number many colors"
    check = is_interval(Graph.from_edges(6, [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (3, 5), (4, 5)]))
    G = check.model.graph()
    colors = interval_color(G, check.model)
    assert max(colors) == clique_number(G) == 3
    assert all(colors[u] != colors[v] for u, v in G.edges)
    with pytest.raises(ValidationError):
        interval_color(cycle(4), IntervalModel(check.model.intervals[:4]))

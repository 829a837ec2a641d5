from itertools import combinations

import networkx as nx
import pytest

from conftest import complete_minus_pm, cycle, path, umbrella_ordering_exists
from localbox.boxes.boxrep import verify
from localbox.constructions.girth5 import avgdeg_lower
from localbox.graphs.graph_core import Graph, complement, girth
from localbox.graphs.interval_algs import is_cointerval
from localbox.solvers.exact_solver import box_exact, chromatic_exact, lbox_at_most, lbox_exact


def connected_atlas() -> list:
    "The 143 connected graphs on one to six vertices"
    return [Graph.from_networkx(H) for H in nx.graph_atlas_g()
            if 1 <= H.number_of_nodes() <= 6 and nx.is_connected(H)]


def cover_number(G: Graph) -> int:
    """
    Smallest d such that the edges of the complement are covered by edge sets
    F, each co-interval on its own endpoints, with every vertex in at most d of them.
    """
    Gc = complement(G)
    edges = sorted(Gc.edges)
    parts = []
    for size in range(1, len(edges) + 1):
        for F in combinations(edges, size):
            ends = sorted({v for e in F for v in e})
            index = {v: i for i, v in enumerate(ends)}
            H = Graph.from_edges(len(ends), [(index[u], index[v]) for u, v in F])
            if umbrella_ordering_exists(complement(H)):
                parts.append((frozenset(F), ends))

    def covers(uncovered: frozenset, load: dict, d: int) -> bool:
        if not uncovered:
            return True
        first = min(uncovered)
        for F, ends in parts:
            if first in F and all(load[v] < d for v in ends):
                for v in ends:
                    load[v] += 1
                found = covers(uncovered - F, load, d)
                for v in ends:
                    load[v] -= 1
                if found:
                    return True
        return False

    d = 0
    while not covers(frozenset(edges), {v: 0 for v in range(G.n)}, d):
        d += 1
    return d


def lbox_at_most_one(G: Graph) -> bool:
    "Every component of the complement with an edge is co-interval"
    Gc = complement(G)
    H = Gc.to_networkx()
    for comp in nx.connected_components(H):
        if len(comp) > 1 and not is_cointerval(Gc.induced(comp)[0]):
            return False
    return True


def test_known_values(c4, c5, petersen_complement, k6_minus_pm):
    "Small graphs with known local boxicity and boxicity"
    assert lbox_exact(c4).value == 1
    assert box_exact(c4).value == 2
    assert lbox_exact(c5).value == 2
    assert box_exact(k6_minus_pm).value == 3
    result = lbox_exact(petersen_complement)
    assert result.value == 2 and result.exact
    assert verify(result.certificate, petersen_complement, 2).ok


def test_complete_and_edgeless():
    "Complete graphs are 0, edgeless graphs on two or more vertices are 1"
    for n in (0, 1, 4):
        assert lbox_exact(Graph.complete(n)).value == 0
        assert box_exact(Graph.complete(n)).value == 0
    assert lbox_exact(Graph.empty(3)).value == 1
    assert box_exact(Graph.empty(3)).value == 1


def test_witnesses(c5):
    "Lower bounds come with a reason"
    result = lbox_exact(c5)
    assert "average-degree" in result.lower_bound_witness
    result = lbox_exact(c5, degree_bound=False)
    assert result.value == 2
    assert "exhaustive" in result.lower_bound_witness
    assert "exhaustive" in box_exact(complete_minus_pm(6)).lower_bound_witness


def test_lbox_at_most(c5):
    "Decision version with certificates"
    assert lbox_at_most(c5, 1) == (False, None)
    answer, R = lbox_at_most(c5, 2)
    assert answer and verify(R, c5, 2).ok
    answer, R = lbox_at_most(path(5), 1)
    assert answer and verify(R, path(5), 1).ok


def test_certificates_for_box(c4, k6_minus_pm):
    "Box certificates use exactly the reported number of dimensions"
    for G in (c4, k6_minus_pm, cycle(5), path(6)):
        result = box_exact(G)
        assert result.certificate.dims == result.value
        assert verify(result.certificate, G, result.value).ok


@pytest.mark.slow
def test_atlas_batch():
    "Every connected graph on at most six vertices: certificates, lbox <= box, lbox <= 1 oracle, degree bound"
    graphs = connected_atlas()
    assert len(graphs) == 143
    for G in graphs:
        lbox = lbox_exact(G)
        box = box_exact(G)
        assert lbox.exact and box.exact
        assert verify(lbox.certificate, G, lbox.value).ok
        assert verify(box.certificate, G, box.value).ok
        assert lbox.value <= box.value
        if lbox.value > 0:
            assert (lbox.value == 1) == lbox_at_most_one(G), G
        if girth(complement(G)) >= 5:
            plain = lbox_exact(G, degree_bound=False)
            assert plain.value == lbox.value
            assert plain.value >= avgdeg_lower(G), G


def test_cover_enumeration_agrees():
    "Exhaustive co-interval covers of the complement give the same value on every graph up to five vertices"
    for H in nx.graph_atlas_g():
        if not 1 <= H.number_of_nodes() <= 5:
            continue
        G = Graph.from_networkx(H)
        assert lbox_exact(G).value == cover_number(G), G


def test_chromatic(petersen_graph):
    "Chromatic numbers of a few graphs"
    assert chromatic_exact(cycle(5)).value == 3
    assert chromatic_exact(cycle(6)).value == 2
    assert chromatic_exact(petersen_graph).value == 3
    assert chromatic_exact(Graph.complete(5)).value == 5
    assert chromatic_exact(Graph.empty(0)).value == 0
    grotzsch = Graph.from_networkx(nx.mycielski_graph(4))
    result = chromatic_exact(grotzsch)
    assert result.value == 4 and result.status == "exact"
    assert all(result.colors[u] != result.colors[v] for u, v in grotzsch.edges)

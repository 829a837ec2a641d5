from fractions import Fraction
from itertools import combinations

import networkx as nx
import pytest
from hypothesis import strategies as st

from localbox.boxes.boxrep import Interval, LocalBox, Representation
from localbox.graphs.graph_core import Graph, complement


def cycle(n: int) -> Graph:
    return Graph.from_networkx(nx.cycle_graph(n))


def path(n: int) -> Graph:
    return Graph.from_networkx(nx.path_graph(n))


def petersen() -> Graph:
    return Graph.from_networkx(nx.petersen_graph())


def complete_minus_pm(n: int) -> Graph:
    """K_n minus the perfect matching {i, i + n/2}."""
    half = n // 2
    return Graph.from_edges(n, [(u, v) for u, v in combinations(range(n), 2) if v != u + half])


def umbrella_ordering_exists(G: Graph) -> bool:
    """
    Backtracking search for a vertex order in which u < v < w and uw an edge
    imply uv an edge. Such an order exists iff G is an interval graph.
    """
    def extend(prefix: list, rest: set) -> bool:
        if not rest:
            return True
        for w in sorted(rest):
            if all(G.has_edge(u, v) for i, u in enumerate(prefix) if G.has_edge(u, w) for v in prefix[i + 1:]):
                if extend(prefix + [w], rest - {w}):
                    return True
        return False

    return extend([], set(range(G.n)))


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 7) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, k in zip(pairs, keep) if k])


@st.composite
def forests(draw, min_n: int = 1, max_n: int = 12) -> Graph:
    """Random forests: every vertex but the first picks a parent or stays a root."""
    n = draw(st.integers(min_n, max_n))
    edges = []
    for v in range(1, n):
        parent = draw(st.integers(-1, v - 1))
        if parent >= 0:
            edges.append((parent, v))
    return Graph.from_edges(n, edges)


@pytest.fixture
def c4() -> Graph:
    return cycle(4)


@pytest.fixture
def c5() -> Graph:
    return cycle(5)


@pytest.fixture
def petersen_graph() -> Graph:
    return petersen()


@pytest.fixture
def petersen_complement() -> Graph:
    return complement(petersen())


@pytest.fixture
def k6_minus_pm() -> Graph:
    return complete_minus_pm(6)


@st.composite
def representations(draw, max_n: int = 8, max_dims: int = 4, max_locality: int = 2, fractions: bool = False):
    """Random sparse box representations with small endpoints."""
    n = draw(st.integers(0, max_n))
    dims = draw(st.integers(1, max_dims))
    endpoint = st.integers(0, 6)
    if fractions:
        endpoint = st.builds(Fraction, st.integers(0, 12), st.sampled_from([1, 2, 3]))
    boxes = []
    for _ in range(n):
        chosen = draw(st.lists(st.integers(0, dims - 1), unique=True, max_size=min(max_locality, dims)))
        box = {}
        for dim in chosen:
            a, b = draw(endpoint), draw(endpoint)
            box[dim] = Interval(min(a, b), max(a, b))
        boxes.append(LocalBox(box))
    return Representation(n, dims, tuple(boxes))

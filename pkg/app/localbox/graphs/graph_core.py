'''
Graph representation, graph file formats and the structural
subroutines used by every construction of the toolkit:
complement, girth, cycle census, orientations, matchings and cliques.

Vertices are always the integers 0..n-1. Named vertices only
exist at the I/O boundary (`from_networkx`, edge list files).

(c) 2025
'''

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from pathlib import Path
from typing import Iterable, NamedTuple

import networkx as nx

from localbox.errors import DomainError, FormatError, PreconditionError

# -----------------------------TYPES----------------------------------


@dataclass(frozen=True)
class Graph:
    """
    Finite simple undirected graph on the vertices 0..n-1.

    Edges are stored as sorted pairs (u, v) with u < v.
    """
    n: int
    edges: frozenset

    def __post_init__(self):
        if self.n < 0:
            raise DomainError(f"vertex count must be nonnegative, got {self.n}")
        normalized = set()
        for u, v in self.edges:
            if u == v:
                raise DomainError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise DomainError(f"edge ({u}, {v}) outside 0..{self.n - 1}")
            normalized.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(normalized))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable) -> "Graph":
        return cls(n, frozenset((int(u), int(v)) for u, v in edges))

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(n, frozenset(combinations(range(n), 2)))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, frozenset())

    @classmethod
    def from_networkx(cls, G: nx.Graph) -> "Graph":
        """
        Converts a networkx graph, numbering its nodes in iteration order.

        Args:
            G (nx.Graph): Undirected simple graph with arbitrary node labels.

        Returns:
            Graph: The same graph on 0..n-1.
        """
        index = {node: i for i, node in enumerate(G.nodes())}
        return cls(len(index), frozenset((index[u], index[v]) for u, v in G.edges() if u != v))

    def to_networkx(self) -> nx.Graph:
        H = nx.Graph()
        H.add_nodes_from(range(self.n))
        H.add_edges_from(self.edges)
        return H

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def _adjacency(self) -> tuple:
        adj = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(frozenset(a) for a in adj)

    def neighbors(self, v: int) -> frozenset:
        return self._adjacency[v]

    def degree(self, v: int) -> int:
        return len(self._adjacency[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self._adjacency), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adjacency[u]

    def is_regular(self, k: int | None = None) -> bool:
        """True if every vertex has the same degree (equal to `k` when given)."""
        degrees = {len(a) for a in self._adjacency}
        if len(degrees) > 1:
            return False
        if k is None or not degrees:
            return True
        return degrees == {k}

    def induced(self, S: Iterable) -> tuple["Graph", list]:
        """
        Induced subgraph G[S].

        Returns:
            tuple[Graph, list]: The subgraph relabelled 0..|S|-1 in increasing
                                order, and the list mapping new labels to old ones.
        """
        labels = sorted(set(S))
        index = {v: i for i, v in enumerate(labels)}
        edges = [(index[u], index[v]) for u, v in self.edges if u in index and v in index]
        return Graph.from_edges(len(labels), edges), labels

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class Orientation:
    """Direction assignment: `arcs` holds one (tail, head) pair per edge of `base`."""
    base: Graph
    arcs: frozenset

    def __post_init__(self):
        undirected = [(min(t, h), max(t, h)) for t, h in self.arcs]
        if len(undirected) != len(set(undirected)) or set(undirected) != set(self.base.edges):
            raise DomainError("orientation must direct every edge of its base graph exactly once")

    @cached_property
    def _out(self) -> tuple:
        out = [[] for _ in range(self.base.n)]
        for t, h in self.arcs:
            out[t].append(h)
        return tuple(tuple(sorted(o)) for o in out)

    @cached_property
    def _in(self) -> tuple:
        inc = [[] for _ in range(self.base.n)]
        for t, h in self.arcs:
            inc[h].append(t)
        return tuple(tuple(sorted(i)) for i in inc)

    def outdegree(self, v: int) -> int:
        return len(self._out[v])

    def indegree(self, v: int) -> int:
        return len(self._in[v])

    def in_neighbors(self, v: int) -> tuple:
        return self._in[v]

    def out_neighbors(self, v: int) -> tuple:
        return self._out[v]

    def max_outdegree(self) -> int:
        return max((len(o) for o in self._out), default=0)


@dataclass(frozen=True)
class Matching:
    base: Graph
    pairs: frozenset

    def __post_init__(self):
        seen = set()
        for u, v in self.pairs:
            if not self.base.has_edge(u, v):
                raise DomainError(f"({u}, {v}) is not an edge of the base graph")
            if u in seen or v in seen:
                raise DomainError(f"vertex used twice in matching ({u}, {v})")
            seen.update((u, v))

    @property
    def size(self) -> int:
        return len(self.pairs)

    @property
    def is_perfect(self) -> bool:
        return 2 * len(self.pairs) == self.base.n

    def mate(self, v: int) -> int | None:
        for a, b in self.pairs:
            if a == v:
                return b
            if b == v:
                return a
        return None


@dataclass(frozen=True)
class VertexPartition:
    """Disjoint classes whose union is 0..n-1. Empty classes are allowed."""
    n: int
    classes: tuple

    def __post_init__(self):
        classes = tuple(frozenset(c) for c in self.classes)
        object.__setattr__(self, "classes", classes)
        if not classes:
            raise DomainError("a partition needs at least one class")
        union = set()
        for i, c in enumerate(classes):
            if union & c:
                raise DomainError(f"class {i} overlaps an earlier class")
            union |= c
        if union != set(range(self.n)):
            raise DomainError("partition classes must cover exactly the vertices 0..n-1")

    @classmethod
    def from_labels(cls, labels, s: int) -> "VertexPartition":
        """Builds the partition whose class i holds the vertices labelled i."""
        buckets = [set() for _ in range(s)]
        for v, label in enumerate(labels):
            buckets[int(label)].add(v)
        return cls(len(labels), tuple(buckets))

    @property
    def s(self) -> int:
        return len(self.classes)

    def union(self, indices: Iterable) -> frozenset:
        out = set()
        for i in indices:
            out |= self.classes[i]
        return frozenset(out)


class CycleCensus(NamedTuple):
    free: bool
    components: list          # vertex sets of the connected components
    cycle_counts: list        # m_C - n_C + 1 per component


# -----------------------------FUNCTIONS----------------------------------

def _parse_edgelist(text: str, n: int | None) -> Graph:
    edges = []
    declared = None
    top = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            fields = line[1:].split()
            if len(fields) == 2 and fields[0] == "n":
                try:
                    declared = int(fields[1])
                except ValueError:
                    raise FormatError(f"bad vertex count header {line!r}", line=lineno) from None
            continue
        fields = line.split("#", 1)[0].split()
        if len(fields) != 2:
            raise FormatError(f"expected 'u v', got {line!r}", line=lineno)
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise FormatError(f"non-integer vertex in {line!r}", line=lineno) from None
        if u < 0 or v < 0:
            raise FormatError(f"negative vertex in {line!r}", line=lineno)
        if u == v:
            raise FormatError(f"self-loop {line!r}", line=lineno)
        edges.append((u, v))
        top = max(top, u, v)

    count = n if n is not None else declared
    if count is None:
        count = top + 1
    if top >= count:
        raise FormatError(f"vertex {top} exceeds the vertex count {count}")
    return Graph.from_edges(count, edges)


def _parse_graph6(data: bytes) -> Graph:
    body = data.strip()
    start = 0
    if body.startswith(b">>graph6<<"):
        start = len(b">>graph6<<")
    for offset in range(start, len(body)):
        if not 63 <= body[offset] <= 126:
            raise FormatError(f"byte {body[offset]!r} outside the graph6 alphabet", offset=offset)
    if start == len(body):
        raise FormatError("empty graph6 string", offset=start)
    try:
        H = nx.from_graph6_bytes(body)
    except (nx.NetworkXError, ValueError, IndexError) as err:
        raise FormatError(f"malformed graph6 string: {err}", offset=start) from None
    return Graph.from_networkx(H)


def parse_graph(text: bytes | str, format: str = "edgelist", n: int | None = None) -> Graph:
    """
    Parses a graph document.

    Args:
        text (bytes | str): The document.
        format (str): "graph6" or "edgelist".
        n (int | None): Vertex count for edge lists without a `# n <count>` header.
                        Defaults to one more than the largest vertex seen.

    Returns:
        Graph: The encoded graph.

    Raises:
        FormatError: If the document is malformed; carries the line (edge list)
                     or byte offset (graph6) of the problem.
    """
    if format == "graph6":
        data = text.encode("ascii", errors="replace") if isinstance(text, str) else text
        return _parse_graph6(data)
    if format == "edgelist":
        if isinstance(text, bytes):
            try:
                text = text.decode("utf-8")
            except UnicodeDecodeError as err:
                raise FormatError("edge list is not valid UTF-8", offset=err.start) from None
        return _parse_edgelist(text, n)
    raise DomainError(f"unknown graph format {format!r}")


def emit_graph(G: Graph, format: str = "edgelist") -> bytes:
    """
    Writes a graph in the named format. Inverse of `parse_graph`.

    Edge lists start with a `# n <count>` header so that isolated
    trailing vertices survive a round trip.
    """
    if format == "graph6":
        return nx.to_graph6_bytes(G.to_networkx(), header=False)
    if format == "edgelist":
        lines = [f"# n {G.n}"] + [f"{u} {v}" for u, v in sorted(G.edges)]
        return ("\n".join(lines) + "\n").encode("utf-8")
    raise DomainError(f"unknown graph format {format!r}")


def graph_format_for(path: str | Path) -> str:
    return "graph6" if Path(path).suffix == ".g6" else "edgelist"


def read_graph_file(path: str | Path) -> Graph:
    path = Path(path)
    return parse_graph(path.read_bytes(), graph_format_for(path))


def write_graph_file(G: Graph, path: str | Path) -> None:
    path = Path(path)
    path.write_bytes(emit_graph(G, graph_format_for(path)))


def complement(G: Graph) -> Graph:
    return Graph.from_networkx(nx.complement(G.to_networkx()))


def girth(G: Graph) -> int | float:
    """
    Length of a shortest cycle of G.

    Returns:
        int | float: The girth, or `math.inf` when G is a forest.
    """
    value = nx.girth(G.to_networkx())
    return math.inf if value == math.inf else int(value)


def multicyclic_free(G: Graph) -> CycleCensus:
    """
    Cycle census per connected component.

    Returns:
        CycleCensus: `free` is True iff every component C has m_C <= n_C,
                     i.e. at most one cycle; `cycle_counts` holds m_C - n_C + 1.
    """
    H = G.to_networkx()
    components = sorted((frozenset(c) for c in nx.connected_components(H)), key=min)
    counts = [H.subgraph(c).number_of_edges() - len(c) + 1 for c in components]
    return CycleCensus(all(k <= 1 for k in counts), components, counts)


def eulerian_orientation(G: Graph) -> Orientation:
    """
    Orients every edge along an Eulerian circuit of its component.

    Raises:
        PreconditionError: If some vertex has odd degree (the first one is named).
    """
    for v in range(G.n):
        if G.degree(v) % 2:
            raise PreconditionError(f"vertex {v} has odd degree {G.degree(v)}")

    H = G.to_networkx()
    arcs = set()
    for comp in sorted(nx.connected_components(H), key=min):
        if len(comp) < 2:
            continue
        sub = H.subgraph(comp)
        arcs.update(nx.eulerian_circuit(sub, source=min(comp)))
    return Orientation(G, frozenset(arcs))


def _orient_walk(edges: list) -> list:
    """Orients a list of consecutive cycle edges consistently along the walk."""
    a, b = edges[0][0], edges[0][1]
    nxt = edges[1] if len(edges) > 1 else None
    current = b if nxt is not None and a in nxt else a
    arcs = []
    for u, v in edges:
        if u == current:
            arcs.append((u, v))
            current = v
        else:
            arcs.append((v, u))
            current = u
    return arcs


def halfplus_orientation(G: Graph) -> Orientation:
    """
    Peels edge-disjoint cycles (lowest-vertex-first DFS) and orients each along
    its traversal, then orients the remaining forest toward the lowest vertex of
    every tree. Every vertex gets out-degree at most ceil(deg/2).
    """
    H = G.to_networkx()
    arcs = []
    while True:
        sources = sorted(v for v in H.nodes if H.degree(v) > 0)
        if not sources:
            break
        try:
            cycle = nx.find_cycle(H, source=sources)
        except nx.NetworkXNoCycle:
            break
        cycle = [(e[0], e[1]) for e in cycle]
        arcs.extend(_orient_walk(cycle))
        H.remove_edges_from(cycle)

    for comp in sorted(nx.connected_components(H), key=min):
        root = min(comp)
        for child, parent in nx.bfs_predecessors(H, root, sort_neighbors=sorted):
            arcs.append((child, parent))
    return Orientation(G, frozenset(arcs))


def maximum_matching(G: Graph) -> Matching:
    """Maximum-cardinality matching (blossom algorithm)."""
    pairs = nx.max_weight_matching(G.to_networkx(), maxcardinality=True)
    return Matching(G, frozenset((min(u, v), max(u, v)) for u, v in pairs))


def clique_number(G: Graph) -> int:
    if G.n == 0:
        return 0
    return max(len(c) for c in nx.find_cliques(G.to_networkx()))


def average_degree(G: Graph) -> Fraction:
    """
    Exact average degree 2m/n.

    Raises:
        DomainError: If G has no vertices.
    """
    if G.n == 0:
        raise DomainError("average degree is undefined for the empty vertex set")
    return Fraction(2 * G.m, G.n)


def find_triangle(G: Graph) -> tuple | None:
    """Lexicographically first triangle (u, v, w), u < v < w, or None."""
    for u, v in sorted(G.edges):
        common = [w for w in G.neighbors(u) & G.neighbors(v) if w > v]
        if common:
            return (u, v, min(common))
    return None


def is_independent(G: Graph, S: Iterable) -> bool:
    S = list(S)
    return not any(G.has_edge(u, v) for u, v in combinations(S, 2))

'''
Exact oracles for small graphs: local boxicity, boxicity and
chromatic number, computed directly from their definitions.

Local boxicity and boxicity are solved as covering problems on the
complement: a d-local representation is a cover of the complement by
co-interval subgraphs in which every vertex lies in at most d parts, a
d-box representation is a cover by d co-interval spanning subgraphs.

Every answer carries a certificate that is re-verified before it is
returned. When the time budget runs out the result says "unknown"
together with the best bounds found; it never guesses.

(c) 2025
'''

import time
from dataclasses import dataclass
from itertools import permutations

import networkx as nx

from localbox.boxes.boxrep import Interval, Representation, UNIVERSAL, verify
from localbox.boxes.views import CoIntervalCover, CoverPart, from_cover
from localbox.config import setting, silent
from localbox.errors import AuditError, ValidationError
from localbox.graphs.graph_core import Graph, average_degree, clique_number, complement, girth

# -----------------------------TYPES----------------------------------


@dataclass(frozen=True)
class SolveResult:
    value: int | None
    certificate: Representation | None
    lower_bound_witness: str
    status: str = "exact"             # "exact" or "unknown"
    lower_bound: int = 0
    upper_bound: int | None = None

    @property
    def exact(self) -> bool:
        return self.status == "exact"


@dataclass(frozen=True)
class ChromaticResult:
    value: int | None
    colors: list | None
    status: str = "exact"
    lower_bound: int = 0
    upper_bound: int | None = None


@dataclass(frozen=True)
class _Part:
    support: int                      # vertex bitmask
    edges: int                        # bitmask over the complement edges
    model: tuple                      # ((vertex, lo, hi), ...)


class _Timeout(Exception):
    pass


class _Clock:
    def __init__(self, budget: float):
        self.deadline = time.monotonic() + budget
        self.ticks = 0

    def tick(self):
        self.ticks += 1
        if self.ticks % 2048 == 0 and time.monotonic() > self.deadline:
            raise _Timeout()


# -----------------------------FUNCTIONS----------------------------------

def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _edge_index(Gc: Graph) -> dict:
    return {e: i for i, e in enumerate(sorted(Gc.edges))}


def _sequence_model(G: Graph, seq: tuple, keep: int) -> tuple:
    """Intervals [i, R(i)] of a vertex sequence, restricted to the vertex mask `keep`."""
    position = {v: i for i, v in enumerate(seq)}
    model = []
    for v in seq:
        if not keep >> v & 1:
            continue
        i = position[v]
        reach = max((position[w] for w in G.neighbors(v) if w in position and position[w] > i), default=i)
        model.append((v, i, reach))
    return tuple(sorted(model))


def _support_of(edge_mask: int, edges: list) -> int:
    support = 0
    for i in _bits(edge_mask):
        u, v = edges[i]
        support |= (1 << u) | (1 << v)
    return support


def _maximal_per_support(found: dict, G: Graph, edges: list) -> list:
    """Keeps, for every support, the edge-maximal parts only."""
    groups = {}
    for edge_mask, seq in found.items():
        groups.setdefault(_support_of(edge_mask, edges), []).append((edge_mask, seq))
    parts = []
    for support, items in groups.items():
        items.sort(key=lambda item: -bin(item[0]).count("1"))
        kept = []
        for edge_mask, seq in items:
            if any(edge_mask & ~other == 0 for other, _ in kept):
                continue
            kept.append((edge_mask, seq))
        parts.extend(_Part(support, edge_mask, _sequence_model(G, seq, support)) for edge_mask, seq in kept)
    return parts


def _ordering_parts(G: Graph, index: dict, clock: _Clock) -> list:
    """
    Co-interval subgraphs of the complement that dominate all others.

    A vertex sequence v_1..v_k gives v_i the interval [i, R(i)], R(i) being the
    last position of a neighbour of v_i. Every minimal interval completion of
    G[S] arises this way, so the complements of these completions, trimmed
    to their non-isolated vertices, dominate every co-interval part.
    Sequences are grown by prepending, which only adds edges at the new vertex.
    """
    edges = sorted(index, key=index.get)
    found = {}
    stack = [((v,), 1 << v, 0) for v in reversed(range(G.n))]
    while stack:
        clock.tick()
        seq, used, hedges = stack.pop()
        if hedges and hedges not in found:
            found[hedges] = seq
        for v in reversed(range(G.n)):
            if used >> v & 1:
                continue
            reach = -1
            for j, w in enumerate(seq):
                if G.has_edge(v, w):
                    reach = j
            extra = 0
            for w in seq[reach + 1:]:
                extra |= 1 << index[(min(v, w), max(v, w))]
            stack.append(((v,) + seq, used | 1 << v, hedges | extra))
    return _maximal_per_support(found, G, edges)


def _tree_parts(Gc: Graph, index: dict, clock: _Clock) -> list:
    """
    Co-interval parts of a complement of girth at least five: trees of diameter
    at most three, i.e. an edge uv with any leaves A at u and B at v, modelled
    by u -> {0}, v -> {2}, A -> [1, 2], B -> [0, 1].
    """
    found = {}
    for u, v in sorted(Gc.edges):
        left = sorted(Gc.neighbors(u) - {v})
        right = sorted(Gc.neighbors(v) - {u})
        for amask in range(1 << len(left)):
            A = [left[i] for i in range(len(left)) if amask >> i & 1]
            for bmask in range(1 << len(right)):
                clock.tick()
                B = [right[i] for i in range(len(right)) if bmask >> i & 1]
                edge_mask = 1 << index[(u, v)]
                for w in A:
                    edge_mask |= 1 << index[(min(u, w), max(u, w))]
                for w in B:
                    edge_mask |= 1 << index[(min(v, w), max(v, w))]
                if edge_mask in found:
                    continue
                support = (1 << u) | (1 << v)
                model = [(u, 0, 0), (v, 2, 2)]
                for w in A:
                    support |= 1 << w
                    model.append((w, 1, 2))
                for w in B:
                    support |= 1 << w
                    model.append((w, 0, 1))
                found[edge_mask] = _Part(support, edge_mask, tuple(sorted(model)))
    return list(found.values())


def _to_certificate(parts: list, Gc: Graph, edges: list) -> Representation:
    cover_parts = []
    for p in parts:
        support = frozenset(_bits(p.support))
        part_edges = frozenset(edges[i] for i in _bits(p.edges))
        model = {v: Interval(lo, hi) for v, lo, hi in p.model if v in support}
        cover_parts.append(CoverPart(support, part_edges, model))
    return from_cover(CoIntervalCover(Gc, tuple(cover_parts)))


def _local_cover(parts: list, n: int, edge_count: int, incident: list, d: int, clock: _Clock) -> list | None:
    """
    Depth-first search for a cover of every complement edge in which every
    vertex lies in at most d parts. Branches on the lowest uncovered edge.
    """
    by_edge = [[] for _ in range(edge_count)]
    for p in parts:
        for i in _bits(p.edges):
            by_edge[i].append(p)
    reach = [0] * n
    for p in parts:
        for v in _bits(p.support):
            reach[v] = max(reach[v], bin(p.edges & incident[v]).count("1"))
    failed = set()

    def search(uncovered: int, caps: tuple) -> list | None:
        if not uncovered:
            return []
        key = (uncovered, caps)
        if key in failed:
            return None
        clock.tick()
        for v in range(n):
            need = bin(uncovered & incident[v]).count("1")
            if need and caps[v] * reach[v] < need:
                failed.add(key)
                return None
        blocked = 0
        for v in range(n):
            if caps[v] == 0:
                blocked |= 1 << v
        e = (uncovered & -uncovered).bit_length() - 1
        options = [p for p in by_edge[e] if not p.support & blocked]
        options.sort(key=lambda p: (-bin(p.edges & uncovered).count("1"), bin(p.support).count("1")))
        seen = set()
        for p in options:
            gain = p.edges & uncovered
            if (gain, p.support) in seen:
                continue
            seen.add((gain, p.support))
            new_caps = list(caps)
            for v in _bits(p.support):
                new_caps[v] -= 1
            rest = search(uncovered & ~p.edges, tuple(new_caps))
            if rest is not None:
                return [p] + rest
        failed.add(key)
        return None

    return search((1 << edge_count) - 1, tuple([d] * n))


def _single_edge_parts(Gc: Graph, index: dict) -> list:
    return [_Part((1 << u) | (1 << v), 1 << index[(u, v)], ((u, 0, 0), (v, 1, 1))) for u, v in sorted(Gc.edges)]


def _complement_index(G: Graph) -> tuple:
    Gc = complement(G)
    index = _edge_index(Gc)
    edges = sorted(index, key=index.get)
    incident = [0] * G.n
    for (u, v), i in index.items():
        incident[u] |= 1 << i
        incident[v] |= 1 << i
    return Gc, index, edges, incident


def _lower_bound(Gc: Graph, degree_bound: bool) -> tuple:
    """Starting point of the deepening and the reason it holds."""
    if degree_bound and girth(Gc) >= 5:
        ad = average_degree(Gc)
        return int(ad / 2 + 1), f"average-degree bound floor(ad(G^c)/2 + 1) with ad(G^c) = {ad} and girth(G^c) >= 5"
    return 1, "the complement has an edge"


def _candidate_parts(G: Graph, Gc: Graph, index: dict, clock: _Clock) -> list:
    if girth(Gc) >= 5:
        return _tree_parts(Gc, index, clock)
    return _ordering_parts(G, index, clock)


def _is_complete(G: Graph) -> bool:
    return G.m == G.n * (G.n - 1) // 2


def lbox_at_most(G: Graph, d: int, *, time_budget: float | None = None,
                 message: callable = silent) -> tuple:
    """
    Decides whether G has a d-local box representation.

    Returns:
        tuple: (answer, certificate). `answer` is True, False, or None when the
               time budget ran out; the certificate is a verified
               representation on a yes answer.
    """
    clock = _Clock(setting("exact", "time_budget_s", time_budget))
    if _is_complete(G):
        return True, Representation(G.n, 0, (UNIVERSAL,) * G.n)
    Gc, index, edges, incident = _complement_index(G)
    lower, _ = _lower_bound(Gc, degree_bound=True)
    if d < lower:
        return False, None
    if d >= Gc.max_degree():
        chosen = _single_edge_parts(Gc, index)
    else:
        try:
            parts = _candidate_parts(G, Gc, index, clock)
            message(f"Searching for a {d}-local cover among {len(parts)} parts")
            chosen = _local_cover(parts, G.n, len(edges), incident, d, clock)
        except _Timeout:
            message("Time budget exhausted")
            return None, None
    if chosen is None:
        return False, None
    R = _to_certificate(chosen, Gc, edges)
    if not verify(R, G, d).ok:
        raise AuditError(f"certificate for local boxicity <= {d} does not verify")
    return True, R


def lbox_exact(G: Graph, *, time_budget: float | None = None, degree_bound: bool = True,
               message: callable = silent) -> SolveResult:
    """
    Exact local boxicity by iterative deepening on d.

    The search starts at the average-degree lower bound when the complement
    has girth at least five (unless `degree_bound` is False) and stops at the
    maximum degree of the complement, which a single-edge cover always reaches.

    Args:
        G (Graph): Input graph. Exactness is guaranteed up to the configured
                   window (8 vertices); larger graphs are best-effort.
        time_budget (float | None): Seconds before giving up; configured default.
        degree_bound (bool): Start the deepening at the average-degree bound.
        message (callable): Progress sink.

    Returns:
        SolveResult: The value with a verified certificate, or status "unknown".
    """
    clock = _Clock(setting("exact", "time_budget_s", time_budget))
    if _is_complete(G):
        return SolveResult(0, Representation(G.n, 0, (UNIVERSAL,) * G.n),
                           "complete graphs have local boxicity 0", lower_bound=0, upper_bound=0)

    Gc, index, edges, incident = _complement_index(G)
    start, witness = _lower_bound(Gc, degree_bound)
    upper = Gc.max_degree()
    best = _to_certificate(_single_edge_parts(Gc, index), Gc, edges)
    lower = start
    try:
        parts = _candidate_parts(G, Gc, index, clock) if start < upper else []
        message(f"{len(parts)} candidate parts, searching d in [{start}, {upper}]")
        for d in range(start, upper):
            message(f"Trying d = {d}")
            chosen = _local_cover(parts, G.n, len(edges), incident, d, clock)
            if chosen is not None:
                R = _to_certificate(chosen, Gc, edges)
                if not verify(R, G, d).ok:
                    raise AuditError(f"certificate for local boxicity {d} does not verify")
                if d > start:
                    witness = f"no cover of the complement with load <= {d - 1} exists (exhaustive search)"
                return SolveResult(d, R, witness, lower_bound=d, upper_bound=d)
            lower = d + 1
    except _Timeout:
        message("Time budget exhausted")
        return SolveResult(None, best, f"unknown, local boxicity >= {lower}", status="unknown",
                           lower_bound=lower, upper_bound=upper)
    if upper > start:
        witness = f"no cover of the complement with load <= {upper - 1} exists (exhaustive search)"
    return SolveResult(upper, best, witness, lower_bound=upper, upper_bound=upper)


def _spanning_parts(G: Graph, index: dict, edges: list, clock: _Clock) -> list:
    """Edge-maximal complements of interval supergraphs of G on all vertices."""
    found = {}
    for seq in permutations(range(G.n)):
        clock.tick()
        position = {v: i for i, v in enumerate(seq)}
        hedges = 0
        for i, v in enumerate(seq):
            reach = max((position[w] for w in G.neighbors(v) if position[w] > i), default=i)
            for w in seq[reach + 1:]:
                hedges |= 1 << index[(min(v, w), max(v, w))]
        if hedges and hedges not in found:
            found[hedges] = seq
    kept = []
    for mask in sorted(found, key=lambda m: -bin(m).count("1")):
        if not any(mask & ~other == 0 for other in kept):
            kept.append(mask)
    parts = []
    for mask in kept:
        support = _support_of(mask, edges)
        parts.append(_Part(support, mask, _sequence_model(G, found[mask], support)))
    return parts


def _count_cover(parts: list, edge_count: int, k: int, clock: _Clock) -> list | None:
    """Cover of every complement edge by at most k parts, or None."""
    by_edge = [[] for _ in range(edge_count)]
    for p in parts:
        for i in _bits(p.edges):
            by_edge[i].append(p)
    failed = {}

    def search(uncovered: int, left: int) -> list | None:
        if not uncovered:
            return []
        if left == 0 or failed.get(uncovered, -1) >= left:
            return None
        clock.tick()
        e = (uncovered & -uncovered).bit_length() - 1
        options = sorted(by_edge[e], key=lambda p: -bin(p.edges & uncovered).count("1"))
        for p in options:
            rest = search(uncovered & ~p.edges, left - 1)
            if rest is not None:
                return [p] + rest
        failed[uncovered] = left
        return None

    return search((1 << edge_count) - 1, k)


def box_exact(G: Graph, *, time_budget: float | None = None, message: callable = silent) -> SolveResult:
    """
    Exact boxicity: the least number of interval supergraphs of G
    intersecting to G, found as a minimum cover of the complement by
    complements of minimal interval completions.

    Exactness is guaranteed up to the configured window (7 vertices).
    """
    clock = _Clock(setting("exact", "time_budget_s", time_budget))
    if _is_complete(G):
        return SolveResult(0, Representation(G.n, 0, (UNIVERSAL,) * G.n),
                           "complete graphs have boxicity 0", lower_bound=0, upper_bound=0)
    Gc, index, edges, _ = _complement_index(G)
    k = 1
    try:
        parts = _spanning_parts(G, index, edges, clock)
        message(f"{len(parts)} maximal co-interval spanning parts")
        while True:
            message(f"Trying {k} dimensions")
            chosen = _count_cover(parts, len(edges), k, clock)
            if chosen is not None:
                break
            k += 1
    except _Timeout:
        message("Time budget exhausted")
        return SolveResult(None, None, f"unknown, boxicity >= {k}", status="unknown", lower_bound=k)

    R = _to_certificate(chosen, Gc, edges)
    if R.dims != k or not verify(R, G, k).ok:
        raise AuditError(f"certificate for boxicity {k} does not verify")
    witness = ("the graph is not complete" if k == 1
               else f"no cover of the complement by {k - 1} co-interval graphs exists (exhaustive search)")
    return SolveResult(k, R, witness, lower_bound=k, upper_bound=k)


def _greedy_upper(G: Graph) -> list:
    H = G.to_networkx()
    coloring = nx.greedy_color(H, strategy="saturation_largest_first")
    return [coloring[v] + 1 for v in range(G.n)]


def _checked_coloring(G: Graph, colors) -> list:
    colors = list(colors)
    if len(colors) != G.n or any(c < 1 for c in colors):
        raise ValidationError(f"initial coloring must give a color >= 1 to each of the {G.n} vertices")
    for u, v in G.edges:
        if colors[u] == colors[v]:
            raise ValidationError(f"initial coloring is not proper: edge ({u}, {v}) is monochromatic")
    return colors


def chromatic_exact(G: Graph, *, time_budget: float | None = None, lower_witness=None,
                    initial: list | None = None, message: callable = silent) -> ChromaticResult:
    """
    Exact chromatic number by DSATUR branch and bound, between the clique
    number (3 for non-bipartite graphs) and a greedy coloring.
    Exactness is guaranteed up to 16 vertices.

    Larger graphs can be certified with two optional hints. The subgraph
    induced by `lower_witness` is solved exactly first and its chromatic
    number becomes the lower bound. `initial` is a proper coloring that
    replaces the greedy one when it uses fewer colors. The search stops as
    soon as both bounds meet.

    Args:
        G (Graph): Graph to color.
        time_budget (float | None): Seconds before answering "unknown", per solve.
        lower_witness (Iterable | None): Vertices of a subgraph giving the lower bound.
        initial (list | None): Proper 1-based coloring of G.
        message (callable): Progress sink.

    Raises:
        ValidationError: If `initial` is not a proper coloring of G.
    """
    clock = _Clock(setting("exact", "time_budget_s", time_budget))
    if G.n == 0:
        return ChromaticResult(0, [], lower_bound=0, upper_bound=0)

    best = _greedy_upper(G)
    if initial is not None:
        initial = _checked_coloring(G, initial)
        if max(initial) < max(best):
            best = initial
    lower = clique_number(G)
    if lower < 3 and not nx.is_bipartite(G.to_networkx()):
        lower = 3
    if lower_witness is not None:
        sub, labels = G.induced(lower_witness)
        hint = None if initial is None else [initial[v] for v in labels]
        core = chromatic_exact(sub, time_budget=time_budget, initial=hint, message=message)
        if core.status == "exact" and core.value > lower:
            lower = core.value
            message(f"subgraph on {sub.n} vertices needs {lower} colors")
    message(f"chromatic number in [{lower}, {max(best)}]")
    if lower == max(best):
        return ChromaticResult(lower, best, lower_bound=lower, upper_bound=lower)

    colors = [0] * G.n
    nbrs = [sorted(G.neighbors(v)) for v in range(G.n)]
    state = {"best": best, "count": max(best)}

    def pick() -> int:
        chosen, key = -1, None
        for v in range(G.n):
            if colors[v]:
                continue
            saturation = len({colors[w] for w in nbrs[v] if colors[w]})
            k = (saturation, len(nbrs[v]), -v)
            if key is None or k > key:
                chosen, key = v, k
        return chosen

    def search(colored: int, used: int):
        clock.tick()
        if used >= state["count"]:
            return
        if colored == G.n:
            state["best"], state["count"] = list(colors), used
            message(f"Improved coloring with {used} colors")
            return
        v = pick()
        forbidden = {colors[w] for w in nbrs[v]}
        for c in range(1, min(used + 1, state["count"] - 1) + 1):
            if c in forbidden:
                continue
            colors[v] = c
            search(colored + 1, max(used, c))
            colors[v] = 0
            if state["count"] == lower:
                return

    try:
        search(0, 0)
    except _Timeout:
        message("Time budget exhausted")
        return ChromaticResult(None, state["best"], status="unknown", lower_bound=lower,
                               upper_bound=state["count"])
    return ChromaticResult(state["count"], state["best"], lower_bound=state["count"],
                           upper_bound=state["count"])

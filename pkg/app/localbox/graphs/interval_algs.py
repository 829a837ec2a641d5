'''
Interval graph machinery: recognition with certificates,
co-interval checks, the interval model of the complement of a
tree of diameter at most three, and explicit two-dimensional box
representations of forests and of graphs whose components
contain at most one cycle.

(c) 2025
'''

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

import networkx as nx

from localbox.boxes.boxrep import Interval, LocalBox, Representation, normalize
from localbox.errors import AuditError, PreconditionError, ValidationError
from localbox.graphs.graph_core import Graph, complement, multicyclic_free

# -----------------------------TYPES----------------------------------


@dataclass(frozen=True)
class IntervalModel:
    """One closed interval per vertex; its intersection graph is the modelled graph."""
    intervals: tuple

    @property
    def n(self) -> int:
        return len(self.intervals)

    def graph(self) -> Graph:
        edges = [(u, v) for u in range(self.n) for v in range(u + 1, self.n)
                 if self.intervals[u].meets(self.intervals[v])]
        return Graph.from_edges(self.n, edges)

    def as_representation(self) -> Representation:
        return Representation(self.n, 1, tuple(LocalBox({0: iv}) for iv in self.intervals))

    def normalized(self) -> "IntervalModel":
        R = normalize(self.as_representation())
        return IntervalModel(tuple(box.get(0) for box in R.boxes))


class IntervalCheck(NamedTuple):
    ok: bool
    model: IntervalModel | None
    obstruction: tuple | None     # ("induced_cycle", vertices) or ("asteroidal_triple", vertices)

    def __bool__(self) -> bool:
        return self.ok


# -----------------------------FUNCTIONS----------------------------------

def _clique_path(H: nx.Graph) -> list | None:
    """
    Orders the maximal cliques of a connected chordal graph so that the
    cliques containing each vertex are consecutive. None if impossible.
    """
    cliques = sorted((frozenset(c) for c in nx.find_cliques(H)), key=lambda c: (-len(c), sorted(c)))
    k = len(cliques)
    if k == 1:
        return cliques
    dead = set()

    def extend(order: list, placed: frozenset, seen: frozenset) -> list | None:
        if len(order) == k:
            return order
        last = cliques[order[-1]]
        key = (placed, order[-1])
        if key in dead:
            return None
        for j in range(k):
            if j in placed:
                continue
            C = cliques[j]
            if not (C & last) or not (C & seen) <= last:
                continue
            found = extend(order + [j], placed | {j}, seen | C)
            if found is not None:
                return found
        dead.add(key)
        return None

    # A clique path can only start at a clique holding a vertex private to it.
    counts = {}
    for C in cliques:
        for v in C:
            counts[v] = counts.get(v, 0) + 1
    starts = [i for i, C in enumerate(cliques) if any(counts[v] == 1 for v in C)]
    for i in starts:
        order = extend([i], frozenset([i]), cliques[i])
        if order is not None:
            return [cliques[j] for j in order]
    return None


def is_interval(G: Graph) -> IntervalCheck:
    """
    Interval graph recognition with a certificate.

    Chordality is checked first (an induced cycle of length at least four
    is returned otherwise), then asteroidal triples; an AT-free chordal graph
    gets an interval model from a consecutive ordering of its maximal cliques.

    Returns:
        IntervalCheck: `ok`, the normalized model on success, the obstruction otherwise.
    """
    if G.n == 0:
        return IntervalCheck(True, IntervalModel(()), None)

    H = G.to_networkx()
    if not nx.is_chordal(H):
        for cycle in nx.chordless_cycles(H):
            if len(cycle) >= 4:
                return IntervalCheck(False, None, ("induced_cycle", tuple(cycle)))

    intervals = [None] * G.n
    offset = 0
    for comp in sorted(nx.connected_components(H), key=min):
        sub = H.subgraph(comp)
        # chordal graphs below six vertices are all interval graphs
        triple = nx.find_asteroidal_triple(sub) if len(comp) >= 6 else None
        if triple is not None:
            return IntervalCheck(False, None, ("asteroidal_triple", tuple(sorted(triple))))
        path = _clique_path(sub)
        if path is None:
            raise AuditError("AT-free chordal component without a clique path")
        for v in comp:
            hits = [i for i, C in enumerate(path) if v in C]
            intervals[v] = Interval(offset + hits[0], offset + hits[-1])
        offset += len(path) + 1

    model = IntervalModel(tuple(intervals)).normalized()
    return IntervalCheck(True, model, None)


def support(G: Graph) -> list:
    """Non-isolated vertices of G, in increasing order."""
    return [v for v in range(G.n) if G.degree(v) > 0]


def cointerval_model(G: Graph) -> tuple | None:
    """
    Interval model of the complement of G restricted to its support.

    Returns:
        tuple | None: (support labels, IntervalModel of the complement of
                      G[support]) or None when G is not co-interval.
    """
    labels = support(G)
    sub, _ = G.induced(labels)
    check = is_interval(complement(sub))
    if not check.ok:
        return None
    return labels, check.model


def is_cointerval(G: Graph) -> bool:
    return cointerval_model(G) is not None


def diam3_cointerval(T: Graph) -> IntervalModel:
    """
    Interval model of the complement of a tree T of diameter at most three.

    With centres u, v, the leaves S_u of u and the leaves S_v of v, the model
    maps u to {0}, v to {2}, S_u to [1, 2] and S_v to [0, 1]. A star uses its
    centre as u and its smallest leaf as v. A single edge maps to {0} and {2}.

    Raises:
        PreconditionError: If T is not a tree, has no edge, or has diameter four or more.
    """
    H = T.to_networkx()
    if T.m == 0 or not nx.is_tree(H):
        raise PreconditionError("input is not a tree with at least one edge")
    diameter = nx.diameter(H)
    if diameter > 3:
        raise PreconditionError(f"tree has diameter {diameter} > 3")

    inner = [v for v in range(T.n) if T.degree(v) > 1]
    if diameter == 1:
        u, v = 0, 1
    elif diameter == 2:
        u = inner[0]
        v = min(T.neighbors(u))
    else:
        u, v = inner

    intervals = [None] * T.n
    intervals[u] = Interval(0, 0)
    intervals[v] = Interval(2, 2)
    for w in range(T.n):
        if w in (u, v):
            continue
        intervals[w] = Interval(1, 2) if T.has_edge(w, u) else Interval(0, 1)
    return IntervalModel(tuple(intervals))


def _nesting(children: dict, roots: list) -> tuple:
    """
    DFS entry/exit counters and depths of a rooted forest.

    Returns:
        tuple: (pre, post, depth) dictionaries; [pre, post] intervals nest
               exactly along ancestor relations.
    """
    pre, post, depth = {}, {}, {}
    counter = 0
    for root in roots:
        stack = [(root, 0, False)]
        while stack:
            v, d, done = stack.pop()
            if done:
                post[v] = counter
                counter += 1
                continue
            pre[v] = counter
            depth[v] = d
            counter += 1
            stack.append((v, d, True))
            for c in sorted(children.get(v, ()), reverse=True):
                stack.append((c, d + 1, False))
    return pre, post, depth


def _rooted(G: Graph, H: nx.Graph, comp) -> tuple:
    root = min(comp)
    children = {}
    for parent, child in nx.bfs_edges(H, root, sort_neighbors=sorted):
        children.setdefault(parent, []).append(child)
    return root, children


def tree_two_box(T: Graph) -> Representation:
    """
    Two-dimensional representation of a forest: DFS nesting intervals in the
    first dimension, depth layers [depth, depth + 1] in the second.

    Raises:
        PreconditionError: If T has a cycle.
    """
    H = T.to_networkx()
    if T.n > 0 and not nx.is_forest(H):
        raise PreconditionError("input graph has a cycle")

    roots, children = [], {}
    for comp in sorted(nx.connected_components(H), key=min):
        root, ch = _rooted(T, H, comp)
        roots.append(root)
        children.update(ch)
    pre, post, depth = _nesting(children, roots)
    boxes = tuple(
        LocalBox({0: Interval(pre[v], post[v]), 1: Interval(depth[v], depth[v] + 1)})
        for v in range(T.n)
    )
    return Representation(T.n, 2, boxes)


def _cycle_order(H: nx.Graph, comp) -> list:
    """Vertices of the unique cycle of a unicyclic component, in cyclic order."""
    edges = nx.find_cycle(H.subgraph(comp), source=min(comp))
    order = [edges[0][0]]
    for u, v in edges:
        order.append(v if u == order[-1] else u)
    return order[:-1]


def _unicyclic_boxes(H: nx.Graph, comp) -> dict:
    """
    Boxes of a unicyclic component. The cycle c_0..c_{k-1} is drawn as a ring
    of rectangles: c_0 spans the whole ring at height 0, c_1 and c_{k-1} drop
    to it and the middle vertices sit one level up. Every cycle vertex owns
    a pocket touching only its own rectangle, in which its hanging trees
    are laid out by DFS nesting times depth layers.
    """
    cycle = _cycle_order(H, comp)
    k = len(cycle)
    boxes = {}
    pockets = {}
    for i, c in enumerate(cycle):
        if i == 0:
            boxes[c] = (Interval(10, 10 * k + 10), Interval(0, 0))
            pockets[c] = (10 * k + 1, 10 * k + 9, 0, -1)
        elif i in (1, k - 1):
            boxes[c] = (Interval(10 * i, 10 * i + 10), Interval(0, 10))
            pockets[c] = (10 * i + 1, 10 * i + 9, 10, 1)
        else:
            boxes[c] = (Interval(10 * i, 10 * i + 10), Interval(10, 20))
            pockets[c] = (10 * i + 1, 10 * i + 9, 20, 1)

    forest = H.subgraph(comp).copy()
    forest.remove_edges_from(zip(cycle, cycle[1:] + cycle[:1]))
    for c in cycle:
        children = {}
        for parent, child in nx.bfs_edges(forest, c, sort_neighbors=sorted):
            children.setdefault(parent, []).append(child)
        if c not in children:
            continue
        pre, post, depth = _nesting(children, children[c])
        a, b, y0, step = pockets[c]
        scale = Fraction(b - a, 2 * len(pre) + 1)
        for w in pre:
            x = Interval(a + (pre[w] + 1) * scale, a + (post[w] + 1) * scale)
            lo, hi = y0 + step * depth[w], y0 + step * (depth[w] + 1)
            boxes[w] = (x, Interval(min(lo, hi), max(lo, hi)))
    return boxes


def sparse_two_box(G: Graph) -> Representation:
    """
    Two-dimensional representation of a graph whose components each have at
    most one cycle. Components are placed side by side in the first dimension.

    Raises:
        PreconditionError: If a component has two or more independent cycles.
    """
    census = multicyclic_free(G)
    for comp, count in zip(census.components, census.cycle_counts):
        if count > 1:
            raise PreconditionError(f"component containing vertex {min(comp)} has {count} independent cycles")

    H = G.to_networkx()
    placed = {}
    right = 0
    for comp, count in zip(census.components, census.cycle_counts):
        if count == 0:
            root, children = _rooted(G, H, comp)
            pre, post, depth = _nesting(children, [root])
            local = {v: (Interval(pre[v], post[v]), Interval(depth[v], depth[v] + 1)) for v in comp}
        else:
            local = _unicyclic_boxes(H, comp)
        left = min(x.lo for x, _ in local.values())
        shift = right - left
        for v, (x, y) in local.items():
            placed[v] = (x.shifted(shift), y)
        right = max(x.hi for x, _ in placed.values()) + 1

    boxes = tuple(LocalBox({0: placed[v][0], 1: placed[v][1]}) for v in range(G.n))
    return normalize(Representation(G.n, 2, boxes))


def interval_color(G: Graph, M: IntervalModel) -> list:
    """
    Greedy coloring by left endpoint; uses exactly clique-number many colors.

    Returns:
        list: Color (1-based) of every vertex.

    Raises:
        ValidationError: If M is not a model of G.
    """
    if M.n != G.n or M.graph() != G:
        raise ValidationError("interval model does not realize the graph")
    order = sorted(range(G.n), key=lambda v: (M.intervals[v].lo, M.intervals[v].hi, v))
    colors = [0] * G.n
    done = []
    for v in order:
        used = {colors[u] for u in done if M.intervals[u].hi >= M.intervals[v].lo}
        c = 1
        while c in used:
            c += 1
        colors[v] = c
        done.append(v)
    return colors

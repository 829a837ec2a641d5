'''
The two other views of a local box representation:

 - a cover of the complement by co-interval subgraphs, where a vertex
   belongs to as many parts as it has bounded dimensions;
 - a family of interval supergraphs whose intersection is the graph,
   where a vertex is non-universal in as many members.

(c) 2025
'''

from dataclasses import dataclass, field

from localbox.boxes.boxrep import (LocalBox, Representation, meets,
                                   prune_dims, realize, trim_universal)
from localbox.errors import ValidationError
from localbox.graphs.graph_core import Graph
from localbox.graphs.interval_algs import cointerval_model, is_interval

# -----------------------------TYPES----------------------------------


@dataclass(frozen=True)
class CoverPart:
    """
    Co-interval subgraph of the complement, given on its support.

    `model` optionally carries an interval model of the complement of the
    part on its support, as a mapping vertex -> Interval.
    """
    support: frozenset
    edges: frozenset
    model: dict | None = field(default=None, compare=False, hash=False)


@dataclass(frozen=True)
class CoIntervalCover:
    base: Graph                   # the complement of the represented graph
    parts: tuple

    def loads(self) -> list:
        load = [0] * self.base.n
        for part in self.parts:
            for v in part.support:
                load[v] += 1
        return load

    def max_load(self) -> int:
        return max(self.loads(), default=0)


@dataclass(frozen=True)
class FamilyMember:
    graph: Graph
    universal: frozenset
    model: dict | None = field(default=None, compare=False, hash=False)


@dataclass(frozen=True)
class IntervalFamily:
    n: int
    members: tuple

    def intersection(self) -> Graph:
        edges = None
        for member in self.members:
            edges = set(member.graph.edges) if edges is None else edges & member.graph.edges
        if edges is None:
            return Graph.complete(self.n)
        return Graph(self.n, frozenset(edges))

    def non_universal_counts(self) -> list:
        counts = [0] * self.n
        for member in self.members:
            for v in range(self.n):
                if v not in member.universal:
                    counts[v] += 1
        return counts


# -----------------------------FUNCTIONS----------------------------------

def to_cover(R: Representation, on: Graph) -> CoIntervalCover:
    """
    Co-interval cover of the complement of `on` read off a representation.

    Every dimension becomes one part: its support holds the vertices bounded
    in that dimension, its edges the pairs whose intervals are disjoint.
    Dimensions are pruned and intervals meeting all others unbounded first, so
    supports are exactly the non-isolated vertices of the parts.

    Raises:
        ValidationError: If R does not realize `on`.
    """
    if R.n != on.n or realize(R) != on:
        raise ValidationError("representation does not realize the graph")
    R = prune_dims(trim_universal(prune_dims(R)))
    parts = []
    for dim in range(R.dims):
        column = R.column(dim)
        members = [v for v, iv in enumerate(column) if iv is not None]
        edges = frozenset((u, v) for i, u in enumerate(members) for v in members[i + 1:]
                          if not column[u].meets(column[v]))
        parts.append(CoverPart(frozenset(members), edges, {v: column[v] for v in members}))
    base = Graph(on.n, frozenset((u, v) for u in range(on.n) for v in range(u + 1, on.n)
                                 if not on.has_edge(u, v)))
    return CoIntervalCover(base, tuple(parts))


def _model_fits(part: CoverPart) -> bool:
    if part.model is None or set(part.model) != set(part.support):
        return False
    labels = sorted(part.support)
    for i, u in enumerate(labels):
        for v in labels[i + 1:]:
            apart = not meets(part.model[u], part.model[v])
            if apart != ((min(u, v), max(u, v)) in part.edges):
                return False
    return True


def part_model(part: CoverPart, index: int = 0) -> dict:
    """
    Interval model of the complement of a cover part on its support.

    Raises:
        ValidationError: If the part is not co-interval or its support is not
                         the set of its non-isolated vertices.
    """
    touched = {v for e in part.edges for v in e}
    if touched != set(part.support):
        raise ValidationError(f"part {index}: support is not the set of non-isolated vertices")
    if _model_fits(part):
        return dict(part.model)
    labels = sorted(part.support)
    index_of = {v: i for i, v in enumerate(labels)}
    local = Graph.from_edges(len(labels), [(index_of[u], index_of[v]) for u, v in part.edges])
    found = cointerval_model(local)
    if found is None:
        raise ValidationError(f"part {index} is not co-interval")
    _, model = found
    return {labels[i]: model.intervals[i] for i in range(len(labels))}


def from_cover(C: CoIntervalCover) -> Representation:
    """
    Representation of the complement of `C.base`, one dimension per part.

    Raises:
        ValidationError: If a part is not a co-interval subgraph of the base or
                         the parts do not cover every edge of the base.
    """
    covered = set()
    boxes = [dict() for _ in range(C.base.n)]
    for i, part in enumerate(C.parts):
        missing = [e for e in part.edges if e not in C.base.edges]
        if missing:
            raise ValidationError(f"part {i}: {missing[0]} is not an edge of the complement")
        model = part_model(part, i)
        for v, interval in model.items():
            boxes[v][i] = interval
        covered |= part.edges
    uncovered = sorted(C.base.edges - covered)
    if uncovered:
        raise ValidationError(f"complement edge {uncovered[0]} is not covered")
    return Representation(C.base.n, len(C.parts), tuple(LocalBox(b) for b in boxes))


def to_family(R: Representation) -> IntervalFamily:
    """Member i is the interval graph of the projections on dimension i."""
    members = []
    for dim in range(R.dims):
        column = R.column(dim)
        edges = [(u, v) for u in range(R.n) for v in range(u + 1, R.n) if meets(column[u], column[v])]
        universal = frozenset(v for v, iv in enumerate(column) if iv is None)
        model = {v: iv for v, iv in enumerate(column) if iv is not None}
        members.append(FamilyMember(Graph.from_edges(R.n, edges), universal, model))
    return IntervalFamily(R.n, tuple(members))


def from_family(F: IntervalFamily, target: Graph | None = None) -> Representation:
    """
    Representation whose dimension i models member i; universal-flagged
    vertices are unbounded there.

    Args:
        F (IntervalFamily): The family.
        target (Graph | None): When given, every member must be a supergraph
                               of it and the members must intersect to it.

    Raises:
        ValidationError: If a member is not an interval graph, a flagged vertex
                         is not universal in its member, or the family does not
                         intersect to `target`.
    """
    boxes = [dict() for _ in range(F.n)]
    for i, member in enumerate(F.members):
        G = member.graph
        for v in member.universal:
            if G.degree(v) != G.n - 1:
                raise ValidationError(f"member {i}: vertex {v} is flagged universal but is not")
        if target is not None and not target.edges <= G.edges:
            raise ValidationError(f"member {i} is not a supergraph of the target graph")
        bounded = [v for v in range(F.n) if v not in member.universal]
        model = member.model
        if model is None or set(model) != set(bounded) or not _member_fits(G, bounded, model):
            sub, labels = G.induced(bounded)
            check = is_interval(sub)
            if not check.ok:
                raise ValidationError(f"member {i} is not an interval graph")
            model = {labels[j]: check.model.intervals[j] for j in range(len(labels))}
        for v in bounded:
            boxes[v][i] = model[v]
    R = Representation(F.n, len(F.members), tuple(LocalBox(b) for b in boxes))
    if target is not None and realize(R) != target:
        raise ValidationError("family members do not intersect to the target graph")
    return R


def _member_fits(G: Graph, bounded: list, model: dict) -> bool:
    for i, u in enumerate(bounded):
        for v in bounded[i + 1:]:
            if model[u].meets(model[v]) != G.has_edge(u, v):
                return False
    return True


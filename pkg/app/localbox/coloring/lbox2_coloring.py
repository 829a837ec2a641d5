'''
Coloring graphs of local boxicity at most two from a representation.

 - `type11_color`: graphs whose boxes are local in at most one dimension
   besides a fixed first one. Vertices are grouped by that other dimension,
   each group is cut into the connected pieces of the interval graph of
   the first dimension, the piece hulls form an interval graph of clique
   number at most omega(G), and every vertex gets the pair
   (hull color, color inside its piece).
 - `tf_lbox2_color`: triangle-free graphs, at most 18 colors.
 - `lbox2_color`: any clique number r, at most 320 r^3 log(2r) colors.

Pieces of boxicity at most two are colored by `box2_color`, exactly when
they are small and greedily otherwise. A result whose pieces were all
colored exactly carries subcontract "exact"; otherwise "heuristic", and
the count is only reported next to the bound.

(c) 2025
'''

import math
from dataclasses import dataclass

import networkx as nx
import pandas as pd

from localbox.boxes.boxrep import Interval, Representation, realize, restrict, verify
from localbox.config import load_config_file, setting, silent
from localbox.errors import AuditError, DomainError, HypothesisError, ShapeError, ValidationError
from localbox.graphs.graph_core import Graph, clique_number, find_triangle, is_independent
from localbox.graphs.interval_algs import IntervalModel, interval_color
from localbox.solvers.exact_solver import chromatic_exact

# -----------------------------TYPES----------------------------------


@dataclass(frozen=True)
class ColoringResult:
    colors: tuple                  # 1-based color of every vertex
    count: int
    bound: float | None
    proper: bool
    subcontract: str = "exact"     # "exact" or "heuristic"

    @property
    def within_bound(self) -> bool:
        return self.bound is None or self.count <= self.bound


@dataclass(frozen=True)
class Type11Rep:
    """Representation whose boxes are local in at most one dimension other than `first_dim`."""
    R: Representation
    first_dim: int

    def __post_init__(self):
        if self.first_dim < 0:
            raise DomainError(f"first dimension must be nonnegative, got {self.first_dim}")
        for v, box in enumerate(self.R.boxes):
            others = [dim for dim in box.dims() if dim != self.first_dim]
            if len(others) > 1:
                raise ShapeError(f"vertex {v} is local in dimensions {others} besides {self.first_dim}")

    def other_dim(self, v: int) -> int | None:
        others = [dim for dim in self.R.boxes[v].dims() if dim != self.first_dim]
        return others[0] if others else None


# -----------------------------FUNCTIONS----------------------------------

def _bound_type11(r: int) -> float:
    if r == 2:
        return 12
    return 320 * r * r * math.log2(2 * r) if r > 0 else 0


def _bound_lbox2(r: int) -> float:
    return 320 * r ** 3 * math.log2(2 * r) if r > 0 else 0


def _finish(G: Graph, colors: list, bound: float | None, subcontract: str) -> ColoringResult:
    """Universal properness check applied to every coloring before it is returned."""
    if any(c < 1 for c in colors):
        raise AuditError("some vertex was left uncolored")
    for u, v in G.edges:
        if colors[u] == colors[v]:
            raise AuditError(f"edge ({u}, {v}) is monochromatic")
    return ColoringResult(tuple(colors), len(set(colors)), bound, True, subcontract)


def _stack(n: int, pieces: list) -> list:
    """Merges colorings of disjoint vertex sets on disjoint palettes."""
    colors = [0] * n
    offset = 0
    for labels, local in pieces:
        for v, c in zip(labels, local):
            colors[v] = offset + c
        offset += max(local, default=0)
    return colors


def _merged_subcontract(results) -> str:
    return "heuristic" if any(r.subcontract == "heuristic" for r in results) else "exact"


def _on(G: Graph, R: Representation, S, color_fn, *args) -> tuple:
    """Colors G[S] with `color_fn` and returns (labels, colors, result)."""
    sub, labels = G.induced(S)
    result = color_fn(sub, restrict(R, labels), *args)
    return labels, list(result.colors), result


def _independent(G: Graph, S, name: str) -> tuple:
    S = sorted(S)
    if not is_independent(G, S):
        raise AuditError(f"{name} is not an independent set")
    return S, [1] * len(S)


def greedy_color(G: Graph) -> list:
    """Greedy coloring in degeneracy (smallest-last) order, 1-based."""
    coloring = nx.greedy_color(G.to_networkx(), strategy="smallest_last")
    return [coloring[v] + 1 for v in range(G.n)]


def box2_color(G: Graph, M: Representation, *, exact_limit: int | None = None,
               message: callable = silent) -> ColoringResult:
    """
    Colors a graph given a representation using at most two dimensions.

    Graphs with at most `exact_limit` vertices are colored optimally, which
    meets 6 colors for triangle-free inputs and 320 r log(2r) in general.
    Larger ones are colored greedily and flagged "heuristic".

    Raises:
        ValidationError: If M does not realize G or bounds more than two dimensions.
    """
    exact_limit = setting("coloring", "exact_piece_limit", exact_limit)
    if M.n != G.n or realize(M) != G:
        raise ValidationError("representation does not realize the graph")
    used = {dim for box in M.boxes for dim in box.dims()}
    if len(used) > 2:
        raise ValidationError(f"representation bounds {len(used)} dimensions, at most 2 allowed")

    r = clique_number(G)
    bound = 6 if r <= 2 else 320 * r * math.log2(2 * r)
    if G.n == 0:
        return ColoringResult((), 0, 0, True)
    if G.n <= exact_limit:
        result = chromatic_exact(G, message=message)
        return _finish(G, result.colors, bound, "exact" if result.status == "exact" else "heuristic")
    return _finish(G, greedy_color(G), bound, "heuristic")


def _join_color(G: Graph, R: Representation) -> list:
    """
    Coloring with omega(G) colors when every box is local in at most one
    dimension: G is the complete join of the interval graphs of each
    dimension and of the vertices bounded nowhere.
    """
    groups = {}
    for v, box in enumerate(R.boxes):
        groups.setdefault(box.dims()[0] if box.locality else None, []).append(v)
    pieces = []
    for dim in sorted(d for d in groups if d is not None):
        members = groups[dim]
        sub, labels = G.induced(members)
        model = IntervalModel(tuple(R.boxes[v].get(dim) for v in labels))
        pieces.append((labels, interval_color(sub, model)))
    for v in groups.get(None, []):
        pieces.append(([v], [1]))
    return _stack(G.n, pieces)


def _first_projections(T: Type11Rep) -> list:
    """Projections on the first dimension, the real line replaced by a covering interval."""
    column = T.R.column(T.first_dim) if T.first_dim < T.R.dims else [None] * T.R.n
    finite = [x for iv in column if iv is not None for x in (iv.lo, iv.hi)]
    wide = Interval(min(finite) - 1, max(finite) + 1) if finite else Interval(0, 0)
    return [iv if iv is not None else wide for iv in column]


def type11_color(G: Graph, T: Type11Rep, message: callable = silent) -> ColoringResult:
    """
    Colors a graph of type (1, 1) with at most 320 r^2 log(2r) colors
    (12 when r = 2), r the clique number.

    Raises:
        ValidationError: If T does not realize G.
        AuditError: If the hull interval graph has clique number above r.
    """
    if T.R.n != G.n or realize(T.R) != G:
        raise ValidationError("type (1,1) representation does not realize the graph")
    if G.n == 0:
        return ColoringResult((), 0, 0, True)
    r = clique_number(G)

    projections = _first_projections(T)
    G1 = IntervalModel(tuple(projections)).graph().to_networkx()
    groups = {}
    for v in range(G.n):
        groups.setdefault(T.other_dim(v), []).append(v)

    parts = []
    for key in sorted(groups, key=lambda d: -1 if d is None else d):
        components = nx.connected_components(G1.subgraph(groups[key]))
        parts.extend(sorted((sorted(c) for c in components), key=min))

    hulls = IntervalModel(tuple(Interval(min(projections[v].lo for v in S), max(projections[v].hi for v in S))
                                for S in parts))
    H = hulls.graph()
    if clique_number(H) > r:
        raise AuditError(f"hull interval graph has clique number {clique_number(H)} > {r}")
    hull_colors = interval_color(H, hulls)

    inner = [_on(G, T.R, S, box2_color) for S in parts]
    width = max((max(local, default=0) for _, local, _ in inner), default=0)
    colors = [0] * G.n
    for h, (labels, local, _) in zip(hull_colors, inner):
        for v, c in zip(labels, local):
            colors[v] = (h - 1) * width + c
    message(f"type (1,1): {len(parts)} pieces, {max(hull_colors)} hull colors, {width} inner colors")
    return _finish(G, colors, _bound_type11(r), _merged_subcontract(res for _, _, res in inner))


def _doubly_local(R: Representation) -> tuple:
    """Lowest vertex local in two dimensions, with those dimensions."""
    v = min(u for u in range(R.n) if R.boxes[u].locality == 2)
    a, b = R.boxes[v].dims()
    return v, a, b


def _local_in(R: Representation, dim: int) -> set:
    return {v for v in range(R.n) if R.boxes[v].get(dim) is not None}


def _checked_two_local(G: Graph, R: Representation) -> None:
    report = verify(R, G, 2)
    if not report.ok:
        raise ValidationError(f"not a 2-local representation of the graph: {report.first_violation}")


def tf_lbox2_color(G: Graph, R: Representation, message: callable = silent) -> ColoringResult:
    """
    Colors a triangle-free graph of local boxicity at most two with at most 18 colors.

    Let v be local in dimensions a and b, D_a and D_b the vertices local in
    them. The vertices outside D_a and D_b are neighbours of v, hence
    independent. Depending on which of D_a - D_b and D_b - D_a are
    independent, and on the dimensions an edge uw inside D_a - D_b is
    local in, the symmetric difference is colored either as one graph of
    type (1, 1) or with four independent sets.

    Raises:
        HypothesisError: If G has a triangle.
        ValidationError: If R is not a 2-local representation of G.
    """
    triangle = find_triangle(G)
    if triangle is not None:
        raise HypothesisError(f"graph has the triangle {triangle}")
    _checked_two_local(G, R)
    if R.max_locality() <= 1:
        message("every box is local in at most one dimension: join of interval graphs")
        return _finish(G, _join_color(G, R), 18, "exact")

    v, a, b = _doubly_local(R)
    Da, Db = _local_in(R, a), _local_in(R, b)
    everything = set(range(G.n))
    outside = everything - (Da | Db)
    only_a, only_b = Da - Db, Db - Da
    results = []

    if is_independent(G, only_b) or is_independent(G, only_a):
        first, main, rest = (a, Da, only_b) if is_independent(G, only_b) else (b, Db, only_a)
        labels, local, result = _on(G, R, main, lambda H, S: type11_color(H, Type11Rep(S, first)))
        results.append(result)
        pieces = [(labels, local), _independent(G, rest, "the one-sided class"),
                  _independent(G, outside, "the common neighbourhood")]
        message(f"one side independent, type (1,1) on dimension {first}")
        return _finish(G, _stack(G.n, pieces), 18, _merged_subcontract(results))

    core = everything - (only_a ^ only_b)
    if outside:
        pieces = [_independent(G, Da & Db, "the doubly-local core"),
                  _independent(G, outside, "the common neighbourhood")]
    else:
        labels, local, result = _on(G, R, core, box2_color)
        results.append(result)
        pieces = [(labels, local)]

    u, w = min((x, y) for x, y in G.edges if x in only_a and y in only_a)
    cu = [dim for dim in R.boxes[u].dims() if dim != a]
    cw = [dim for dim in R.boxes[w].dims() if dim != a]
    if not cu or not cw:
        raise AuditError(f"edge ({u}, {w}) has an endpoint local in dimension {a} only")
    cu, cw = cu[0], cw[0]
    spread = only_a | only_b

    if cu == cw:
        if not spread <= _local_in(R, cu):
            raise AuditError(f"symmetric difference is not contained in dimension {cu}")
        labels, local, result = _on(G, R, spread, lambda H, S: type11_color(H, Type11Rep(S, cu)))
        results.append(result)
        pieces.append((labels, local))
        message(f"edge ({u}, {w}) shares dimension {cu}: type (1,1) on the symmetric difference")
    else:
        Dcu, Dcw = _local_in(R, cu), _local_in(R, cw)
        if not spread <= Dcu | Dcw:
            raise AuditError(f"symmetric difference is not covered by dimensions {cu} and {cw}")
        for side in (only_a, only_b):
            for D in (Dcu, Dcw):
                pieces.append(_independent(G, side & D, "a quarter of the symmetric difference"))
        message(f"edge ({u}, {w}) splits over dimensions {cu} and {cw}: four independent sets")
    return _finish(G, _stack(G.n, pieces), 18, _merged_subcontract(results))


def lbox2_color(G: Graph, R: Representation, message: callable = silent) -> ColoringResult:
    """
    Colors a graph of local boxicity at most two and clique number r with
    at most 320 r^3 log(2r) colors (18 when r <= 2), by induction on r.

    Triangle-free graphs go to `tf_lbox2_color`. Otherwise, for a vertex v
    local in dimensions a and b, the vertices local in neither are
    neighbours of v and recurse with clique number r - 1, while D_a and
    D_b - D_a are of type (1, 1).

    Raises:
        ValidationError: If R is not a 2-local representation of G.
    """
    _checked_two_local(G, R)
    if G.n == 0:
        return ColoringResult((), 0, 0, True)
    r = clique_number(G)
    bound = _bound_lbox2(r)
    if r <= 2:
        result = tf_lbox2_color(G, R, message)
        return ColoringResult(result.colors, result.count, min(bound, result.bound), result.proper,
                              result.subcontract)
    if R.max_locality() <= 1:
        message("every box is local in at most one dimension: join of interval graphs")
        return _finish(G, _join_color(G, R), bound, "exact")

    v, a, b = _doubly_local(R)
    Da, Db = _local_in(R, a), _local_in(R, b)
    outside = set(range(G.n)) - (Da | Db)
    message(f"r = {r}: split on vertex {v}, dimensions {a} and {b}")
    inner = [
        _on(G, R, outside, lbox2_color, message),
        _on(G, R, Da, lambda H, S: type11_color(H, Type11Rep(S, a))),
        _on(G, R, Db - Da, lambda H, S: type11_color(H, Type11Rep(S, b))),
    ]
    colors = _stack(G.n, [(labels, local) for labels, local, _ in inner])
    return _finish(G, colors, bound, _merged_subcontract(res for _, _, res in inner))


def coloring_frame(result: ColoringResult) -> pd.DataFrame:
    columns = load_config_file()["output"]["coloring_columns"]
    return pd.DataFrame([[v, c] for v, c in enumerate(result.colors)], columns=columns)


def coloring_summary(result: ColoringResult) -> dict:
    return {"count": result.count, "bound": result.bound, "proper": result.proper,
            "subcontract": result.subcontract}

'''
Local box representations: data model, realization,
verification and the dimension plumbing used to build
representations out of smaller ones.

A box is stored sparsely: only its bounded dimensions are listed,
every other dimension is the whole real line.

(c) 2025
'''

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from pathlib import Path
from typing import Iterable, Mapping

from localbox.errors import DomainError, FormatError, ValidationError
from localbox.graphs.graph_core import Graph

# -----------------------------TYPES----------------------------------


@dataclass(frozen=True, order=True)
class Interval:
    """Closed bounded interval [lo, hi] with integer or rational endpoints."""
    lo: int | Fraction
    hi: int | Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise DomainError(f"empty interval [{self.lo}, {self.hi}]")

    def meets(self, other: "Interval") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def shifted(self, offset) -> "Interval":
        return Interval(self.lo + offset, self.hi + offset)

    def __repr__(self) -> str:
        return f"[{self.lo}, {self.hi}]"


def as_interval(value) -> Interval | None:
    """Accepts an Interval, a (lo, hi) pair, or None (the real line)."""
    if value is None or isinstance(value, Interval):
        return value
    lo, hi = value
    return Interval(lo, hi)


def meets(a: Interval | None, b: Interval | None) -> bool:
    """Intersection test where None stands for the real line."""
    if a is None or b is None:
        return True
    return a.meets(b)


@dataclass(frozen=True)
class LocalBox:
    """
    Box given by its bounded dimensions.

    `bounded` is a sorted tuple of (dimension, Interval); a dict is accepted
    on construction. Absent dimensions are the real line.
    """
    bounded: tuple = ()

    def __post_init__(self):
        items = self.bounded.items() if isinstance(self.bounded, Mapping) else self.bounded
        cleaned = {}
        for dim, spec in items:
            if dim < 0:
                raise DomainError(f"negative dimension index {dim}")
            interval = as_interval(spec)
            if interval is not None:
                cleaned[int(dim)] = interval
        object.__setattr__(self, "bounded", tuple(sorted(cleaned.items())))

    @property
    def locality(self) -> int:
        return len(self.bounded)

    def dims(self) -> tuple:
        return tuple(dim for dim, _ in self.bounded)

    def get(self, dim: int) -> Interval | None:
        for d, interval in self.bounded:
            if d == dim:
                return interval
        return None

    def as_dict(self) -> dict:
        return dict(self.bounded)

    def intersects(self, other: "LocalBox") -> bool:
        mine = dict(self.bounded)
        for dim, interval in other.bounded:
            if dim in mine and not mine[dim].meets(interval):
                return False
        return True


UNIVERSAL = LocalBox()


@dataclass(frozen=True)
class Representation:
    n: int
    dims: int
    boxes: tuple

    def __post_init__(self):
        boxes = tuple(b if isinstance(b, LocalBox) else LocalBox(b) for b in self.boxes)
        object.__setattr__(self, "boxes", boxes)
        if len(boxes) != self.n:
            raise DomainError(f"{len(boxes)} boxes given for {self.n} vertices")
        for v, box in enumerate(boxes):
            for dim in box.dims():
                if dim >= self.dims:
                    raise DomainError(f"vertex {v} is bounded in dimension {dim} >= {self.dims}")

    def localities(self) -> list:
        return [box.locality for box in self.boxes]

    def max_locality(self) -> int:
        return max(self.localities(), default=0)

    def column(self, dim: int) -> list:
        """Projections of all boxes on one dimension (None for the real line)."""
        return [box.get(dim) for box in self.boxes]


@dataclass(frozen=True)
class VerifyReport:
    ok: bool
    max_locality: int
    first_violation: str | None = None
    kind: str | None = None           # "missing_edge", "extra_edge", "over_local"
    vertices: tuple = ()

    def __bool__(self) -> bool:
        return self.ok


# -----------------------------FUNCTIONS----------------------------------

def realize(R: Representation) -> Graph:
    """Intersection graph of the boxes of R."""
    edges = [(u, v) for u, v in combinations(range(R.n), 2) if R.boxes[u].intersects(R.boxes[v])]
    return Graph.from_edges(R.n, edges)


def verify(R: Representation, G: Graph, d: int) -> VerifyReport:
    """
    Checks that R is a d-local box representation of G.

    Raises:
        DomainError: If R and G do not have the same number of vertices.
    """
    if R.n != G.n:
        raise DomainError(f"representation has {R.n} vertices, graph has {G.n}")

    top = R.max_locality()
    for v, box in enumerate(R.boxes):
        if box.locality > d:
            return VerifyReport(False, top, f"vertex {v} is local in {box.locality} > {d} dimensions",
                                "over_local", (v,))

    for u, v in combinations(range(R.n), 2):
        hit = R.boxes[u].intersects(R.boxes[v])
        if hit != G.has_edge(u, v):
            if hit:
                return VerifyReport(False, top, f"boxes of {u} and {v} intersect but ({u}, {v}) is not an edge",
                                    "extra_edge", (u, v))
            return VerifyReport(False, top, f"({u}, {v}) is an edge but the boxes are disjoint",
                                "missing_edge", (u, v))
    return VerifyReport(True, top)


def prune_dims(R: Representation) -> Representation:
    """Drops the dimensions in which every box is the real line, renumbering the others."""
    used = sorted({dim for box in R.boxes for dim in box.dims()})
    index = {dim: i for i, dim in enumerate(used)}
    boxes = tuple(LocalBox({index[dim]: interval for dim, interval in box.bounded}) for box in R.boxes)
    return Representation(R.n, len(used), boxes)


def normalize(R: Representation) -> Representation:
    """
    Replaces, dimension by dimension, every endpoint by its rank among the
    distinct endpoints of that dimension. Endpoints become integers in [1, 2n]
    and intersections are unchanged.
    """
    ranks = []
    for dim in range(R.dims):
        values = sorted({x for interval in R.column(dim) if interval is not None
                         for x in (interval.lo, interval.hi)})
        ranks.append({x: i + 1 for i, x in enumerate(values)})
    boxes = tuple(
        LocalBox({dim: Interval(ranks[dim][iv.lo], ranks[dim][iv.hi]) for dim, iv in box.bounded})
        for box in R.boxes
    )
    return Representation(R.n, R.dims, boxes)


def is_normalized(R: Representation) -> bool:
    for box in R.boxes:
        for _, iv in box.bounded:
            for x in (iv.lo, iv.hi):
                if not (isinstance(x, int) or (isinstance(x, Fraction) and x.denominator == 1)):
                    return False
                if not 1 <= x <= 2 * R.n:
                    return False
    return True


def add_vertex_dim(R: Representation, v: int, nbrs: Iterable, lean: bool = False) -> Representation:
    """
    Adds vertex `v` with one new dimension: v is {0}, its neighbours [0, 1]
    and every other vertex {1}. With `lean=True` the neighbours stay
    unbounded in the new dimension instead, which realizes the same graph.

    Args:
        R (Representation): Representation of G - v, vertices relabelled
                            0..n-2 in increasing order.
        v (int): Label of the new vertex in G.
        nbrs (Iterable): Neighbours of v, labelled in G.

    Returns:
        Representation: Representation of G on R.n + 1 vertices.
    """
    n = R.n + 1
    if not 0 <= v < n:
        raise DomainError(f"vertex {v} outside 0..{n - 1}")
    nbrs = set(nbrs)
    if v in nbrs or any(not 0 <= u < n for u in nbrs):
        raise DomainError(f"neighbours of {v} must be other vertices of the graph")

    new = R.dims
    boxes = []
    for u in range(n):
        if u == v:
            boxes.append(LocalBox({new: Interval(0, 0)}))
            continue
        old = dict(R.boxes[u if u < v else u - 1].bounded)
        if u in nbrs:
            if not lean:
                old[new] = Interval(0, 1)
        else:
            old[new] = Interval(1, 1)
        boxes.append(LocalBox(old))
    return Representation(n, new + 1, tuple(boxes))


def pad_universal(R: Representation, G: Graph, S: Iterable) -> Representation:
    """
    Representation of G<S> (every pair not inside S made adjacent) from a
    representation of G[S]. Vertices outside S get the all-real box.

    Raises:
        ValidationError: If R does not realize G[S].
    """
    sub, labels = G.induced(S)
    if R.n != sub.n or realize(R) != sub:
        raise ValidationError(f"representation does not realize the induced subgraph on {labels}")
    boxes = [UNIVERSAL] * G.n
    for i, v in enumerate(labels):
        boxes[v] = R.boxes[i]
    return Representation(G.n, R.dims, tuple(boxes))


def intersect_reps(reps: Iterable) -> Representation:
    """
    Concatenates the dimensions of representations on the same vertex set.
    The realized graph is the intersection of the realized graphs.

    Raises:
        DomainError: If the representations do not share a vertex count.
    """
    reps = list(reps)
    if not reps:
        raise DomainError("at least one representation is required")
    n = reps[0].n
    if any(R.n != n for R in reps):
        raise DomainError("representations have different vertex counts")
    merged = [dict() for _ in range(n)]
    offset = 0
    for R in reps:
        for v, box in enumerate(R.boxes):
            for dim, interval in box.bounded:
                merged[v][dim + offset] = interval
        offset += R.dims
    return Representation(n, offset, tuple(LocalBox(b) for b in merged))


def restrict(R: Representation, S: Iterable) -> Representation:
    """Boxes of the vertices in S, relabelled in increasing order. Realizes G[S]."""
    labels = sorted(set(S))
    return Representation(len(labels), R.dims, tuple(R.boxes[v] for v in labels))


def trim_universal(R: Representation) -> Representation:
    """
    Unbounds every interval that meets all other bounded intervals of its
    dimension. The realized graph is unchanged.
    """
    keep = [dict(box.bounded) for box in R.boxes]
    for dim in range(R.dims):
        members = [(v, iv) for v, iv in enumerate(R.column(dim)) if iv is not None]
        for v, iv in members:
            if all(iv.meets(other) for u, other in members if u != v):
                del keep[v][dim]
    return Representation(R.n, R.dims, tuple(LocalBox(b) for b in keep))


def _dump_endpoint(x):
    x = Fraction(x)
    return int(x) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _load_endpoint(x):
    if isinstance(x, bool):
        raise FormatError(f"bad endpoint {x!r}")
    if isinstance(x, int):
        return x
    if isinstance(x, str):
        try:
            value = Fraction(x)
        except (ValueError, ZeroDivisionError):
            raise FormatError(f"bad endpoint {x!r}") from None
        return int(value) if value.denominator == 1 else value
    raise FormatError(f"bad endpoint {x!r}")


def representation_to_text(R: Representation) -> str:
    doc = {
        "n": R.n,
        "dims": R.dims,
        "boxes": [[[dim, _dump_endpoint(iv.lo), _dump_endpoint(iv.hi)] for dim, iv in box.bounded]
                  for box in R.boxes],
    }
    return json.dumps(doc, indent=1)


def representation_from_text(text: str) -> Representation:
    """
    Parses the representation text format.

    Raises:
        FormatError: If the document is not valid JSON or misses fields.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as err:
        raise FormatError(f"invalid representation document: {err.msg}", line=err.lineno) from None
    try:
        boxes = []
        for entry in doc["boxes"]:
            box = {}
            for dim, lo, hi in entry:
                box[int(dim)] = Interval(_load_endpoint(lo), _load_endpoint(hi))
            boxes.append(LocalBox(box))
        return Representation(int(doc["n"]), int(doc["dims"]), tuple(boxes))
    except (KeyError, TypeError, ValueError) as err:
        if isinstance(err, FormatError):
            raise
        raise FormatError(f"invalid representation document: {err}") from None


def save_representation(R: Representation, path: str | Path) -> None:
    Path(path).write_text(representation_to_text(R) + "\n")


def load_representation(path: str | Path) -> Representation:
    return representation_from_text(Path(path).read_text())

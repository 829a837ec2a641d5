'''
Graphs whose complement is k-regular with girth at least five:
the average-degree lower bound and exact constructions.

The complement is covered by trees of diameter at most three,
each of them co-interval, read off an orientation:

 - k even: an Eulerian orientation, one star per vertex made of its in-edges;
 - k odd with a perfect matching M: an Eulerian orientation of the
   complement minus M, one double star per matching edge uv made of uv
   and the in-edges at u and at v;
 - k odd without a perfect matching: an orientation with out-degree at
   most (k + 1) / 2 and one star per vertex.

(c) 2025
'''

from dataclasses import dataclass
from math import floor

from localbox.boxes.boxrep import Representation, verify
from localbox.boxes.views import CoIntervalCover, CoverPart, from_cover
from localbox.config import silent
from localbox.errors import AuditError, HypothesisError
from localbox.graphs.graph_core import (Graph, Matching, average_degree, complement,
                                        eulerian_orientation, girth, halfplus_orientation,
                                        maximum_matching)
from localbox.graphs.interval_algs import diam3_cointerval

# -----------------------------TYPES----------------------------------


@dataclass(frozen=True)
class Gcreg5Instance:
    G: Graph
    complement: Graph
    k: int
    girth_ok: bool
    has_pm: bool
    matching: Matching


@dataclass(frozen=True)
class GcregRep:
    representation: Representation
    value: int
    case: str                  # "eulerian", "matching" or "halfplus"
    cover: CoIntervalCover


@dataclass(frozen=True)
class GcregValue:
    value: int
    upper: Representation
    lower_witness: str
    case: str


# -----------------------------FUNCTIONS----------------------------------

def avgdeg_lower(G: Graph) -> int:
    """
    floor(ad(G^c) / 2 + 1), a lower bound on the local boxicity of G when the
    complement has girth at least five. 0 when the complement has no edge.

    Raises:
        HypothesisError: If the complement has girth at most four.
    """
    Gc = complement(G)
    g = girth(Gc)
    if g < 5:
        raise HypothesisError(f"complement has girth {g} < 5")
    if Gc.m == 0:
        return 0
    return floor(average_degree(Gc) / 2 + 1)


def gcreg_instance(G: Graph) -> Gcreg5Instance:
    """
    Checks the hypotheses: the complement is k-regular for some k >= 1 and has
    girth at least five.

    Raises:
        HypothesisError: Naming the hypothesis that fails.
    """
    Gc = complement(G)
    if G.n == 0 or not Gc.is_regular():
        raise HypothesisError("complement is not regular")
    k = Gc.degree(0)
    if k == 0:
        raise HypothesisError("complement has no edges (k = 0)")
    g = girth(Gc)
    if g < 5:
        raise HypothesisError(f"complement has girth {g} < 5")
    M = maximum_matching(Gc)
    return Gcreg5Instance(G, Gc, k, True, M.is_perfect, M)


def _case(inst: Gcreg5Instance) -> tuple:
    if inst.k % 2 == 0:
        return "eulerian", inst.k // 2 + 1
    if inst.has_pm:
        return "matching", inst.k // 2 + 1
    return "halfplus", (inst.k + 3) // 2


def _tree_part(edges: list) -> CoverPart:
    labels = sorted({v for e in edges for v in e})
    index = {v: i for i, v in enumerate(labels)}
    tree = Graph.from_edges(len(labels), [(index[u], index[v]) for u, v in edges])
    model = diam3_cointerval(tree)
    return CoverPart(frozenset(labels), frozenset((min(u, v), max(u, v)) for u, v in edges),
                     {labels[i]: model.intervals[i] for i in range(len(labels))})


def gcreg_cover(G: Graph, message: callable = silent) -> tuple:
    """
    Tree cover of the complement.

    Returns:
        tuple: (instance, case, list of CoverPart), each part a tree of
               diameter at most three with its interval model.
    """
    inst = gcreg_instance(G)
    case, _ = _case(inst)
    Gc = inst.complement
    trees = []
    if case == "matching":
        pairs = sorted(inst.matching.pairs)
        rest = Graph(Gc.n, Gc.edges - inst.matching.pairs)
        orientation = eulerian_orientation(rest)
        for u, v in pairs:
            edges = [(u, v)]
            edges += [(w, u) for w in orientation.in_neighbors(u)]
            edges += [(w, v) for w in orientation.in_neighbors(v)]
            trees.append(edges)
    else:
        orientation = eulerian_orientation(Gc) if case == "eulerian" else halfplus_orientation(Gc)
        for v in range(Gc.n):
            if orientation.indegree(v):
                trees.append([(w, v) for w in orientation.in_neighbors(v)])
    message(f"k = {inst.k}, {case} case, {len(trees)} trees")
    return inst, case, [_tree_part(edges) for edges in trees]


def gcreg_rep(G: Graph, message: callable = silent) -> GcregRep:
    """
    Representation of G at the exact value floor(k/2 + 1) (k even, or k odd
    with a perfect matching in the complement) or (k + 3) / 2 (k odd without one).

    Raises:
        HypothesisError: If the complement is not regular of girth at least five.
        AuditError: If the assembled representation does not verify.
    """
    inst, case, parts = gcreg_cover(G, message)
    _, value = _case(inst)
    cover = CoIntervalCover(inst.complement, tuple(parts))
    R = from_cover(cover)
    report = verify(R, G, value)
    if not report.ok:
        raise AuditError(f"{case} construction does not verify: {report.first_violation}")
    return GcregRep(R, value, case, cover)


def gcreg_value(G: Graph, message: callable = silent) -> GcregValue:
    """
    Local boxicity of G with a two-sided certificate: the verified
    representation from `gcreg_rep` above and a cited lower bound below.
    """
    rep = gcreg_rep(G, message)
    inst = gcreg_instance(G)
    if rep.case == "halfplus":
        witness = (f"odd k = {inst.k}, complement of girth >= 5 without a perfect matching: "
                   f"local boxicity >= (k + 3) / 2 = {rep.value}")
    else:
        witness = (f"average-degree bound floor(ad(G^c)/2 + 1) = {avgdeg_lower(G)} "
                   f"with ad(G^c) = {inst.k} and girth(G^c) >= 5")
    return GcregValue(rep.value, rep.representation, witness, rep.case)

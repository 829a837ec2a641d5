'''
Shift graphs S_n and the 2-local representation of their complements.

S_n has the pairs (i, j), 1 <= i < j <= n, as vertices, numbered in
lexicographic order, with (i, j) ~ (k, l) iff j = k or l = i. It is
triangle-free and its chromatic number grows like log n, while its
complement has local boxicity at most two.

(c) 2025
'''

import math
from itertools import combinations

from localbox.boxes.boxrep import Interval, LocalBox, Representation
from localbox.errors import DomainError
from localbox.graphs.graph_core import Graph


def shift_pairs(n: int) -> list:
    """Vertex labels (i, j) of S_n in index order."""
    if n < 2:
        raise DomainError(f"shift graphs need n >= 2, got {n}")
    return list(combinations(range(1, n + 1), 2))


def shift_graph(n: int) -> Graph:
    pairs = shift_pairs(n)
    edges = [(a, b) for a, b in combinations(range(len(pairs)), 2)
             if pairs[a][1] == pairs[b][0] or pairs[b][1] == pairs[a][0]]
    return Graph.from_edges(len(pairs), edges)


def shift_coloring(n: int) -> list:
    """
    Proper coloring of S_n with ceil(log2 n) colors: (i, j) gets 1 plus the
    highest bit in which i - 1 and j - 1 differ.
    """
    return [((i - 1) ^ (j - 1)).bit_length() for i, j in shift_pairs(n)]


def shift_core(n: int) -> list:
    """
    Indices of the pairs inside {1, ..., 2^(k-1) + 1}, k = ceil(log2 n).
    They induce a copy of S_m, m = 2^(k-1) + 1, which already needs k colors.
    """
    pairs = shift_pairs(n)
    m = 2 ** (math.ceil(math.log2(n)) - 1) + 1
    return [index for index, (_, j) in enumerate(pairs) if j <= m]


def shift_complement_rep(n: int) -> Representation:
    """
    n-dimensional representation of the complement of S_n: the box of
    (i, j) is {0} in dimension i - 1, {1} in dimension j - 1 and the
    real line elsewhere, so every box is local in exactly two dimensions.
    """
    boxes = tuple(LocalBox({i - 1: Interval(0, 0), j - 1: Interval(1, 1)}) for i, j in shift_pairs(n))
    return Representation(len(boxes), n, boxes)

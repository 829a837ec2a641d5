'''
Random graphs G(n, p): seeded sampling, a Monte Carlo census of
multicyclic components in the sparse regime, and the representation
pipeline for sparse random graphs (random partition into l classes,
two boxes per pair of classes, glued along the edge set of K_l).

(c) 2025
'''

import math
from dataclasses import dataclass

import numpy as np
import pandas as pd
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from localbox.boxes.boxrep import Interval, LocalBox, Representation, UNIVERSAL, verify
from localbox.config import load_config_file, setting, silent
from localbox.constructions.compose import compose
from localbox.constructions.steiner import complete_graph_steiner
from localbox.errors import AuditError, DomainError
from localbox.graphs.graph_core import Graph, VertexPartition, multicyclic_free
from localbox.graphs.interval_algs import sparse_two_box

# -----------------------------TYPES----------------------------------


@dataclass(frozen=True)
class GnpSample:
    n: int
    p: float
    seed: int
    graph: Graph


@dataclass(frozen=True)
class MonteCarloReport:
    n: int
    c: float
    trials: int
    hits: int
    empirical: float
    bound: float
    sigma: float


@dataclass(frozen=True)
class GnpRepResult:
    success: bool
    representation: Representation | None
    locality: int | None
    classes: int
    attempts: int
    offending_pair: tuple | None
    bound: int


# -----------------------------FUNCTIONS----------------------------------

def _generator(seed) -> np.random.Generator:
    return np.random.default_rng(seed)


def _draw_edges(rng: np.random.Generator, n: int, p: float) -> tuple:
    rows, cols = np.triu_indices(n, k=1)
    keep = rng.random(rows.size) < p
    return rows[keep], cols[keep]


def sample_gnp(n: int, p: float, seed=0) -> GnpSample:
    """
    Every pair is an edge independently with probability p.
    Identical (n, p, seed) give identical graphs.

    Raises:
        DomainError: If p lies outside [0, 1] or n < 0.
    """
    if not 0 <= p <= 1:
        raise DomainError(f"p must lie in [0, 1], got {p}")
    if n < 0:
        raise DomainError(f"n must be nonnegative, got {n}")
    rows, cols = _draw_edges(_generator(seed), n, p)
    return GnpSample(n, p, seed, Graph.from_edges(n, zip(rows.tolist(), cols.tolist())))


def _has_multicyclic(n: int, rows: np.ndarray, cols: np.ndarray) -> bool:
    """True when some connected component has more edges than vertices."""
    if rows.size == 0:
        return False
    adjacency = coo_matrix((np.ones(rows.size, dtype=np.int8), (rows, cols)), shape=(n, n))
    count, labels = connected_components(adjacency, directed=False)
    vertices = np.bincount(labels, minlength=count)
    edges = np.bincount(labels[rows], minlength=count)
    return bool(np.any(edges > vertices))


def multicyclic_mc(n: int, c: float, trials: int, seed=0, message: callable = silent) -> MonteCarloReport:
    """
    Frequency of G(n, c/n) having a component with two or more cycles,
    reported beside the bound 2 / ((1 - c)^3 n).

    The standard deviation is the binomial one at the bound,
    sqrt(b (1 - b) / trials) with b capped at 1.

    Raises:
        DomainError: If c >= 1 (the bound is vacuous), c < 0, n < 1 or trials < 1.
    """
    if c >= 1 or c < 0:
        raise DomainError(f"need 0 <= c < 1, got {c}")
    if n < 1 or trials < 1:
        raise DomainError("need n >= 1 and at least one trial")
    p = min(1.0, c / n)
    rng = _generator(seed)
    hits = 0
    for trial in range(1, trials + 1):
        rows, cols = _draw_edges(rng, n, p)
        hits += _has_multicyclic(n, rows, cols)
        if trial % 500 == 0:
            message(f"n = {n}, c = {c}: {trial}/{trials} trials, {hits} multicyclic")
    bound = 2 / ((1 - c) ** 3 * n)
    b = min(bound, 1.0)
    return MonteCarloReport(n, c, trials, hits, hits / trials, bound, math.sqrt(b * (1 - b) / trials))


def multicyclic_grid(ns, cs, trials: int, seed=0, message: callable = silent) -> list:
    """Runs `multicyclic_mc` on every (n, c) cell, each cell on its own spawned stream."""
    cells = [(n, c) for n in ns for c in cs]
    streams = np.random.SeedSequence(seed).spawn(len(cells))
    return [multicyclic_mc(n, c, trials, stream, message) for (n, c), stream in zip(cells, streams)]


def monte_carlo_frame(reports: list) -> pd.DataFrame:
    columns = load_config_file()["output"]["monte_carlo_columns"]
    rows = [[r.n, r.c, r.trials, r.empirical, r.bound, r.sigma] for r in reports]
    return pd.DataFrame(rows, columns=columns)


def _edgeless_rep(n: int) -> Representation:
    if n <= 1:
        return Representation(n, 0, (UNIVERSAL,) * n)
    return Representation(n, 1, tuple(LocalBox({0: Interval(v + 1, v + 1)}) for v in range(n)))


def gnp_rep(G: Graph, np_value: float, epsilon: float, seed=0, max_retries: int | None = None,
            message: callable = silent) -> GnpRepResult:
    """
    Representation of a sparse graph through a random partition.

    The vertices are split uniformly at random into l = max(2, ceil(2 (1 + eps) np))
    classes. When the union of every pair of classes has at most one cycle per
    component, each union gets two boxes from `sparse_two_box` and the pieces are
    glued along the edge set of K_l, so every vertex is local in at most
    2 (l - 1) dimensions. Otherwise the partition is drawn again from a fresh
    stream, at most `max_retries` times.

    Args:
        G (Graph): Input graph.
        np_value (float): Declared expected degree n p.
        epsilon (float): Slack, positive.
        seed: Integer or numpy SeedSequence.
        max_retries (int | None): Resamples allowed after the first partition.
        message (callable): Progress sink.

    Returns:
        GnpRepResult: On failure `offending_pair` names the last pair of
                      classes whose union had a multicyclic component.

    Raises:
        DomainError: If epsilon <= 0 or np_value < 0.
        AuditError: If a successful run does not verify within 2 (l - 1).
    """
    if epsilon <= 0 or np_value < 0:
        raise DomainError("need epsilon > 0 and np >= 0")
    max_retries = setting("gnp", "max_retries", max_retries)
    ell = max(2, math.ceil(2 * (1 + epsilon) * np_value))
    bound = 2 * (ell - 1)

    if G.m == 0:
        R = _edgeless_rep(G.n)
        return GnpRepResult(True, R, R.max_locality(), ell, 0, None, bound)

    system = complete_graph_steiner(ell)
    root = seed if isinstance(seed, np.random.SeedSequence) else np.random.SeedSequence(seed)
    streams = root.spawn(max_retries + 1)
    offending = None
    for attempt, stream in enumerate(streams, start=1):
        labels = _generator(stream).integers(0, ell, size=G.n)
        partition = VertexPartition.from_labels(labels, ell)
        pieces = []
        offending = None
        for block in system.blocks:
            sub, _ = G.induced(partition.union(block))
            if not multicyclic_free(sub).free:
                offending = block
                break
            pieces.append(sub)
        if offending is not None:
            message(f"Attempt {attempt}: classes {offending} span a multicyclic component, resampling")
            continue

        R = compose(G, partition, system, [sparse_two_box(sub) for sub in pieces], message=message)
        report = verify(R, G, bound)
        if not report.ok:
            raise AuditError(f"random-partition representation does not verify: {report.first_violation}")
        message(f"Attempt {attempt}: success with {ell} classes, locality {R.max_locality()}")
        return GnpRepResult(True, R, R.max_locality(), ell, attempt, None, bound)

    message(f"Retries exhausted after {len(streams)} partitions")
    return GnpRepResult(False, None, None, ell, len(streams), offending, bound)

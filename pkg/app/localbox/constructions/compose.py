'''
Composition of block representations along a Steiner system,
the randomized balanced partition, the alpha function of the
degree recursion, and the two construction drivers (by maximum
degree and by number of edges).

Drivers always return a verified representation and report the
locality they actually achieved, never a theoretical constant.

(c) 2025
'''

import math
from dataclasses import dataclass, field

import numpy as np

from localbox.boxes.boxrep import (Representation, UNIVERSAL, add_vertex_dim, intersect_reps,
                                   pad_universal, realize, verify)
from localbox.config import setting, silent
from localbox.constructions.steiner import (PRIME_WINDOW_START, SteinerSystem, affine_plane,
                                            prime_square_in_window, verify_steiner)
from localbox.errors import AuditError, DomainError, PreconditionError, ValidationError
from localbox.graphs.graph_core import Graph, VertexPartition, multicyclic_free
from localbox.graphs.interval_algs import is_interval, sparse_two_box
from localbox.solvers.exact_solver import lbox_exact

# -----------------------------TYPES----------------------------------


@dataclass(frozen=True)
class PartitionOutcome:
    partition: VertexPartition
    violations: int
    attempts: int
    success: bool
    bound: float
    strategy: str = "global"


@dataclass(frozen=True)
class AlphaValue:
    t: float
    value: float
    tail_bound: float
    terms: int


@dataclass
class DriverResult:
    representation: Representation
    locality: int
    strategy_log: list = field(default_factory=list)


# -----------------------------FUNCTIONS----------------------------------

def compose(G: Graph, P: VertexPartition, S: SteinerSystem, block_reps: list,
            message: callable = silent) -> Representation:
    """
    Glues representations of the block unions G[V_i, i in S_j] into one of G.

    Each block representation is padded to G<block union> and all are
    intersected. Every pair of classes lies in exactly one block, so the
    intersection is G, and every vertex lies in (s - 1) / (k - 1) blocks.

    Raises:
        ValidationError: If S is not a valid (2, k, s) system matching P, or a
                         block representation does not realize its block union
                         (the block is named).
        AuditError: If the glued representation fails its audit.
    """
    if S.t != 2 or S.s != P.s:
        raise ValidationError(f"need a (2, k, {P.s}) Steiner system, got ({S.t}, {S.k}, {S.s})")
    check = verify_steiner(S)
    if not check.ok:
        raise ValidationError(f"invalid Steiner system: {check.violation}")
    if len(block_reps) != len(S.blocks):
        raise ValidationError(f"{len(block_reps)} block representations for {len(S.blocks)} blocks")

    padded = []
    for j, (block, R) in enumerate(zip(S.blocks, block_reps)):
        try:
            padded.append(pad_universal(R, G, P.union(block)))
        except ValidationError:
            raise ValidationError(f"block {j} {block}: representation does not realize its block union") from None
    R = intersect_reps(padded) if padded else Representation(G.n, 0, (UNIVERSAL,) * G.n)

    limit = S.replication() * max((B.max_locality() for B in block_reps), default=0)
    if R.max_locality() > limit:
        raise AuditError(f"composed locality {R.max_locality()} exceeds {limit}")
    if realize(R) != G:
        raise AuditError("composed representation does not realize the graph")
    message(f"Composed {len(S.blocks)} blocks, locality {R.max_locality()} (limit {limit})")
    return R


def partition_degree_bound(max_degree: int, q: int) -> float:
    """
    (1 + 4 sqrt(q ln D / D)) D / q for maximum degree D. Below D = 2 the
    logarithm degenerates and the bound is D itself (no constraint).
    """
    if max_degree < 2:
        return float(max_degree)
    return (1 + 4 * math.sqrt(q * math.log(max_degree) / max_degree)) * max_degree / q


def _block_degrees(adjacency: np.ndarray, membership: np.ndarray, labels: np.ndarray) -> tuple:
    """In-block degrees: result[j, v] = neighbours of v inside block union j."""
    inside = membership[:, labels]
    return inside, inside.astype(np.int64) @ adjacency


def _violations(inside: np.ndarray, degrees: np.ndarray, bound: float) -> np.ndarray:
    return np.argwhere(inside & (degrees > bound + 1e-9))


def balanced_partition(G: Graph, q: int, slack: float | None = None, seed=0, *,
                       strategy: str | None = None, max_attempts: int | None = None,
                       message: callable = silent) -> PartitionOutcome:
    """
    Random partition of V into q^2 classes such that every block union of the
    affine plane of order q induces maximum degree at most (1 + slack) D / q.

    Args:
        G (Graph): Input graph.
        q (int): Prime order of the affine plane.
        slack (float | None): Defaults to 4 sqrt(q ln D / D).
        seed: Integer or numpy SeedSequence.
        strategy (str | None): "global" resamples every class label, "moser_tardos"
                               only the labels of the lowest violated vertex and its
                               neighbours. Configured default.
        max_attempts (int | None): Defaults to retry_factor * q^2 * ln(n + 2).
        message (callable): Progress sink.

    Returns:
        PartitionOutcome: The first audited partition, or the best one found
                          (fewest violations) with success False once the cap is hit.
    """
    strategy = setting("partition", "strategy", strategy)
    if strategy not in ("global", "moser_tardos"):
        raise DomainError(f"unknown partition strategy {strategy!r}")
    plane = affine_plane(q)
    D = G.max_degree()
    if slack is None:
        bound = partition_degree_bound(D, q)
    elif slack <= 0:
        raise DomainError("slack must be positive")
    else:
        bound = (1 + slack) * D / q
    if max_attempts is None:
        factor = setting("partition", "retry_factor")
        max_attempts = math.ceil(factor * q * q * math.log(G.n + 2))

    rng = np.random.default_rng(seed)
    adjacency = np.zeros((G.n, G.n), dtype=np.int64)
    for u, v in G.edges:
        adjacency[u, v] = adjacency[v, u] = 1
    membership = np.zeros((len(plane.blocks), q * q), dtype=bool)
    for j, block in enumerate(plane.blocks):
        membership[j, list(block)] = True

    labels = rng.integers(0, q * q, size=G.n)
    best_labels, best_count = labels.copy(), None
    for attempt in range(1, max_attempts + 1):
        inside, degrees = _block_degrees(adjacency, membership, labels)
        bad = _violations(inside, degrees, bound)
        if best_count is None or len(bad) < best_count:
            best_labels, best_count = labels.copy(), len(bad)
        if len(bad) == 0:
            message(f"Balanced partition found after {attempt} attempt(s)")
            return PartitionOutcome(VertexPartition.from_labels(labels, q * q), 0, attempt, True, bound, strategy)
        if attempt % 50 == 0:
            message(f"Attempt {attempt}: {len(bad)} violated block degrees")
        if strategy == "global":
            labels = rng.integers(0, q * q, size=G.n)
        else:
            v = int(bad[np.lexsort((bad[:, 0], bad[:, 1]))][0][1])
            event = [v] + sorted(G.neighbors(v))
            labels = labels.copy()
            labels[event] = rng.integers(0, q * q, size=len(event))

    message(f"Retry cap of {max_attempts} reached, best partition has {best_count} violations")
    return PartitionOutcome(VertexPartition.from_labels(best_labels, q * q), best_count, max_attempts,
                            False, bound, strategy)


def alpha(t: float, tol: float | None = None) -> AlphaValue:
    """
    alpha(t) = prod_{i >= 1} (1 + 18 * 4^i / (9^i ln^2 t))^-1, truncated once the
    geometric tail (18 / ln^2 t) (4/9)^(N+1) (9/5) drops below `tol`.

    Raises:
        DomainError: If t < 2 or tol <= 0.
    """
    tol = setting("alpha", "tol", tol)
    if t < 2:
        raise DomainError(f"alpha is defined for t >= 2, got {t}")
    if tol <= 0:
        raise DomainError("tolerance must be positive")
    L = math.log(t) ** 2
    log_value = 0.0
    i = 0
    while True:
        i += 1
        log_value -= math.log1p(18 * (4 / 9) ** i / L)
        tail = 18 / L * (4 / 9) ** (i + 1) * 9 / 5
        if tail <= tol:
            break
    return AlphaValue(t, math.exp(log_value), tail, i)


def _peel(G: Graph, exact_cutoff: int, log: list, message: callable) -> Representation:
    """Removes a maximum-degree vertex and re-adds it in a new dimension."""
    leaf = _leaf(G, exact_cutoff, log, message)
    if leaf is not None:
        return leaf
    v = max(range(G.n), key=lambda u: (G.degree(u), -u))
    rest, labels = G.induced(set(range(G.n)) - {v})
    log.append(f"n={G.n}: peel vertex of degree {G.degree(v)}")
    R = _peel(rest, exact_cutoff, log, message)
    return add_vertex_dim(R, v, G.neighbors(v), lean=True)


def _leaf(G: Graph, exact_cutoff: int, log: list, message: callable) -> Representation | None:
    """Direct representations for the cases the recursion stops at, else None."""
    if G.m == G.n * (G.n - 1) // 2:
        log.append(f"n={G.n}: complete")
        return Representation(G.n, 0, (UNIVERSAL,) * G.n)
    check = is_interval(G)
    if check.ok:
        log.append(f"n={G.n}: interval graph")
        return check.model.as_representation()
    if G.n <= exact_cutoff:
        result = lbox_exact(G, message=message)
        log.append(f"n={G.n}: exact solver ({result.status}, {result.certificate.max_locality()})")
        return result.certificate
    if multicyclic_free(G).free:
        log.append(f"n={G.n}: at most one cycle per component, two boxes")
        return sparse_two_box(G)
    return None


def _theory_q(G: Graph) -> int:
    D = G.max_degree()
    t = D / math.log(D) if D >= 2 else 0
    if t < PRIME_WINDOW_START ** 2:
        raise PreconditionError(
            f"maximum degree {D} is too small for the prime-square window "
            f"(D / ln D = {t:.1f} < {PRIME_WINDOW_START ** 2}); pass q_override")
    return prime_square_in_window(t)


def lbox_by_degree(G: Graph, *, q_override: int | None = None, exact_cutoff: int | None = None,
                   seed=0, max_depth: int | None = None, strategy: str | None = None,
                   message: callable = silent) -> DriverResult:
    """
    Recursive degree driver.

    Small, complete, interval and sparse pieces are represented directly.
    Anything else is split into q^2 classes by `balanced_partition`, every
    block union of the affine plane of order q is solved recursively, and the
    block representations are glued with `compose`. Pieces that do not shrink
    or lie beyond `max_depth` fall back to peeling maximum-degree vertices.

    Raises:
        PreconditionError: If a partition is needed, no `q_override` is given and
                           the maximum degree is too small for the prime windows.
    """
    exact_cutoff = setting("drivers", "exact_cutoff", exact_cutoff)
    max_depth = setting("drivers", "max_depth", max_depth)
    log = []
    root = seed if isinstance(seed, np.random.SeedSequence) else np.random.SeedSequence(seed)

    def solve(H: Graph, depth: int, seq: np.random.SeedSequence) -> Representation:
        leaf = _leaf(H, exact_cutoff, log, message)
        if leaf is not None:
            return leaf
        if depth >= max_depth:
            log.append(f"n={H.n}: depth limit, peeling")
            return _peel(H, exact_cutoff, log, message)
        q = q_override if q_override is not None else _theory_q(H)
        plane = affine_plane(q)
        children = seq.spawn(len(plane.blocks) + 1)
        outcome = balanced_partition(H, q, seed=children[0], strategy=strategy, message=message)
        log.append(f"n={H.n}: partition q={q}, success={outcome.success}, "
                   f"violations={outcome.violations}, attempts={outcome.attempts}")
        reps = []
        for j, block in enumerate(plane.blocks):
            members = outcome.partition.union(block)
            if len(members) == H.n:
                log.append(f"n={H.n}: block {j} does not shrink, peeling")
                return _peel(H, exact_cutoff, log, message)
            sub, _ = H.induced(members)
            reps.append(solve(sub, depth + 1, children[j + 1]))
        return compose(H, outcome.partition, plane, reps, message=message)

    R = solve(G, 0, root)
    report = verify(R, G, R.max_locality())
    if not report.ok:
        raise AuditError(f"degree driver output does not verify: {report.first_violation}")
    message(f"Degree driver finished with locality {R.max_locality()}")
    return DriverResult(R, R.max_locality(), log)


def lbox_by_edges(G: Graph, *, q_override: int | None = None, exact_cutoff: int | None = None,
                  seed=0, strategy: str | None = None, message: callable = silent) -> DriverResult:
    """
    Edge driver: the vertices of degree at least sqrt(m) (at most 2 sqrt(m) of
    them) are peeled, the rest is represented by `lbox_by_degree`, and the
    peeled vertices are added back one new dimension each, in increasing order.
    """
    threshold = math.sqrt(G.m)
    peeled = [v for v in range(G.n) if G.degree(v) > 0 and G.degree(v) >= threshold]
    rest, labels = G.induced(set(range(G.n)) - set(peeled))
    message(f"Peeling {len(peeled)} vertices of degree >= {threshold:.2f}")
    inner = lbox_by_degree(rest, q_override=q_override, exact_cutoff=exact_cutoff, seed=seed,
                           strategy=strategy, message=message)
    log = [f"peeled {peeled}"] + inner.strategy_log

    R = inner.representation
    current = list(labels)
    for v in peeled:
        current = sorted(current + [v])
        position = {u: i for i, u in enumerate(current)}
        R = add_vertex_dim(R, position[v], [position[u] for u in G.neighbors(v) if u in position], lean=True)

    report = verify(R, G, R.max_locality())
    if not report.ok:
        raise AuditError(f"edge driver output does not verify: {report.first_violation}")
    return DriverResult(R, R.max_locality(), log)

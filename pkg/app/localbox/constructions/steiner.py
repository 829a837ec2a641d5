'''
Steiner systems used to glue block representations together:
affine planes over prime fields, the edge set of a complete graph,
an axiom checker, and the prime windows that let the degree driver
pick a plane of the right size.

(c) 2025
'''

import json
import math
from dataclasses import dataclass
from itertools import combinations
from pathlib import Path

from sympy import isprime, nextprime

from localbox.errors import AuditError, FormatError, PreconditionError

PRIME_WINDOW_START = 3275

# -----------------------------TYPES----------------------------------


@dataclass(frozen=True)
class SteinerSystem:
    """Blocks of size k over the points 0..s-1 covering every t-subset exactly once."""
    s: int
    t: int
    k: int
    blocks: tuple

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(tuple(sorted(b)) for b in self.blocks))

    def replication(self) -> int:
        """Number of blocks through a point when t = 2: (s - 1) / (k - 1)."""
        return (self.s - 1) // (self.k - 1)


@dataclass(frozen=True)
class SteinerCheck:
    ok: bool
    violation: str | None = None

    def __bool__(self) -> bool:
        return self.ok


# -----------------------------FUNCTIONS----------------------------------

def affine_plane(q: int) -> SteinerSystem:
    """
    Affine plane over the field with q elements, q prime.

    Point (x, y) is numbered x * q + y. Lines y = m x + b come first, ordered
    by slope m then intercept b, followed by the vertical lines x = c.

    Raises:
        PreconditionError: If q is not prime.
    """
    if not isprime(q):
        raise PreconditionError(f"q = {q} is not prime (prime powers are not supported)")
    blocks = []
    for m in range(q):
        for b in range(q):
            blocks.append(tuple(x * q + (m * x + b) % q for x in range(q)))
    for c in range(q):
        blocks.append(tuple(c * q + y for y in range(q)))
    return SteinerSystem(q * q, 2, q, tuple(blocks))


def complete_graph_steiner(ell: int) -> SteinerSystem:
    """The edges of the complete graph on ell points: a (2, 2, ell) system."""
    if ell < 2:
        raise PreconditionError(f"need at least two points, got {ell}")
    return SteinerSystem(ell, 2, 2, tuple(combinations(range(ell), 2)))


def verify_steiner(S: SteinerSystem) -> SteinerCheck:
    """
    Checks that every t-subset of the points lies in exactly one block and
    that there are C(s, t) / C(k, t) blocks.
    """
    for i, block in enumerate(S.blocks):
        if len(block) != S.k or len(set(block)) != S.k:
            return SteinerCheck(False, f"block {i} does not have {S.k} distinct points")
        if any(not 0 <= x < S.s for x in block):
            return SteinerCheck(False, f"block {i} has a point outside 0..{S.s - 1}")

    seen = {}
    for i, block in enumerate(S.blocks):
        for subset in combinations(block, S.t):
            if subset in seen:
                return SteinerCheck(False, f"{subset} lies in blocks {seen[subset]} and {i}")
            seen[subset] = i
    for subset in combinations(range(S.s), S.t):
        if subset not in seen:
            return SteinerCheck(False, f"{subset} lies in no block")

    expected = math.comb(S.s, S.t) // math.comb(S.k, S.t)
    if len(S.blocks) != expected:
        return SteinerCheck(False, f"{len(S.blocks)} blocks, expected {expected}")
    return SteinerCheck(True)


def _trial_division(p: int) -> bool:
    if p < 2:
        return False
    for d in range(2, math.isqrt(p) + 1):
        if p % d == 0:
            return False
    return True


def prime_in_window(t: float) -> int:
    """
    Smallest prime p >= t. For t >= 3275 a prime exists in [t, t + t / (2 ln^2 t)].

    Raises:
        PreconditionError: If t < 3275 (no window guarantee).
        AuditError: If the prime found lies outside the window.
    """
    if t < PRIME_WINDOW_START:
        raise PreconditionError(f"t = {t} is below {PRIME_WINDOW_START}")
    p = int(nextprime(math.ceil(t) - 1))
    if not _trial_division(p):
        raise AuditError(f"{p} failed the trial-division check")
    if p > t + t / (2 * math.log(t) ** 2):
        raise AuditError(f"prime {p} lies outside the window of {t}")
    return p


def prime_square_in_window(t: float) -> int:
    """
    Smallest prime q with q^2 >= t. For t >= 3275^2 the square lies in
    [t, t + 7 t / ln^2 t].

    Raises:
        PreconditionError: If t < 3275^2.
        AuditError: If q^2 lies outside the window.
    """
    if t < PRIME_WINDOW_START ** 2:
        raise PreconditionError(f"t = {t} is below {PRIME_WINDOW_START ** 2}")
    root = math.isqrt(math.ceil(t))
    if root * root < t:
        root += 1
    q = int(nextprime(root - 1))
    if not _trial_division(q):
        raise AuditError(f"{q} failed the trial-division check")
    if q * q > t + 7 * t / math.log(t) ** 2:
        raise AuditError(f"{q}^2 lies outside the window of {t}")
    return q


def steiner_to_text(S: SteinerSystem) -> str:
    return json.dumps({"s": S.s, "t": S.t, "k": S.k, "blocks": [list(b) for b in S.blocks]})


def steiner_from_text(text: str) -> SteinerSystem:
    try:
        doc = json.loads(text)
        return SteinerSystem(int(doc["s"]), int(doc["t"]), int(doc["k"]),
                             tuple(tuple(int(x) for x in b) for b in doc["blocks"]))
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as err:
        raise FormatError(f"invalid Steiner system document: {err}") from None


def save_steiner(S: SteinerSystem, path: str | Path) -> None:
    Path(path).write_text(steiner_to_text(S) + "\n")

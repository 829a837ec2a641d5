'''
Closed-form bounds around local boxicity, evaluated as numbers.

Every value is computed from the stated formula. Statements that are
only known up to a constant factor are reported with their growth
shape and no value. Logarithms are binary unless the name says `ln`.

(c) 2025
'''

import math
from dataclasses import dataclass, field

import pandas as pd

from localbox.errors import DomainError

# -----------------------------TYPES----------------------------------


@dataclass(frozen=True)
class BoundReport:
    name: str
    inputs: dict
    value: float | None
    citation: str
    note: str | None = None


@dataclass(frozen=True)
class LllReport:
    """Local lemma check for the balanced partition of a Delta-regular graph into q^2 classes."""
    max_degree: int
    q: int
    delta: float
    event_bound: float
    dependency: int
    requirement: float
    satisfied: bool
    notes: list = field(default_factory=list)


# -----------------------------FUNCTIONS----------------------------------

def counting_upper(n: int, d: int) -> BoundReport:
    """
    log2 of the number of labelled n-vertex graphs of local boxicity at
    most d is at most n d (3 log n + 7 log d).

    Raises:
        DomainError: If n < 2 or d < 2.
    """
    if n < 2 or d < 2:
        raise DomainError(f"the counting bound needs n, d >= 2, got n = {n}, d = {d}")
    value = n * d * (3 * math.log2(n) + 7 * math.log2(d))
    return BoundReport("counting_upper_log2", {"n": n, "d": d}, value,
                       "labelled n-vertex graphs of local boxicity <= d: at most 2^(nd(3 log n + 7 log d))")


def _check_positive(**params) -> None:
    for key, value in params.items():
        if value is not None and value <= 0:
            raise DomainError(f"{key} must be positive, got {value}")


def lower_bound_table(n: int | None = None, max_degree: int | None = None, eps: float | None = None,
                      np_value: float | None = None, m: int | None = None, g: int | None = None) -> list:
    """
    Lower bounds that hold for almost all graphs of the described kind.
    A row appears only when its parameters are given.

    Raises:
        DomainError: If a parameter is not positive or eps lies outside (0, 1).
    """
    _check_positive(n=n, max_degree=max_degree, np_value=np_value, m=m, g=g)
    if eps is not None and not 0 < eps < 1:
        raise DomainError(f"eps must lie in (0, 1), got {eps}")

    rows = []
    if n is not None and n >= 2:
        rows.append(BoundReport("all_graphs", {"n": n}, n / (21 * math.log2(n)),
                                "almost all n-vertex graphs: lbox >= n / (21 log n)"))
    if eps is not None and max_degree is not None:
        rows.append(BoundReport("max_degree", {"eps": eps, "max_degree": max_degree}, eps * max_degree / 21,
                                "almost all graphs of maximum degree D = O(n^(1-eps)): lbox >= eps D / 21"))
    if eps is not None and np_value is not None:
        rows.append(BoundReport("random_graph", {"eps": eps, "np": np_value}, eps * np_value / 41,
                                "G(n, p) with np in [1 - eps, n^(1-eps)]: lbox >= eps np / 41 a.a.s."))
    if m is not None and m >= 2:
        shape = math.sqrt(m) / math.log2(m)
        rows.append(BoundReport("edges", {"m": m}, None,
                                "almost all graphs with m = Theta(n^2) edges: lbox = Omega(sqrt(m) / log m)",
                                f"order of growth only, no constant; sqrt(m) / log m = {shape:.4f}"))
    if g is not None and g >= 2:
        shape = math.sqrt(g) / math.log2(g)
        rows.append(BoundReport("genus", {"g": g}, None,
                                "almost all graphs with Euler genus g = Theta(n^2): lbox = Omega(sqrt(g) / log g)",
                                f"order of growth only, no constant; sqrt(g) / log g = {shape:.4f}"))
    return rows


def chernoff_upper_tail(mu: float, delta: float) -> float:
    """P(X >= (1 + delta) mu) <= exp(-delta^2 mu / (2 + delta)) for a binomial X of mean mu."""
    if mu < 0 or delta < 0:
        raise DomainError("need mu >= 0 and delta >= 0")
    return math.exp(-delta * delta * mu / (2 + delta))


def chernoff_lower_tail(mu: float, delta: float) -> float:
    """P(X <= (1 - delta) mu) <= exp(-delta^2 mu / 2), delta in [0, 1]."""
    if mu < 0 or not 0 <= delta <= 1:
        raise DomainError("need mu >= 0 and delta in [0, 1]")
    return math.exp(-delta * delta * mu / 2)


def lll_partition_report(max_degree: int, q: int) -> LllReport:
    """
    Every event "v has too many neighbours in block union j" has probability
    at most exp(-delta^2 D / 3q) = D^(-16/3) with delta = 4 sqrt(q ln D / D), and
    depends on fewer than q (q + 1)(1 + D + D^2) <= 4 D^3 others. The local
    lemma applies when the event bound is at most 1 / (4 d).

    Raises:
        DomainError: If D < 2 or q < 2.
    """
    if max_degree < 2 or q < 2:
        raise DomainError("need D >= 2 and q >= 2")
    D = max_degree
    delta = 4 * math.sqrt(q * math.log(D) / D)
    event = math.exp(-delta * delta * D / (3 * q))
    dependency = q * (q + 1) * (1 + D + D * D)
    requirement = 1 / (4 * dependency)
    notes = []
    if delta > 1:
        notes.append("delta > 1: the Chernoff estimate used needs delta <= 1")
    if dependency > 4 * D ** 3:
        notes.append("dependency exceeds 4 D^3: q is too large for D")
    return LllReport(D, q, delta, event, dependency, requirement, event <= requirement and delta <= 1, notes)


def log_star(t: float) -> int:
    """Number of binary logarithms needed to bring t down to at most 1."""
    k = 0
    while t > 1:
        t = math.log2(t)
        k += 1
    return k


def prior_degree_bound(max_degree: int) -> BoundReport:
    """The earlier upper bound 2^(9 log* D) D, as a comparison row."""
    if max_degree < 1:
        raise DomainError("maximum degree must be positive")
    value = 2 ** (9 * log_star(max_degree)) * max_degree
    return BoundReport("prior_degree_upper", {"max_degree": max_degree}, float(value),
                       "earlier bound on graphs of maximum degree D: lbox <= 2^(9 log* D) D")


def regular_graph_count_log2(n: int, max_degree: int) -> BoundReport:
    """log2 of the lower bound (n / e^2 D)^(D n / 2) on labelled D-regular n-vertex graphs, 1 <= D <= n - 2."""
    if not 1 <= max_degree <= n - 2:
        raise DomainError(f"need 1 <= D <= n - 2, got D = {max_degree}, n = {n}")
    value = max_degree * n * math.log2(n / (math.e ** 2 * max_degree)) / 2
    return BoundReport("regular_count_log2", {"n": n, "max_degree": max_degree}, value,
                       "labelled D-regular n-vertex graphs: at least (n / e^2 D)^(Dn/2)")


def bounds_frame(reports: list) -> pd.DataFrame:
    rows = [{"name": r.name,
             "inputs": ", ".join(f"{k}={v}" for k, v in r.inputs.items()),
             "value": r.value,
             "citation": r.citation,
             "note": r.note or ""} for r in reports]
    return pd.DataFrame(rows, columns=["name", "inputs", "value", "citation", "note"])

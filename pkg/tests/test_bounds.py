import math

import pytest

from localbox.bounds.counting_bounds import (bounds_frame, chernoff_lower_tail, chernoff_upper_tail, counting_upper,
                                             lll_partition_report, log_star, lower_bound_table, prior_degree_bound,
                                             regular_graph_count_log2)
from localbox.errors import DomainError


@pytest.mark.parametrize("n, d, expected", [(4, 2, 104), (8, 2, 256), (2, 2, 40)])
def test_counting_upper(n, d, expected):
    "n d (3 log n + 7 log d)"
    assert counting_upper(n, d).value == pytest.approx(expected)


@pytest.mark.parametrize("n, d", [(1, 2), (4, 1)])
def test_counting_upper_domain(n, d):
    "Both parameters at least two"
    with pytest.raises(DomainError):
        counting_upper(n, d)


def test_lower_bound_rows():
    "Rows appear for the given parameters only"
    rows = {r.name: r for r in lower_bound_table(n=1024, max_degree=42, eps=0.5, np_value=100)}
    assert set(rows) == {"all_graphs", "max_degree", "random_graph"}
    assert rows["all_graphs"].value == pytest.approx(1024 / 210)
    assert rows["max_degree"].value == pytest.approx(1.0)
    assert rows["random_graph"].value == pytest.approx(50 / 41)
    assert lower_bound_table() == []


def test_growth_rows_have_no_value():
    "Bounds known up to a constant carry a note instead"
    rows = lower_bound_table(m=10000, g=10000)
    assert [r.name for r in rows] == ["edges", "genus"]
    assert all(r.value is None and "no constant" in r.note for r in rows)


@pytest.mark.parametrize("kwargs", [{"n": 0}, {"eps": 1.0}, {"eps": 0}, {"m": -3}])
def test_lower_bound_domain(kwargs):
    "Parameters must be positive, eps strictly between 0 and 1"
    with pytest.raises(DomainError):
        lower_bound_table(**kwargs)


def test_chernoff():
    "Tail formulas and their domains"
    assert chernoff_upper_tail(10, 1) == pytest.approx(math.exp(-10 / 3))
    assert chernoff_lower_tail(10, 0.5) == pytest.approx(math.exp(-1.25))
    assert chernoff_upper_tail(0, 2) == 1.0
    with pytest.raises(DomainError):
        chernoff_lower_tail(10, 1.5)
    with pytest.raises(DomainError):
        chernoff_upper_tail(-1, 0.5)


@pytest.mark.parametrize("D", [100, 10 ** 4, 10 ** 6])
def test_lll_event_bound(D):
    "The event bound equals D^(-16/3)"
    report = lll_partition_report(D, 2)
    assert report.event_bound == pytest.approx(D ** (-16 / 3))
    assert report.dependency == 6 * (1 + D + D * D)


def test_lll_notes():
    "Small D breaks the Chernoff range, large D satisfies the lemma"
    small = lll_partition_report(10, 3)
    assert small.delta > 1 and not small.satisfied
    assert small.notes
    large = lll_partition_report(10 ** 6, 2)
    assert large.delta < 1
    assert large.satisfied
    with pytest.raises(DomainError):
        lll_partition_report(1, 2)


@pytest.mark.parametrize("t, expected", [(1, 0), (2, 1), (4, 2), (16, 3), (65536, 4), (0.5, 0)])
def test_log_star(t, expected):
    "Iterated binary logarithm"
    assert log_star(t) == expected


def test_prior_degree_bound():
    "2^(9 log* D) D"
    assert prior_degree_bound(16).value == 2 ** 27 * 16
    with pytest.raises(DomainError):
        prior_degree_bound(0)


def test_regular_graph_count():
    "(D n / 2) log(n / e^2 D)"
    report = regular_graph_count_log2(100, 3)
    assert report.value == pytest.approx(150 * math.log2(100 / (math.e ** 2 * 3)))
    for n, D in [(10, 0), (10, 9)]:
        with pytest.raises(DomainError):
            regular_graph_count_log2(n, D)


def test_bounds_frame():
    "One row per report with joined inputs"
    frame = bounds_frame([counting_upper(4, 2), prior_degree_bound(16)])
    assert list(frame.columns) == ["name", "inputs", "value", "citation", "note"]
    assert frame.loc[0, "inputs"] == "n=4, d=2"
    assert frame.loc[1, "note"] == ""

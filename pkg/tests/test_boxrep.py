from fractions import Fraction

import pytest
from hypothesis import given, settings

from conftest import cycle, path, representations
from localbox.boxes.boxrep import (UNIVERSAL, Interval, LocalBox, Representation, add_vertex_dim, as_interval,
                                   intersect_reps, is_normalized, load_representation, meets, normalize,
                                   pad_universal, prune_dims, realize, representation_from_text,
                                   representation_to_text, restrict, save_representation, trim_universal,
                                   verify)
from localbox.errors import DomainError, FormatError, ValidationError
from localbox.graphs.graph_core import Graph


def c4_rep() -> Representation:
    "Two dimensions, every vertex local in one of them"
    return Representation(4, 2, (
        LocalBox({0: (0, 0)}),
        LocalBox({1: (0, 0)}),
        LocalBox({0: (1, 1)}),
        LocalBox({1: (1, 1)}),
    ))


def test_intervals():
    "Closed intervals meet at shared endpoints"
    assert Interval(0, 1).meets(Interval(1, 2))
    assert not Interval(0, 1).meets(Interval(2, 3))
    assert Interval(Fraction(1, 2), 1).shifted(1) == Interval(Fraction(3, 2), 2)
    with pytest.raises(DomainError):
        Interval(2, 1)
    assert as_interval(None) is None
    assert as_interval((0, 3)) == Interval(0, 3)
    assert meets(None, Interval(5, 5))


def test_local_box():
    "Boxes keep only bounded dimensions, sorted"
    box = LocalBox({3: (0, 1), 1: None, 0: Interval(2, 2)})
    assert box.dims() == (0, 3)
    assert box.locality == 2
    assert box.get(1) is None
    assert UNIVERSAL.intersects(box)
    assert not box.intersects(LocalBox({3: (2, 4)}))
    with pytest.raises(DomainError):
        LocalBox({-1: (0, 0)})


def test_representation_shape_checked():
    "Box counts and dimension indices are validated"
    with pytest.raises(DomainError):
        Representation(2, 1, (UNIVERSAL,))
    with pytest.raises(DomainError):
        Representation(1, 1, (LocalBox({1: (0, 0)}),))


def test_realize_and_verify(c4):
    "A hand-made representation of C4"
    R = c4_rep()
    assert realize(R) == Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    report = verify(R, c4, 1)
    assert report.ok and report.max_locality == 1
    assert R.localities() == [1, 1, 1, 1]
    assert R.column(0) == [Interval(0, 0), None, Interval(1, 1), None]


def test_verify_violations(c4):
    "Verification names the first violation"
    report = verify(c4_rep(), path(4), 1)
    assert not report.ok
    assert report.kind == "extra_edge" and report.vertices == (0, 3)
    report = verify(c4_rep(), Graph.complete(4), 1)
    assert report.kind == "missing_edge" and report.vertices == (0, 2)
    R = Representation(4, 2, (LocalBox({0: (0, 0), 1: (0, 0)}),) + c4_rep().boxes[1:])
    report = verify(R, c4, 1)
    assert report.kind == "over_local" and report.vertices == (0,)
    with pytest.raises(DomainError):
        verify(c4_rep(), cycle(5), 2)


@settings(max_examples=80, deadline=None)
@given(representations(max_n=7, fractions=True))
def test_normalize_keeps_graph(R):
    "Normalization keeps the realized graph and gives ranks in [1, 2n]"
    N = normalize(R)
    assert realize(N) == realize(R)
    assert is_normalized(N)
    assert N.localities() == R.localities()


@settings(max_examples=80, deadline=None)
@given(representations(max_n=7, max_dims=5))
def test_trim_and_prune_keep_graph(R):
    "Trimming universal intervals and pruning dimensions keep the realized graph"
    T = trim_universal(R)
    assert realize(T) == realize(R)
    assert all(a <= b for a, b in zip(T.localities(), R.localities()))
    P = prune_dims(T)
    assert realize(P) == realize(R)
    assert {d for box in P.boxes for d in box.dims()} == set(range(P.dims))


def test_is_normalized():
    "Fractional or out-of-range endpoints are not normalized"
    assert is_normalized(c4_rep()) is False
    assert is_normalized(Representation(1, 1, (LocalBox({0: (1, 2)}),)))
    assert not is_normalized(Representation(1, 1, (LocalBox({0: (1, 3)}),)))
    assert not is_normalized(Representation(2, 1, (LocalBox({0: (Fraction(3, 2), 2)}), UNIVERSAL)))


@pytest.mark.parametrize("lean", [False, True])
def test_add_vertex_dim(lean):
    "A new vertex gets its own dimension"
    G = cycle(5)
    rest, labels = G.induced(range(1, 5))
    base = Representation(4, 1, tuple(LocalBox({0: (i, i + 1)}) for i in range(4)))
    assert realize(base) == rest
    R = add_vertex_dim(base, 0, G.neighbors(0), lean=lean)
    assert R.dims == 2
    assert realize(R) == G
    assert R.boxes[0].locality == 1
    with pytest.raises(DomainError):
        add_vertex_dim(base, 7, [])


def test_pad_universal():
    "Vertices outside the piece become universal"
    G = path(4)
    piece = Representation(2, 1, (LocalBox({0: (0, 0)}), LocalBox({0: (1, 1)})))
    R = pad_universal(piece, G, [0, 3])
    assert R.boxes[1] == UNIVERSAL and R.boxes[2] == UNIVERSAL
    assert not R.boxes[0].intersects(R.boxes[3])
    with pytest.raises(ValidationError):
        pad_universal(piece, G, [0, 1])


def test_intersect_and_restrict(c4):
    "Concatenated dimensions realize the intersection of the graphs"
    first = Representation(4, 1, (LocalBox({0: (0, 0)}), UNIVERSAL, LocalBox({0: (1, 1)}), UNIVERSAL))
    second = Representation(4, 1, (UNIVERSAL, LocalBox({0: (0, 0)}), UNIVERSAL, LocalBox({0: (1, 1)})))
    R = intersect_reps([first, second])
    assert R.dims == 2
    assert realize(R) == c4
    sub = restrict(R, [3, 0, 1])
    assert sub.n == 3 and sub.dims == 2
    assert realize(sub) == c4.induced([0, 1, 3])[0]
    with pytest.raises(DomainError):
        intersect_reps([])
    with pytest.raises(DomainError):
        intersect_reps([first, Representation(1, 0, (UNIVERSAL,))])


def test_text_format(tmp_path):
    "Text documents keep rational endpoints"
    R = Representation(2, 2, (LocalBox({0: (Fraction(1, 2), 2)}), LocalBox({1: (0, 0)})))
    assert representation_from_text(representation_to_text(R)) == R
    save_representation(R, tmp_path / "r.rep")
    assert load_representation(tmp_path / "r.rep") == R


@pytest.mark.parametrize("text", ["{", '{"n": 1}', '{"n": 1, "dims": 1, "boxes": [[[0, "x", 1]]]}',
                                  '{"n": 1, "dims": 1, "boxes": [[[0, 2, 1]]]}',
                                  '{"n": 1, "dims": 1, "boxes": [[[0, true, 1]]]}'])
def test_text_format_errors(text):
    "Malformed documents raise format errors"
    with pytest.raises(FormatError):
        representation_from_text(text)

import math

import pytest

from localbox.constructions.steiner import (PRIME_WINDOW_START, SteinerSystem, affine_plane,
                                            complete_graph_steiner, prime_in_window, prime_square_in_window,
                                            save_steiner, steiner_from_text, steiner_to_text, verify_steiner)
from localbox.errors import FormatError, PreconditionError


@pytest.mark.parametrize("q", [2, 3, 5, 7])
def test_affine_planes(q):
    "Affine planes are (2, q, q^2) systems with q + 1 lines per point"
    S = affine_plane(q)
    assert (S.s, S.t, S.k) == (q * q, 2, q)
    assert len(S.blocks) == q * q + q
    assert S.replication() == q + 1
    assert verify_steiner(S).ok


def test_affine_plane_needs_prime():
    "Prime powers are refused"
    with pytest.raises(PreconditionError):
        affine_plane(4)


def test_complete_graph_system():
    "The edges of K_l"
    S = complete_graph_steiner(5)
    assert len(S.blocks) == 10 and S.replication() == 4
    assert verify_steiner(S).ok
    with pytest.raises(PreconditionError):
        complete_graph_steiner(1)


@pytest.mark.parametrize("blocks, fragment", [
    (((0, 1), (0, 1), (2, 3), (0, 2), (1, 3), (0, 3)), "lies in blocks"),
    (((0, 1), (2, 3), (0, 2), (1, 3), (0, 3)), "lies in no block"),
    (((0, 1, 2), (2, 3), (0, 2), (1, 3), (0, 3), (1, 2)), "distinct points"),
    (((0, 4), (2, 3), (0, 2), (1, 3), (0, 3), (1, 2)), "outside"),
])
def test_verify_steiner_violations(blocks, fragment):
    "Broken systems name their first violation"
    check = verify_steiner(SteinerSystem(4, 2, 2, blocks))
    assert not check.ok
    assert fragment in check.violation


def test_prime_windows():
    "Primes in the short windows above 3275"
    assert prime_in_window(PRIME_WINDOW_START) == 3299
    assert prime_in_window(10000) == 10007
    q = prime_square_in_window(PRIME_WINDOW_START ** 2)
    assert q == 3299
    t = 20_000_000
    q = prime_square_in_window(t)
    assert t <= q * q <= t + 7 * t / math.log(t) ** 2
    with pytest.raises(PreconditionError):
        prime_in_window(3274)
    with pytest.raises(PreconditionError):
        prime_square_in_window(10_000)


def test_text_format(tmp_path):
    "Steiner systems survive the text format"
    S = affine_plane(3)
    assert steiner_from_text(steiner_to_text(S)) == S
    save_steiner(S, tmp_path / "plane.json")
    assert steiner_from_text((tmp_path / "plane.json").read_text()) == S
    with pytest.raises(FormatError):
        steiner_from_text('{"s": 4}')

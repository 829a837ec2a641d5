from pathlib import Path

import pandas as pd
import pytest

import lbox_cli
from conftest import cycle, path
from lbox_cli import EXIT_FAILED, EXIT_OK, EXIT_USAGE, run, write_atomic
from localbox.boxes.boxrep import (Representation, UNIVERSAL, load_representation, normalize, prune_dims, realize,
                                   save_representation, verify)
from localbox.coloring.shift_graphs import shift_complement_rep
from localbox.graphs.graph_core import write_graph_file


@pytest.fixture
def c5_file(tmp_path) -> Path:
    target = tmp_path / "c5.el"
    write_graph_file(cycle(5), target)
    return target


def test_exact_writes_certificate(c5_file, capsys):
    "The value is printed and the certificate lands beside the graph"
    assert run(["exact", "lbox", str(c5_file)]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "2"
    certificate = c5_file.with_name("c5.lbox.rep")
    assert lines[1] == str(certificate)
    assert verify(load_representation(certificate), cycle(5), 2).ok


def test_exact_chromatic(c5_file, capsys):
    "Colors go to a CSV"
    assert run(["exact", "chi", str(c5_file)]) == EXIT_OK
    assert capsys.readouterr().out.splitlines()[0] == "3"
    frame = pd.read_csv(c5_file.with_name("c5.chi.csv"))
    assert list(frame.columns) == ["vertex", "color"]
    assert frame["color"].nunique() == 3


def test_verify_exit_codes(c5_file, tmp_path):
    "A certificate verifies at its locality and fails below it"
    out = tmp_path / "c5.rep"
    assert run(["exact", "lbox", str(c5_file), "--out", str(out)]) == EXIT_OK
    assert run(["verify", str(c5_file), str(out), "--d", "2"]) == EXIT_OK
    assert run(["verify", str(c5_file), str(out), "--d", "1"]) == EXIT_FAILED


def test_bad_input_is_a_usage_error(c5_file, tmp_path):
    "Unreadable files and missing arguments exit with 2"
    broken = tmp_path / "broken.rep"
    broken.write_text("not json")
    assert run(["verify", str(c5_file), str(broken), "--d", "2"]) == EXIT_USAGE
    assert run(["verify", str(c5_file), str(tmp_path / "missing.rep"), "--d", "2"]) == EXIT_USAGE
    assert run(["verify", str(c5_file)]) == EXIT_USAGE
    assert run(["frobnicate"]) == EXIT_USAGE


@pytest.mark.parametrize("argv", [
    ["construct", "gnp", "--n", "50", "--np", "1", "--out", "x.rep"],
    ["construct", "degree", "g.el", "--out", "x.rep"],
    ["mc", "multicyclic", "--n", "50", "--c", "0.5", "--trials", "10"],
])
def test_randomized_commands_need_a_seed(argv):
    "No seed, no run"
    assert run(argv) == EXIT_USAGE


def test_construct_shift(tmp_path, capsys):
    "Shift complement representation with its graph"
    out, graph_out = tmp_path / "s5.rep", tmp_path / "s5.g6"
    assert run(["construct", "shift", "--n", "5", "--out", str(out), "--graph-out", str(graph_out)]) == EXIT_OK
    assert "locality 2" in capsys.readouterr().out
    assert run(["verify", str(graph_out), str(out), "--d", "2"]) == EXIT_OK


def test_construct_gnp(tmp_path):
    "The sampled graph is written next to the representation"
    out = tmp_path / "g.rep"
    assert run(["construct", "gnp", "--n", "60", "--np", "1", "--seed", "4", "--max-retries", "30",
                "--out", str(out)]) == EXIT_OK
    assert run(["verify", str(out.with_suffix(".el")), str(out), "--d", "6"]) == EXIT_OK


def test_failed_construction_is_not_written(tmp_path, monkeypatch):
    "A representation that does not verify never reaches the output file"
    graph = tmp_path / "p5.el"
    write_graph_file(path(5), graph)
    monkeypatch.setattr(lbox_cli, "tree_two_box", lambda G: Representation(G.n, 0, (UNIVERSAL,) * G.n))
    out = tmp_path / "p5.rep"
    assert run(["construct", "tree2box", str(graph), "--out", str(out)]) == EXIT_FAILED
    assert not out.exists()


def test_construct_needs_graph():
    "Graph-based constructions without a graph"
    assert run(["construct", "tree2box", "--out", "x.rep"]) == EXIT_USAGE


def test_tree_and_coloring(tmp_path, capsys):
    "Two boxes for a path, then an 18-color bound coloring"
    graph = tmp_path / "p7.el"
    write_graph_file(path(7), graph)
    rep = tmp_path / "p7.rep"
    assert run(["construct", "tree2box", str(graph), "--out", str(rep)]) == EXIT_OK
    assert run(["color", "tf", str(graph), str(rep)]) == EXIT_OK
    output = capsys.readouterr().out
    assert "proper=True" in output
    frame = pd.read_csv(graph.with_name("p7.tf.csv"))
    assert len(frame) == 7


def test_color_rejects_triangles(tmp_path):
    "The triangle-free coloring refuses K3"
    graph = tmp_path / "k3.el"
    graph.write_text("# n 3\n0 1\n1 2\n0 2\n")
    rep = tmp_path / "k3.rep"
    assert run(["exact", "lbox", str(graph), "--out", str(rep)]) == EXIT_OK
    assert run(["color", "tf", str(graph), str(rep)]) == EXIT_USAGE


def test_monte_carlo(tmp_path, capsys):
    "CSV on stdout and on disk"
    out = tmp_path / "mc.csv"
    code = run(["mc", "multicyclic", "--n", "100", "--c", "0.3", "0.5", "--trials", "200", "--seed", "1",
                "--out", str(out)])
    assert code in (EXIT_OK, EXIT_FAILED)
    assert capsys.readouterr().out.startswith("n,c,trials,empirical,bound,sigma")
    assert len(pd.read_csv(out)) == 2


def test_bounds_table(capsys):
    "Counting bound and comparison rows"
    assert run(["bounds", "table", "--n", "4", "--d", "2", "--max-degree", "2"]) == EXIT_OK
    output = capsys.readouterr().out
    assert "counting_upper_log2" in output
    assert "prior_degree_upper" in output
    assert "regular_count_log2" in output
    assert run(["bounds", "table", "--n", "1", "--d", "2"]) == EXIT_USAGE


def test_steiner(tmp_path, capsys):
    "Affine planes of prime order only"
    assert run(["steiner", "affine", "--q", "3", "--out", str(tmp_path / "ag3.json")]) == EXIT_OK
    assert "(2, 3, 9) system with 12 blocks, replication 4" in capsys.readouterr().out
    assert (tmp_path / "ag3.json").exists()
    assert run(["steiner", "affine", "--q", "4"]) == EXIT_USAGE


def test_codec_round_trip(tmp_path):
    "Encode to bytes and decode back to the same graph"
    R = normalize(prune_dims(shift_complement_rep(4)))
    source = tmp_path / "s4.rep"
    save_representation(R, source)
    assert run(["codec", "encode", str(source), "--d", "2"]) == EXIT_OK
    assert run(["codec", "decode", str(source.with_suffix(".bin")), "--out", str(tmp_path / "back.rep")]) == EXIT_OK
    assert realize(load_representation(tmp_path / "back.rep")) == realize(R)
    assert run(["codec", "encode", str(source)]) == EXIT_USAGE
    assert run(["codec", "encode", str(source), "--d", "1"]) == EXIT_USAGE


def test_write_atomic(tmp_path):
    "Creates parent folders and leaves no temporary file behind"
    target = write_atomic(tmp_path / "deep" / "out.txt", "hello")
    assert target.read_text() == "hello"
    assert [p.name for p in target.parent.iterdir()] == ["out.txt"]

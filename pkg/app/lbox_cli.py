'''
Command line interface of the localbox toolkit.

    exact lbox|box|chi GRAPH            exact value, certificate written beside the graph
    verify GRAPH REP --d D              checks a representation
    construct gcreg|gnp|degree|edges|shift|tree2box ...
    color lbox2|tf|type11 GRAPH REP     coloring CSV beside the graph
    mc multicyclic --n .. --c .. --trials T --seed S
    bounds table [--n --d --max-degree --eps --np --m --g]
    steiner affine --q Q
    codec encode REP --d D | codec decode BIN

Exit status: 0 on success, 1 when a verification fails, 2 on a usage or
input error. Randomized subcommands require an explicit --seed.

(c) 2025
'''

import argparse
import os
import sys
import tempfile
from pathlib import Path

import pandas as pd

from localbox.bounds.counting_bounds import (bounds_frame, counting_upper, lower_bound_table,
                                             prior_degree_bound, regular_graph_count_log2)
from localbox.boxes.boxrep import load_representation, representation_to_text, verify
from localbox.boxes.codec import bits_to_bytes, bytes_to_bits, decode, encode
from localbox.coloring.lbox2_coloring import (Type11Rep, coloring_frame, coloring_summary, lbox2_color,
                                              tf_lbox2_color, type11_color)
from localbox.coloring.shift_graphs import shift_complement_rep, shift_graph
from localbox.config import load_config_file, silent
from localbox.constructions.compose import lbox_by_degree, lbox_by_edges
from localbox.constructions.girth5 import gcreg_value
from localbox.constructions.gnp import gnp_rep, monte_carlo_frame, multicyclic_grid, sample_gnp
from localbox.constructions.steiner import affine_plane, steiner_to_text, verify_steiner
from localbox.errors import AuditError, LocalBoxError, ValidationError
from localbox.graphs.graph_core import complement, emit_graph, graph_format_for, read_graph_file
from localbox.graphs.interval_algs import tree_two_box
from localbox.solvers.exact_solver import box_exact, chromatic_exact, lbox_exact

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


# -----------------------------FUNCTIONS----------------------------------

def write_atomic(path: str | Path, data: bytes | str) -> Path:
    """Writes to a temporary file in the target folder, then renames it over `path`."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    payload = data.encode("utf-8") if isinstance(data, str) else data
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.")
    try:
        with os.fdopen(fd, "wb") as file:
            file.write(payload)
        os.replace(tmp, path)
    except BaseException:
        Path(tmp).unlink(missing_ok=True)
        raise
    return path


def _beside(graph_path: str, suffix: str) -> Path:
    path = Path(graph_path)
    return path.with_name(path.stem + suffix)


def _write_rep(R, path) -> Path:
    return write_atomic(path, representation_to_text(R) + "\n")


def _checked(R, G, d: int, out: Path) -> int:
    """Re-verifies a constructed representation and writes it only when it passes."""
    report = verify(R, G, d)
    if not report.ok:
        print(f"verification failed: {report.first_violation}")
        return EXIT_FAILED
    _write_rep(R, out)
    print(f"locality {R.max_locality()} (claimed {d}), representation written to {out}")
    return EXIT_OK


def cmd_exact(args, message) -> int:
    G = read_graph_file(args.graph)
    if args.quantity == "chi":
        result = chromatic_exact(G, time_budget=args.time_budget, message=message)
        out = Path(args.out) if args.out else _beside(args.graph, ".chi.csv")
        columns = load_config_file()["output"]["coloring_columns"]
        frame = pd.DataFrame(list(enumerate(result.colors)), columns=columns)
        write_atomic(out, frame.to_csv(index=False))
        value = result.value if result.status == "exact" else f"unknown in [{result.lower_bound}, {result.upper_bound}]"
        print(value)
        print(out)
        return EXIT_OK

    solver = lbox_exact if args.quantity == "lbox" else box_exact
    result = solver(G, time_budget=args.time_budget, message=message)
    out = Path(args.out) if args.out else _beside(args.graph, f".{args.quantity}.rep")
    if result.exact:
        print(result.value)
    else:
        print(f"unknown in [{result.lower_bound}, {result.upper_bound}]")
    if result.certificate is not None:
        _write_rep(result.certificate, out)
        print(out)
    message(result.lower_bound_witness)
    return EXIT_OK


def cmd_verify(args, message) -> int:
    G = read_graph_file(args.graph)
    R = load_representation(args.rep)
    report = verify(R, G, args.d)
    if report.ok:
        print(f"ok: {args.d}-local representation, maximum locality {report.max_locality}")
        return EXIT_OK
    print(f"violation ({report.kind}): {report.first_violation}")
    return EXIT_FAILED


def cmd_construct(args, message) -> int:
    out = Path(args.out)
    kind = args.kind
    if kind == "shift":
        R = shift_complement_rep(args.n)
        G = complement(shift_graph(args.n))
        if args.graph_out:
            write_atomic(args.graph_out, emit_graph(G, graph_format_for(args.graph_out)))
        return _checked(R, G, 2, out)

    if kind == "gnp":
        if args.graph:
            G = read_graph_file(args.graph)
        else:
            G = sample_gnp(args.n, args.np / args.n, args.seed).graph
            graph_out = Path(args.graph_out) if args.graph_out else out.with_suffix(".el")
            write_atomic(graph_out, emit_graph(G, graph_format_for(graph_out)))
        result = gnp_rep(G, args.np, args.eps, seed=args.seed, max_retries=args.max_retries, message=message)
        if not result.success:
            print(f"failed after {result.attempts} partitions, classes {result.offending_pair} "
                  f"span a multicyclic component")
            return EXIT_FAILED
        return _checked(result.representation, G, result.bound, out)

    if args.graph is None:
        raise _UsageError(f"construct {kind} needs a graph file")
    G = read_graph_file(args.graph)
    if kind == "gcreg":
        result = gcreg_value(G, message)
        message(result.lower_witness)
        R, claimed = result.upper, result.value
    elif kind in ("degree", "edges"):
        driver = lbox_by_degree if kind == "degree" else lbox_by_edges
        result = driver(G, q_override=args.q, seed=args.seed, message=message)
        for line in result.strategy_log:
            message(line)
        R, claimed = result.representation, result.locality
    else:
        R, claimed = tree_two_box(G), 2
    return _checked(R, G, claimed, out)


def cmd_color(args, message) -> int:
    G = read_graph_file(args.graph)
    R = load_representation(args.rep)
    if args.kind == "tf":
        result = tf_lbox2_color(G, R, message)
    elif args.kind == "lbox2":
        result = lbox2_color(G, R, message)
    else:
        result = type11_color(G, Type11Rep(R, args.first_dim), message)
    out = Path(args.out) if args.out else _beside(args.graph, f".{args.kind}.csv")
    write_atomic(out, coloring_frame(result).to_csv(index=False))
    summary = coloring_summary(result)
    print(", ".join(f"{k}={v}" for k, v in summary.items()))
    print(out)
    return EXIT_OK


def cmd_mc(args, message) -> int:
    reports = multicyclic_grid(args.n, args.c, args.trials, seed=args.seed, message=message)
    frame = monte_carlo_frame(reports)
    text = frame.to_csv(index=False)
    if args.out:
        write_atomic(args.out, text)
    print(text, end="")
    exceeded = [r for r in reports if r.empirical > r.bound + 3 * r.sigma]
    return EXIT_FAILED if exceeded else EXIT_OK


def cmd_bounds(args, message) -> int:
    reports = []
    if args.n is not None and args.d is not None:
        reports.append(counting_upper(args.n, args.d))
    reports += lower_bound_table(n=args.n, max_degree=args.max_degree, eps=args.eps,
                                 np_value=args.np, m=args.m, g=args.g)
    if args.max_degree is not None:
        reports.append(prior_degree_bound(args.max_degree))
        if args.n is not None and 1 <= args.max_degree <= args.n - 2:
            reports.append(regular_graph_count_log2(args.n, args.max_degree))
    text = bounds_frame(reports).to_csv(index=False)
    if args.out:
        write_atomic(args.out, text)
    print(text, end="")
    return EXIT_OK


def cmd_steiner(args, message) -> int:
    S = affine_plane(args.q)
    check = verify_steiner(S)
    if args.out:
        write_atomic(args.out, steiner_to_text(S) + "\n")
    if not check.ok:
        print(f"invalid system: {check.violation}")
        return EXIT_FAILED
    print(f"({S.t}, {S.k}, {S.s}) system with {len(S.blocks)} blocks, replication {S.replication()}")
    return EXIT_OK


def cmd_codec(args, message) -> int:
    if args.action == "encode":
        R = load_representation(args.path)
        bits = encode(R, args.d)
        out = Path(args.out) if args.out else Path(args.path).with_suffix(".bin")
        write_atomic(out, bits_to_bytes(bits))
        print(f"{len(bits)} bits written to {out}")
        return EXIT_OK
    R = decode(bytes_to_bits(Path(args.path).read_bytes()))
    out = Path(args.out) if args.out else Path(args.path).with_suffix(".rep")
    _write_rep(R, out)
    print(f"{R.n} vertices, {R.dims} dimensions written to {out}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="lbox", description="Local boxicity toolkit")
    parser.add_argument("--verbose", action="store_true", help="progress messages on stderr")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("exact", help="exact lbox, box or chromatic number")
    p.add_argument("quantity", choices=["lbox", "box", "chi"])
    p.add_argument("graph")
    p.add_argument("--out")
    p.add_argument("--time-budget", type=float)
    p.set_defaults(handler=cmd_exact)

    p = sub.add_parser("verify", help="verify a representation")
    p.add_argument("graph")
    p.add_argument("rep")
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("construct", help="build a verified representation")
    p.add_argument("kind", choices=["gcreg", "gnp", "degree", "edges", "shift", "tree2box"])
    p.add_argument("graph", nargs="?")
    p.add_argument("--out", required=True)
    p.add_argument("--graph-out")
    p.add_argument("--n", type=int)
    p.add_argument("--np", type=float)
    p.add_argument("--eps", type=float, default=0.5)
    p.add_argument("--q", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--max-retries", type=int)
    p.set_defaults(handler=cmd_construct)

    p = sub.add_parser("color", help="color a graph from a 2-local representation")
    p.add_argument("kind", choices=["lbox2", "tf", "type11"])
    p.add_argument("graph")
    p.add_argument("rep")
    p.add_argument("--first-dim", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(handler=cmd_color)

    p = sub.add_parser("mc", help="Monte Carlo census of multicyclic components")
    p.add_argument("experiment", choices=["multicyclic"])
    p.add_argument("--n", type=int, nargs="+", required=True)
    p.add_argument("--c", type=float, nargs="+", required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(handler=cmd_mc)

    p = sub.add_parser("bounds", help="table of closed-form bounds")
    p.add_argument("table", choices=["table"])
    for name, kind in (("--n", int), ("--d", int), ("--max-degree", int), ("--eps", float),
                       ("--np", float), ("--m", int), ("--g", int)):
        p.add_argument(name, type=kind)
    p.add_argument("--out")
    p.set_defaults(handler=cmd_bounds)

    p = sub.add_parser("steiner", help="Steiner systems")
    p.add_argument("family", choices=["affine"])
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(handler=cmd_steiner)

    p = sub.add_parser("codec", help="binary codec for normalized representations")
    p.add_argument("action", choices=["encode", "decode"])
    p.add_argument("path")
    p.add_argument("--d", type=int)
    p.add_argument("--out")
    p.set_defaults(handler=cmd_codec)
    return parser


def _check_usage(args) -> None:
    if args.command == "construct":
        if args.kind in ("gnp", "degree", "edges") and args.seed is None:
            raise _UsageError(f"construct {args.kind} requires --seed")
        if args.kind == "shift" and args.n is None:
            raise _UsageError("construct shift requires --n")
        if args.kind == "gnp" and (args.np is None or (args.graph is None and args.n is None)):
            raise _UsageError("construct gnp requires --np and either a graph or --n")
    if args.command == "codec" and args.action == "encode" and args.d is None:
        raise _UsageError("codec encode requires --d")


def run(argv=None) -> int:
    """Runs one command and returns its exit status."""
    try:
        args = build_parser().parse_args(argv)
        _check_usage(args)
    except _UsageError as err:
        print(f"lbox: error: {err}", file=sys.stderr)
        return EXIT_USAGE

    message = (lambda msg: print(msg, file=sys.stderr)) if args.verbose else silent
    try:
        return args.handler(args, message)
    except _UsageError as err:
        print(f"lbox: error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except (ValidationError, AuditError) as err:
        print(f"lbox: verification failed: {err}", file=sys.stderr)
        return EXIT_FAILED
    except (LocalBoxError, OSError) as err:
        print(f"lbox: error: {err}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(run())

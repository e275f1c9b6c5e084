"""Command-line front end.

Exit codes: 0 success, 1 computation or precondition error, 2 usage error,
3 verification failure.
"""

from __future__ import annotations

import argparse
import logging
import sys
from typing import TextIO

from . import explore, generators
from .errors import ConnForceError
from .exact import (
    connected_forcing_number,
    connected_forcing_spread,
    forcing_number,
    forcing_spread,
    minimum_connected_forcing_sets,
    minimum_forcing_sets,
)
from .forcing import forcing_closure
from .graph import Graph, format_edge_list, parse_edge_list
from .structural import (
    detect_single_clique,
    single_clique_connected_forcing,
    tree_connected_forcing,
)
from .structure import compute_r_sets, is_path_graph, is_tree
from .verify import SUITES, run_suite


def _read_graph(path: str, stdin: TextIO) -> Graph:
    if path == "-":
        return parse_edge_list(stdin.read())
    try:
        with open(path, encoding="ascii") as fh:
            return parse_edge_list(fh.read())
    except OSError as exc:
        raise ConnForceError(f"cannot read {path}: {exc.strerror}") from None


def _structural(g: Graph) -> tuple[str, int, object] | None:
    if is_tree(g):
        value, witness = tree_connected_forcing(g)
        return ("path" if is_path_graph(g) else "tree"), value, witness
    if detect_single_clique(g).is_single_clique_graph:
        value, witness = single_clique_connected_forcing(g)
        return "clique", value, witness
    return None


def _snark_note(g: Graph, value: int) -> str | None:
    """Bound comparison when the input is exactly a generated flower snark."""
    if g.n < 12 or g.n % 4:
        return None
    k = g.n // 4
    if k % 2 == 0 or generators.flower_snark(k) != g:
        return None
    return f"bound = {k + 2}, equality = {'yes' if value == k + 2 else 'no'}"


def cmd_gen(args, out: TextIO, stdin: TextIO) -> int:
    spec = generators.FamilySpec(args.family, tuple(args.params))
    out.write(format_edge_list(generators.make(spec)))
    return 0


def cmd_fc(args, out: TextIO, stdin: TextIO) -> int:
    g = _read_graph(args.file, stdin)
    if args.all:
        sets = minimum_connected_forcing_sets(g)
        out.write(f"Fc = {len(sets[0])}\nmethod = brute\n")
        for s in sets:
            out.write(f"witness = {s}\n")
        return 0
    found = None
    if args.method in ("auto", "structural"):
        found = _structural(g)
        if found is None and args.method == "structural":
            raise ConnForceError("no structural method applies: graph is neither a tree nor a single-clique graph")
    if found is None:
        res = connected_forcing_number(g)
        found = ("brute", res.value, res.witnesses[0])
    method, value, witness = found
    out.write(f"Fc = {value}\nmethod = {method}\n")
    note = _snark_note(g, value)
    if note:
        out.write(note + "\n")
    if args.witness or args.trace:
        out.write(f"witness = {witness}\n")
    if args.trace:
        out.write(forcing_closure(g, witness).render())
    return 0


def cmd_f(args, out: TextIO, stdin: TextIO) -> int:
    g = _read_graph(args.file, stdin)
    res = forcing_number(g, collect_all=args.all)
    out.write(f"F = {res.value}\n")
    if args.witness or args.all or args.trace:
        for s in res.witnesses:
            out.write(f"witness = {s}\n")
    if args.trace:
        out.write(forcing_closure(g, res.witnesses[0]).render())
    return 0


def cmd_sets(args, out: TextIO, stdin: TextIO) -> int:
    g = _read_graph(args.file, stdin)
    sets = minimum_connected_forcing_sets(g) if args.connected else minimum_forcing_sets(g)
    for s in sets:
        out.write(f"{s}\n")
    return 0


def cmd_spread(args, out: TextIO, stdin: TextIO) -> int:
    g = _read_graph(args.file, stdin)
    if not 0 <= args.v < g.n:
        raise ConnForceError(f"vertex {args.v} is not in the graph")
    value = connected_forcing_spread(g, args.v) if args.connected else forcing_spread(g, args.v)
    out.write(f"spread = {value}\n")
    return 0


def cmd_info(args, out: TextIO, stdin: TextIO) -> int:
    g = _read_graph(args.file, stdin)
    rep = compute_r_sets(g)
    lines = [
        f"n = {g.n}",
        f"m = {g.m}",
        f"R1 = {rep.r1}",
        f"R2 = {rep.r2}",
        f"R3_reduced = {rep.r3_reduced}",
        f"leaves = {rep.leaves}",
        f"leaf_number = {rep.leaf_number}",
        f"curly_L = {rep.curly_l}",
        f"articulation_points = {rep.articulation_points}",
        "blocks = " + " ".join(str(b) for b in rep.blocks),
        "reduced_vertices = {" + " ".join(map(str, rep.reduced_mapping)) + "}",
        "# reduced graph (ids are positions in reduced_vertices)",
    ]
    out.write("\n".join(lines) + "\n" + format_edge_list(rep.reduced))
    return 0


def cmd_verify(args, out: TextIO, stdin: TextIO) -> int:
    checks = run_suite(args.suite, threads=args.threads)
    for c in checks:
        out.write(c.line() + "\n")
    failed = [c for c in checks if not c.observation and not c.passed]
    out.write(f"{'FAILED' if failed else 'OK'}: {len(checks) - len(failed)}/{len(checks)} checks\n")
    return 3 if failed else 0


def cmd_explore(args, out: TextIO, stdin: TextIO) -> int:
    for line in explore.report(args.question, args.max_n):
        out.write(line + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="connforce", description="Connected zero forcing toolkit.")
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="verb", required=True)

    s = sub.add_parser("gen", help="emit a graph family as an edge list")
    s.add_argument("family", choices=sorted(generators.FAMILIES))
    s.add_argument("params", nargs="+", type=int)
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("fc", help="connected forcing number")
    s.add_argument("file", help="edge-list file, or - for stdin")
    s.add_argument("--method", choices=("auto", "brute", "structural"), default="auto")
    s.add_argument("--witness", action="store_true")
    s.add_argument("--all", action="store_true", help="list every minimum connected forcing set")
    s.add_argument("--trace", action="store_true", help="print the forcing steps of the witness")
    s.set_defaults(func=cmd_fc)

    s = sub.add_parser("f", help="forcing number")
    s.add_argument("file")
    s.add_argument("--witness", action="store_true")
    s.add_argument("--all", action="store_true")
    s.add_argument("--trace", action="store_true")
    s.set_defaults(func=cmd_f)

    s = sub.add_parser("sets", help="all minimum (connected) forcing sets")
    s.add_argument("file")
    kind = s.add_mutually_exclusive_group(required=True)
    kind.add_argument("--connected", action="store_true")
    kind.add_argument("--plain", action="store_true")
    s.add_argument("--min", action="store_true", required=True)
    s.set_defaults(func=cmd_sets)

    s = sub.add_parser("spread", help="(connected) forcing spread of a vertex")
    s.add_argument("file")
    s.add_argument("v", type=int)
    s.add_argument("--connected", action="store_true")
    s.set_defaults(func=cmd_spread)

    s = sub.add_parser("info", help="structural report")
    s.add_argument("file")
    s.set_defaults(func=cmd_info)

    s = sub.add_parser("verify", help="run a verification suite")
    s.add_argument("suite", choices=[*SUITES, "all"])
    s.add_argument("--threads", type=int, default=1)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("explore", help="enumeration reports for open questions")
    s.add_argument("question", choices=explore.QUESTIONS)
    s.add_argument("--max-n", type=int, default=6, help="largest order (largest k for 'snark')")
    s.set_defaults(func=cmd_explore)
    return p


def main(argv: list[str] | None = None, out: TextIO | None = None, err: TextIO | None = None,
         stdin: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    stdin = stdin or sys.stdin
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=err)
    if getattr(args, "threads", 1) < 1:
        err.write("connforce: --threads must be >= 1\n")
        return 2
    try:
        return args.func(args, out, stdin)
    except ConnForceError as exc:
        err.write(f"connforce: {exc}\n")
        return 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())

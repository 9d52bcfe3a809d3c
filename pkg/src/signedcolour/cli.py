"""Command-line front end.

Exit codes: 0 success, 1 infeasible or failed verification, 2 usage or
parse error.  Every printed colouring is re-checked for properness first.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import brooks, colour, graph, io, structure, verify

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class _Usage(Exception):
    pass


def _load(path: str) -> graph.SignedGraph:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise _Usage(str(exc)) from exc
    return io.parse_graph_file(text)


def _emit_colouring(g: graph.SignedGraph, phi, header: str) -> int:
    bad = colour.check_proper(g, phi)
    if bad is not None:
        print(f"internal error: colouring violates edge {bad.edge_index}", file=sys.stderr)
        return EXIT_FAIL
    print(f"# {header}")
    sys.stdout.write(io.render_colouring(phi))
    return EXIT_OK


def cmd_chi(args) -> int:
    g = _load(args.file)
    r = colour.chromatic_number(g)
    return _emit_colouring(g, r.witness, f"chi {r.chi}")


def cmd_colour(args) -> int:
    g = _load(args.file)
    phi = colour.find_n_colouring(g, args.n)
    if phi is None:
        print(f"# no {args.n}-colouring")
        return EXIT_FAIL
    return _emit_colouring(g, phi, f"{args.n}-colouring")


def cmd_brooks(args) -> int:
    g = _load(args.file)
    cert = brooks.brooks_colour(g)
    kind = cert.exceptional.value
    return _emit_colouring(g, cert.colouring, f"bound {cert.bound_used} max-degree {cert.max_degree} exceptional {kind}")


def cmd_complete(args) -> int:
    g = _load(args.file)
    phi = brooks.colour_complete(g)
    return _emit_colouring(g, phi, f"colours {colour.palette_size(phi)}")


def cmd_balance(args) -> int:
    g = _load(args.file)
    r = graph.is_balanced(g)
    if r.balanced:
        print("balanced")
        print("switch " + " ".join(str(v) for v in sorted(r.switch_set)))
        return EXIT_OK
    print("unbalanced")
    print("circuit " + " ".join(str(i) for i in r.circuit))
    return EXIT_FAIL


def cmd_antibalance(args) -> int:
    g = _load(args.file)
    r = graph.antibalance_report(g)
    print("antibalanced" if r.balanced else "not antibalanced")
    return EXIT_OK if r.balanced else EXIT_FAIL


def cmd_gamma(args) -> int:
    g = _load(args.file)
    gp = colour.gamma_pair(g)
    print(f"gamma {gp.gamma}")
    print(f"gamma* {gp.gamma_star}")
    return EXIT_OK


def cmd_construct_gn(args) -> int:
    if args.n < 1:
        raise _Usage("n must be at least 1")
    sys.stdout.write(io.render_graph(structure.construct_sharpness_graph(args.n)))
    return EXIT_OK


def cmd_verify(args) -> int:
    spec = verify.EnumerationSpec(
        args.max_vertices,
        connected_only=not args.all_graphs,
        simple_only=not args.multigraphs,
        long_run=args.long_run,
    )
    try:
        report = verify.verify_theorem(
            args.theorem, spec, planar_dir=args.planar_dir, jobs=args.jobs, verbose=args.verbose
        )
    except verify.UnknownTheorem:
        raise _Usage(f"unknown theorem {args.theorem!r}; known: {', '.join(verify.THEOREMS)}") from None
    except (verify.CapExceeded, ValueError) as exc:
        raise _Usage(str(exc)) from exc
    print(report.render(verbose=args.verbose))
    return EXIT_OK if report.passed else EXIT_FAIL


_BUILDERS = {
    "vertex-forests": structure.colour_from_vertex_forest_partition,
    "two-edge-forests": structure.colour_from_two_edge_forests,
    "acyclic": structure.colour_from_acyclic,
    "independent-forest": structure.colour_from_independent_forest_partition,
}


def cmd_from_partition(args) -> int:
    g = _load(args.file)
    try:
        text = Path(args.partition).read_text()
    except OSError as exc:
        raise _Usage(str(exc)) from exc
    p = io.parse_partition_file(text, args.kind, n=g.n)
    try:
        phi = _BUILDERS[args.kind](g, p)
    except structure.InvalidPartition as exc:
        print(f"invalid partition: {exc}", file=sys.stderr)
        return EXIT_FAIL
    return _emit_colouring(g, phi, f"{args.kind} colouring, palette {colour.palette_size(phi)}")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="signedcolour", description="Colouring tools for signed graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    def with_file(name, func, help):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("file", help="graph file, or - for stdin")
        sp.set_defaults(func=func)
        return sp

    with_file("chi", cmd_chi, "chromatic number with an optimal colouring")
    sp = with_file("colour", cmd_colour, "find a colouring from M_n")
    sp.add_argument("--n", type=int, required=True)
    with_file("brooks", cmd_brooks, "constructive colouring within max degree")
    with_file("complete", cmd_complete, "optimal colouring of a signed complete graph")
    with_file("balance", cmd_balance, "balance test with witness")
    with_file("antibalance", cmd_antibalance, "antibalance test")
    with_file("gamma", cmd_gamma, "least k for {-k..k} and for zero-free {±1..±k}")

    sp = sub.add_parser("construct-gn", help="print the extremal graph G_n")
    sp.add_argument("n", type=int)
    sp.set_defaults(func=cmd_construct_gn)

    sp = sub.add_parser("verify", help="check a theorem on small instances")
    sp.add_argument("theorem", help=", ".join(verify.THEOREMS))
    sp.add_argument("--max-vertices", type=int, default=4)
    sp.add_argument("--long-run", action="store_true", help="allow 6-vertex enumeration")
    sp.add_argument("--planar-dir", help="directory of planar graph files (planar_conjecture)")
    sp.add_argument("--multigraphs", action="store_true", help="include mixed parallel pairs")
    sp.add_argument("--all-graphs", action="store_true", help="include disconnected graphs")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("-v", "--verbose", action="store_true", help="one line per instance")
    sp.set_defaults(func=cmd_verify)

    sp = with_file("from-partition", cmd_from_partition, "colouring from a partition file")
    sp.add_argument("--partition", required=True)
    sp.add_argument("--kind", required=True, choices=sorted(_BUILDERS))
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (_Usage, graph.SignedGraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())

"""Command-line interface.

Exit codes: 0 on success, 1 on domain errors (invalid representation,
violated hypothesis, exceeded caps), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from . import constructions as cons
from .errors import BoxicityError
from .graphs import (
    Graph,
    Multigraph,
    complete_graph,
    cycle_graph,
    full_subdivision,
    hypercube,
    line_graph,
    random_multigraph,
)
from .intervals import reduce_dimensions, separate_box_endpoints, verify_box_representation
from .oracle import MAX_NON_EDGES, exact_boxicity
from .suitable import (
    build_simply_3_suitable,
    extract_family_from_boxrep,
    is_simply_3_suitable,
    min_simply_3_suitable_size,
)
from .textio import (
    format_boxrep,
    format_certificate,
    format_family,
    format_graph,
    parse_boxrep,
    parse_family,
    parse_graph,
    parse_order,
)


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _graph(path: str) -> Graph:
    g = parse_graph(_read(path))
    if not isinstance(g, Graph):
        raise BoxicityError(f"{path}: expected a simple graph, got a multigraph")
    return g


def _multigraph(path: str) -> Multigraph:
    g = parse_graph(_read(path))
    if isinstance(g, Graph):
        return Multigraph(g.n, g.edges)
    return g


def cmd_gen(args) -> int:
    kind, params = args.kind, args.params
    expected = {"complete": 1, "cycle": 1, "hypercube": 1, "random-multigraph": 3}[kind]
    if len(params) != expected:
        raise UsageError(f"gen {kind} takes {expected} integer argument(s)")
    if kind == "complete":
        g = complete_graph(params[0])
    elif kind == "cycle":
        g = cycle_graph(params[0])
    elif kind == "hypercube":
        g = hypercube(params[0])
    else:
        g = random_multigraph(*params)
    _emit(format_graph(g), args.output)
    return 0


def cmd_subdivide(args) -> int:
    g, _ = full_subdivision(_graph(args.graph))
    _emit(format_graph(g), args.output)
    return 0


def cmd_linegraph(args) -> int:
    g, _ = line_graph(_multigraph(args.graph))
    _emit(format_graph(g), args.output)
    return 0


def cmd_construct(args) -> int:
    order = parse_order(_read(args.order)) if args.order else None
    if args.kind == "subdivided-complete":
        try:
            n = int(args.source)
        except ValueError:
            raise UsageError("construct subdivided-complete takes an integer n") from None
        result = cons.boxrep_subdivided_complete(n)
        rep = result.rep
    elif args.kind == "subdivision":
        result = cons.boxrep_subdivision_auto(_graph(args.source), order)
        rep = result.rep
        print(f"method={result.method}, dims={rep.k}", file=sys.stderr)
    else:
        _, rep, decomp = cons.boxrep_line_graph(_multigraph(args.source), order)
        if args.emit_decomposition:
            Path(args.emit_decomposition).write_text(decomp.dump())
    _emit(format_boxrep(rep), args.output)
    return 0


def cmd_verify(args) -> int:
    g = _graph(args.graph)
    rep = parse_boxrep(_read(args.rep))
    report = verify_box_representation(g, rep)
    if report.valid:
        print(f"valid, dims={rep.k}")
        return 0
    print(report.summary())
    return 1


def cmd_reduce(args) -> int:
    g = _graph(args.graph)
    rep = reduce_dimensions(g, parse_boxrep(_read(args.rep)))
    _emit(format_boxrep(rep), args.output)
    return 0


def cmd_exact(args) -> int:
    cert = exact_boxicity(_graph(args.graph), max_non_edges=args.caps)
    _emit(format_certificate(cert), args.output)
    return 0


def cmd_suitable(args) -> int:
    action, params = args.action, args.params

    def arity(k: int) -> None:
        if len(params) != k:
            raise UsageError(f"suitable {action} takes {k} argument(s)")

    def integer(tok: str) -> int:
        try:
            return int(tok)
        except ValueError:
            raise UsageError(f"expected an integer, got {tok!r}") from None

    if action == "build":
        arity(1)
        _emit(format_family(build_simply_3_suitable(integer(params[0]))), args.output)
        return 0
    if action == "min":
        arity(1)
        _emit(f"{min_simply_3_suitable_size(integer(params[0]))}\n", args.output)
        return 0
    if action == "check":
        arity(1)
        check = is_simply_3_suitable(parse_family(_read(params[0])))
        if check.ok:
            print("simply 3-suitable")
            return 0
        x, s, t = check.witness
        print(f"not simply 3-suitable: {x} lies between {s} and {t} in every permutation")
        return 1
    arity(2)
    rep = parse_boxrep(_read(params[0]))
    if args.separate:
        rep = separate_box_endpoints(rep)
    family, check = extract_family_from_boxrep(rep, integer(params[1]))
    _emit(format_family(family), args.output)
    print("simply 3-suitable" if check.ok else f"not simply 3-suitable: witness {check.witness}", file=sys.stderr)
    return 0 if check.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="boxicity", description="Box representations of graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def out(p):
        p.add_argument("-o", "--output", help="write data here instead of stdout")

    p = sub.add_parser("gen", help="generate a graph")
    p.add_argument("kind", choices=["complete", "cycle", "hypercube", "random-multigraph"])
    p.add_argument("params", nargs="+", type=int)
    out(p)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("subdivide", help="fully subdivide a graph")
    p.add_argument("graph")
    out(p)
    p.set_defaults(func=cmd_subdivide)

    p = sub.add_parser("linegraph", help="line graph of a multigraph")
    p.add_argument("graph")
    out(p)
    p.set_defaults(func=cmd_linegraph)

    p = sub.add_parser("construct", help="build a box representation")
    p.add_argument("kind", choices=["subdivision", "subdivided-complete", "linegraph"])
    p.add_argument("source", help="graph file, or n for subdivided-complete")
    p.add_argument("--order", help="file with a vertex order for greedy coloring")
    p.add_argument("--emit-decomposition", help="write the per-class pipeline summary here (linegraph)")
    out(p)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check a box representation against a graph")
    p.add_argument("graph")
    p.add_argument("rep")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("reduce", help="greedily drop redundant dimensions")
    p.add_argument("graph")
    p.add_argument("rep")
    out(p)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("exact", help="exact boxicity with a certificate (small graphs)")
    p.add_argument("graph")
    p.add_argument("--caps", type=int, default=MAX_NON_EDGES, help="maximum number of non-edges")
    out(p)
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("suitable", help="simply 3-suitable permutation families")
    p.add_argument("action", choices=["build", "check", "min", "extract"])
    p.add_argument("params", nargs="+")
    p.add_argument("--separate", action="store_true", help="extract: make endpoints distinct first")
    out(p)
    p.set_defaults(func=cmd_suitable)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"boxicity: {exc}", file=sys.stderr)
        return 2
    except BoxicityError as exc:
        print(f"boxicity: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())

"""Command-line front end.

Exit codes: 0 success, 2 domain error, 3 capacity or precision error,
4 verification FAIL, 64 usage error.  Structured results go to stdout,
diagnostics (including the optional timing line) to stderr, so identical
invocations produce byte-identical stdout.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from typing import Iterator

from .canon import canonical_graph6
from .constructions import complete_split, g_ij, turan, y_graph
from .errors import CapacityError, PrecisionError
from .graphs import Graph, VertexPartition, decode_graph6, encode_graph6, from_edges
from .oracles import chromatic_number, contains_complete_split
from .report import render_report
from .search import (
    CONSTRAINT_CLIQUE_FREE,
    CONSTRAINT_CONNECTED,
    CONSTRAINT_NON_PARTITE,
    CONSTRAINT_SPLIT_FREE,
    DEFAULT_ENUM_CAP,
    FAIL,
    OBJECTIVE_EDGES,
    OBJECTIVE_RHO,
    RecordStore,
    SearchSpec,
    THEOREMS,
    record_to_dict,
    verify_theorem,
)
from .spectral import DEFAULT_TOL, RotationSpec, rotate_edges, spectral_radius, verify_rotation_lemma
from .symmetrization import run_procedure

STORE_ENV = "SPLITEX_STORE"
EXIT_OK = 0
EXIT_DOMAIN = 2
EXIT_CAPACITY = 3
EXIT_VERIFY_FAIL = 4
EXIT_USAGE = 64


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


def _graphs_from(arg: str | None) -> Iterator[Graph]:
    """The positional graph6 argument, or newline-delimited graph6 on stdin."""
    if arg is not None:
        yield decode_graph6(arg)
        return
    for line in sys.stdin:
        line = line.strip()
        if line:
            yield decode_graph6(line)


def _parse_range(text: str) -> list[int]:
    """Accept '7' or '5..9'."""
    if ".." in text:
        lo, hi = text.split("..", 1)
        lo, hi = int(lo), int(hi)
        if hi < lo:
            raise ValueError(f"empty range {text!r}")
        return list(range(lo, hi + 1))
    return [int(text)]


def _parse_classes(text: str) -> VertexPartition:
    """Classes as semicolon-separated comma lists: '0,1;2,3,4'."""
    classes = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        classes.append(tuple(int(v) for v in chunk.split(",")) if chunk else ())
    return VertexPartition(tuple(classes))


def _graph_payload(g: Graph) -> dict:
    return {"graph6": encode_graph6(g), "n": g.n, "m": g.m}


def build_parser() -> _Parser:
    parser = _Parser(prog="splitex",
                     description="extremal and spectral search over split-free graph families")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--no-timing", action="store_true",
                        help="suppress the timing line on stderr")
    parser.add_argument("--no-timing", action="store_true",
                        help=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, **kwargs):
        return sub.add_parser(name, parents=[common], **kwargs)

    construct = add("construct", help="emit a named family member as graph6")
    kind = construct.add_subparsers(dest="kind", required=True)
    c_turan = kind.add_parser("turan", parents=[common])
    c_turan.add_argument("--n", type=int, required=True)
    c_turan.add_argument("--r", type=int, required=True)
    c_split = kind.add_parser("split", parents=[common])
    c_split.add_argument("--p", type=int, required=True)
    c_split.add_argument("--q", type=int, required=True)
    c_book = kind.add_parser("book", parents=[common])
    c_book.add_argument("--t", type=int, required=True)
    c_y = kind.add_parser("y", parents=[common])
    c_y.add_argument("--n", type=int, required=True)
    c_y.add_argument("--p", type=int, required=True)
    c_gij = kind.add_parser("gij", parents=[common])
    c_gij.add_argument("--classes", required=True,
                       help="semicolon-separated classes, e.g. '0,1;2,3;4,5'")
    c_gij.add_argument("--i", type=int, required=True)
    c_gij.add_argument("--j", type=int, required=True)
    c_gij.add_argument("--ui", type=int, default=None)
    c_gij.add_argument("--uj", type=int, default=None)
    for p_ in (c_turan, c_split, c_book, c_y, c_gij):
        p_.add_argument("--format", choices=("graph6", "json"), default="graph6")

    contains = add("contains", help="complete-split containment oracle")
    contains.add_argument("graph", nargs="?", help="graph6; stdin if omitted")
    contains.add_argument("--p", type=int, required=True)
    contains.add_argument("--q", type=int, default=1)

    chromatic = add("chromatic", help="exact chromatic number")
    chromatic.add_argument("graph", nargs="?")

    spectral = add("spectral", help="certified spectral radius")
    spectral.add_argument("graph", nargs="?")
    spectral.add_argument("--tol", type=float, default=DEFAULT_TOL)
    spectral.add_argument("--perron", action="store_true", help="include the Perron vector")

    rotate = add("rotate", help="move edges over private neighbors")
    rotate.add_argument("graph", nargs="?")
    rotate.add_argument("--u", type=int, required=True)
    rotate.add_argument("--v", type=int, required=True)
    rotate.add_argument("--neighbors", required=True, help="comma-separated private neighbors")
    rotate.add_argument("--check", action="store_true",
                        help="also report whether the radius strictly increased")

    procedure = add("procedure", help="run the class-typed rewiring and emit the trace")
    procedure.add_argument("graph", nargs="?")
    procedure.add_argument("--u0", type=int, required=True)
    procedure.add_argument("--classes", required=True)
    procedure.add_argument("--split-check", default=None, metavar="P,Q",
                           help="record per-step freeness of the (p,q) pattern")

    search = add("search", help="exhaustive extremal record")
    search.add_argument("objective", choices=("ex", "spex"))
    search.add_argument("--n", dest="n_range", required=True, metavar="N|LO..HI")
    search.add_argument("--p", type=int, default=2)
    search.add_argument("--q", type=int, default=1)
    search.add_argument("--split-free", action="store_true")
    search.add_argument("--clique-free", action="store_true")
    search.add_argument("--non-partite", action="store_true")
    search.add_argument("--connected", action="store_true")
    search.add_argument("--workers", type=int, default=1)
    search.add_argument("--cap", type=int, default=DEFAULT_ENUM_CAP)
    search.add_argument("--store", default=os.environ.get(STORE_ENV),
                        help=f"record store path (default ${STORE_ENV})")
    search.add_argument("--format", choices=("json", "csv", "graph6", "text"), default="json")

    verify = add("verify", help="brute-force check of a named statement")
    verify.add_argument("theorem", choices=THEOREMS)
    verify.add_argument("--n", dest="n_range", required=True, metavar="N|LO..HI")
    verify.add_argument("--r", type=int, default=None)
    verify.add_argument("--p", type=int, default=None)
    verify.add_argument("--q", type=int, default=None)
    verify.add_argument("--workers", type=int, default=1)
    verify.add_argument("--cap", type=int, default=DEFAULT_ENUM_CAP)
    verify.add_argument("--format", choices=("json", "text"), default="json")

    encode = add("encode", help="edge list to graph6")
    encode.add_argument("--n", type=int, required=True)
    encode.add_argument("--edges", default="", help="comma-separated u-v pairs, e.g. 0-1,1-2")

    decode = add("decode", help="graph6 to edge list")
    decode.add_argument("graph", nargs="?")

    report = add("report", help="render CSV and figures from a record store")
    report.add_argument("--store", default=os.environ.get(STORE_ENV))
    report.add_argument("--out", required=True)
    report.add_argument("--formats", default="csv,png")

    return parser


def _cmd_construct(args) -> int:
    if args.kind == "turan":
        g, _ = turan(args.n, args.r)
    elif args.kind == "split":
        g = complete_split(args.p, args.q)
    elif args.kind == "book":
        g = complete_split(2, args.t)
    elif args.kind == "y":
        g, _ = y_graph(args.n, args.p)
    else:
        parts = _parse_classes(args.classes)
        ui = args.ui if args.ui is not None else parts.classes[args.i][0]
        uj = args.uj if args.uj is not None else parts.classes[args.j][0]
        g = g_ij(parts.classes, args.i, args.j, ui, uj)
    if args.format == "json":
        _emit(_graph_payload(g))
    else:
        print(encode_graph6(g))
    return EXIT_OK


def _cmd_contains(args) -> int:
    for g in _graphs_from(args.graph):
        witness = contains_complete_split(g, args.p, args.q)
        payload = {"graph6": encode_graph6(g), "p": args.p, "q": args.q,
                   "contains": witness is not None, "witness": None}
        if witness is not None:
            payload["witness"] = {"clique": list(witness.clique_vertices),
                                  "apex": list(witness.apex_vertices)}
        _emit(payload)
    return EXIT_OK


def _cmd_chromatic(args) -> int:
    for g in _graphs_from(args.graph):
        result = chromatic_number(g)
        _emit({"graph6": encode_graph6(g), "chi": result.chi,
               "coloring": list(result.coloring)})
    return EXIT_OK


def _cmd_spectral(args) -> int:
    for g in _graphs_from(args.graph):
        res = spectral_radius(g, args.tol)
        payload = {"graph6": encode_graph6(g), "rho": res.rho, "err": res.err}
        if args.perron:
            payload["perron"] = list(res.perron)
        _emit(payload)
    return EXIT_OK


def _cmd_rotate(args) -> int:
    neighbors = frozenset(int(w) for w in args.neighbors.split(","))
    spec = RotationSpec(u=args.u, v=args.v, private_neighbors=neighbors)
    for g in _graphs_from(args.graph):
        rotated = rotate_edges(g, spec)
        if args.check:
            increased = verify_rotation_lemma(g, spec)
            _emit({"graph6": encode_graph6(rotated), "m": rotated.m,
                   "radius_increased": increased})
        else:
            print(encode_graph6(rotated))
    return EXIT_OK


def _cmd_procedure(args) -> int:
    classes = _parse_classes(args.classes)
    split_check = None
    if args.split_check:
        p_, q_ = args.split_check.split(",")
        split_check = (int(p_), int(q_))
    for g in _graphs_from(args.graph):
        trace = run_procedure(g, args.u0, classes, split_check=split_check)
        states = [
            {
                "step": st.step,
                "graph6": encode_graph6(st.graph),
                "edges": st.graph.m,
                "labels": list(st.labels),
                "active": [sorted(i for i in range(g.n) if mask >> i & 1)
                           for mask in st.active],
            }
            for st in trace.states
        ]
        moves = [
            {"vertex": mv.vertex, "removed": [list(e) for e in mv.removed],
             "added": [list(e) for e in mv.added]}
            for mv in trace.moved
        ]
        payload = {"steps": len(trace.moved), "states": states, "moved": moves}
        if trace.split_free is not None:
            payload["split_free"] = list(trace.split_free)
        _emit(payload)
    return EXIT_OK


def _search_spec(args, n: int) -> SearchSpec:
    constraints = set()
    if args.split_free:
        constraints.add(CONSTRAINT_SPLIT_FREE)
    if args.clique_free:
        constraints.add(CONSTRAINT_CLIQUE_FREE)
    if args.non_partite:
        constraints.add(CONSTRAINT_NON_PARTITE)
    if args.connected:
        constraints.add(CONSTRAINT_CONNECTED)
    objective = OBJECTIVE_RHO if args.objective == "spex" else OBJECTIVE_EDGES
    return SearchSpec(n=n, p=args.p, q=args.q,
                      constraints=frozenset(constraints), objective=objective)


def _cmd_search(args) -> int:
    from .search import compute_ex, compute_spex

    records = []
    store = RecordStore(args.store) if args.store else None
    for n in _parse_range(args.n_range):
        spec = _search_spec(args, n)
        if store is not None:
            record = store.compute_cached(spec, workers=args.workers, cap=args.cap)
        elif spec.objective == OBJECTIVE_RHO:
            record = compute_spex(spec, workers=args.workers, cap=args.cap)
        else:
            record = compute_ex(spec, workers=args.workers, cap=args.cap)
        records.append(record)
    if args.format == "json":
        for record in records:
            _emit(record_to_dict(record))
    elif args.format == "graph6":
        for record in records:
            for witness in record.witnesses:
                print(witness)
    elif args.format == "csv":
        print("objective,n,p,q,constraints,value,err,witness_count,graphs_scanned,exhaustive")
        for r in records:
            value, err = r.best_value, ""
            if isinstance(value, tuple):
                value, err = f"{value[0]:.12g}", f"{value[1]:.3g}"
            elif value is None:
                value = ""
            cons = ";".join(sorted(r.spec.constraints))
            print(f"{r.spec.objective},{r.spec.n},{r.spec.p},{r.spec.q},{cons},"
                  f"{value},{err},{len(r.witnesses)},{r.graphs_scanned},{r.exhaustive}")
    else:
        for r in records:
            print(f"n={r.spec.n} best={r.best_value} witnesses={len(r.witnesses)} "
                  f"scanned={r.graphs_scanned}")
    return EXIT_OK


def _cmd_verify(args) -> int:
    params = {}
    for name in ("r", "p", "q"):
        value = getattr(args, name)
        if value is not None:
            params[name] = value
    rows = verify_theorem(args.theorem, _parse_range(args.n_range), params,
                          workers=args.workers, cap=args.cap)
    failed = False
    for row in rows:
        if args.format == "json":
            _emit(row.to_dict())
        else:
            print(f"{row.theorem} n={row.n}: {row.status}  expected={row.expected} "
                  f"actual={row.actual}")
        if row.status == FAIL:
            failed = True
    return EXIT_VERIFY_FAIL if failed else EXIT_OK


def _cmd_encode(args) -> int:
    edges = []
    if args.edges:
        for chunk in args.edges.split(","):
            u, v = chunk.split("-")
            edges.append((int(u), int(v)))
    print(encode_graph6(from_edges(args.n, edges)))
    return EXIT_OK


def _cmd_decode(args) -> int:
    for g in _graphs_from(args.graph):
        _emit({"n": g.n, "m": g.m, "edges": [list(e) for e in g.edges()],
               "canonical_graph6": canonical_graph6(g)})
    return EXIT_OK


def _cmd_report(args) -> int:
    if not args.store:
        raise ValueError(f"no record store given (--store or ${STORE_ENV})")
    formats = tuple(f.strip() for f in args.formats.split(",") if f.strip())
    written = render_report(RecordStore(args.store), args.out, formats)
    for path in written:
        print(path)
    return EXIT_OK


_HANDLERS = {
    "construct": _cmd_construct,
    "contains": _cmd_contains,
    "chromatic": _cmd_chromatic,
    "spectral": _cmd_spectral,
    "rotate": _cmd_rotate,
    "procedure": _cmd_procedure,
    "search": _cmd_search,
    "verify": _cmd_verify,
    "encode": _cmd_encode,
    "decode": _cmd_decode,
    "report": _cmd_report,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    started = time.perf_counter()
    try:
        status = _HANDLERS[args.command](args)
    except (CapacityError, PrecisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    if not args.no_timing:
        print(f"elapsed: {time.perf_counter() - started:.3f}s", file=sys.stderr)
    return status


if __name__ == "__main__":
    sys.exit(main())

"""Command-line interface.

Commands read a hypergraph (or facet list) from a file or stdin, run one
computation, and print a small plain-text report.  Exit codes: 0 success,
2 parse or validation problem, 3 resource budget exceeded, 4 theorem
violation found by the verification harness.
"""

from __future__ import annotations

import argparse
import sys

from .chains import (
    find_splitting_vertex,
    is_properly_connected,
    is_splitting_edge,
    is_triangulated,
    shortest_chain,
)
from .complexes import SimplicialComplex, independence_complex
from .domination import epsilon, k_bound
from .errors import ParseError, ResourceError, ValidationError
from .extnat import INF
from .fixtures import FIXTURE_NAMES, fixture
from .formats import (
    complex_to_document,
    document_to_complex,
    document_to_hypergraph,
    emit_json,
    emit_text,
    hypergraph_to_document,
    parse_json,
    parse_text,
)
from .homology import conn_h, reduced_homology
from .homotopy import (
    homotopy_type_triangulated,
    is_properly_splitted,
    max_dimension_bound,
    properly_splitted_witness,
)
from .psi import degree_bound, psi_witness
from . import verify as verify_mod

__all__ = ["main"]

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_BUDGET = 3
EXIT_VIOLATION = 4


def _read_document(path: str):
    """Document from a path or stdin ("-"); JSON is detected by suffix or,
    on stdin, by a leading brace."""
    if path == "-":
        text = sys.stdin.read()
        if text.lstrip().startswith("{"):
            return parse_json(text, name="stdin")
        return parse_text(text, name="stdin")
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    if path.endswith(".json"):
        return parse_json(text, name=path)
    return parse_text(text, name=path)


def _load_hypergraph(path: str):
    doc = _read_document(path)
    H, mapping = document_to_hypergraph(doc)
    inverse = {i: label for label, i in mapping.items()}
    return H, inverse


def _fmt_edge(edge, inverse) -> str:
    return "{" + " ".join(sorted((inverse[v] for v in edge), key=_label_sort)) + "}"


def _label_sort(label: str):
    try:
        return (0, int(label), label)
    except ValueError:
        return (1, 0, label)


def _fmt_value(x) -> str:
    return "inf" if x == INF else str(x)


def _cmd_psi(args) -> int:
    H, inverse = _load_hypergraph(args.file)
    value, edge = psi_witness(H)
    print(f"psi = {_fmt_value(value)}")
    if edge is not None:
        print(f"argmax edge: {_fmt_edge(edge, inverse)}")
    return EXIT_OK


def _cmd_homology(args) -> int:
    doc = _read_document(args.file)
    if args.complex:
        delta, _ = document_to_complex(doc)
    else:
        H, _ = document_to_hypergraph(doc)
        delta = independence_complex(H)
    prof = reduced_homology(delta)
    print(prof.describe())
    print(f"connectivity: {_fmt_value(prof.connectivity())}")
    return EXIT_OK


def _cmd_conn(args) -> int:
    H, _ = _load_hypergraph(args.file)
    value, _edge = psi_witness(H)
    rows = [
        ("conn_h", conn_h(independence_complex(H))),
        ("psi", value),
        ("k", k_bound(H)),
        ("epsilon", epsilon(H)),
        ("degree-bound", degree_bound(H)),
    ]
    for name, v in rows:
        print(f"{name:<13} {_fmt_value(v)}")
    return EXIT_OK


def _parse_edge(spec: str, mapping) -> frozenset:
    labels = [p for p in spec.replace(",", " ").split() if p]
    missing = [p for p in labels if p not in mapping]
    if missing:
        raise ParseError(f"unknown vertex label(s): {' '.join(missing)}")
    return frozenset(mapping[p] for p in labels)


def _cmd_distance(args) -> int:
    doc = _read_document(args.file)
    H, mapping = document_to_hypergraph(doc)
    inverse = {i: label for label, i in mapping.items()}
    F = _parse_edge(args.edge_a, mapping)
    G = _parse_edge(args.edge_b, mapping)
    chain = shortest_chain(H, F, G)
    if chain is None:
        print("distance = inf")
        return EXIT_OK
    print(f"distance = {chain.length}")
    parts = [_fmt_edge(chain.edges[0], inverse)]
    for x, e in zip(chain.pivots, chain.edges[1:]):
        parts.append(f"-[{inverse[x]}]-")
        parts.append(_fmt_edge(e, inverse))
    print("chain: " + " ".join(parts))
    return EXIT_OK


def _cmd_check(args) -> int:
    doc = _read_document(args.file)
    H, mapping = document_to_hypergraph(doc)
    inverse = {i: label for label, i in mapping.items()}
    if args.properly_connected:
        print("properly-connected: " + ("yes" if is_properly_connected(H) else "no"))
    elif args.triangulated:
        print("triangulated: " + ("yes" if is_triangulated(H) else "no"))
    elif args.properly_splitted:
        if is_properly_splitted(H):
            w = properly_splitted_witness(H)
            print("properly-splitted: yes")
            seq = " ".join(_fmt_edge(e, inverse) for e in w.edge_sequence())
            print("edge sequence: " + seq)
        else:
            print("properly-splitted: no")
    else:
        F = _parse_edge(args.splitting_edge, mapping)
        if is_splitting_edge(H, F):
            z = find_splitting_vertex(H, F)
            print("splitting-edge: yes")
            print(f"splitting vertex: {inverse[z]}")
        else:
            print("splitting-edge: no")
    return EXIT_OK


def _cmd_homotopy_type(args) -> int:
    H, _ = _load_hypergraph(args.file)
    t = homotopy_type_triangulated(H)
    print(t.describe())
    if H.edges:
        print(f"dimension bound: {max_dimension_bound(H)}")
    return EXIT_OK


def _cmd_verify(args) -> int:
    suites = None
    if args.suite and "all" not in args.suite:
        suites = args.suite
    report = verify_mod.run(
        seed=args.seed,
        samples=args.samples,
        max_vertices=args.max_vertices,
        suites=suites,
        workers=args.workers,
    )
    if args.json:
        print(report.to_json())
    else:
        for line in report.format_lines():
            print(line)
    return EXIT_OK if report.ok else EXIT_VIOLATION


def _cmd_fixture(args) -> int:
    obj = fixture(args.name)
    if isinstance(obj, SimplicialComplex):
        doc = complex_to_document(obj, name=args.name)
    else:
        doc = hypergraph_to_document(obj, name=args.name)
    if args.emit == "json":
        print(emit_json(doc))
    else:
        sys.stdout.write(emit_text(doc))
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="hyperconn",
        description="Connectivity bounds, homology, and chain structure of "
        "hypergraph independence complexes.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("psi", help="recursive connectivity bound with witness")
    p.add_argument("file", help="hypergraph file, or - for stdin")
    p.set_defaults(func=_cmd_psi)

    p = sub.add_parser("homology", help="reduced homology table")
    p.add_argument("file")
    p.add_argument(
        "--complex",
        action="store_true",
        help="treat the edge list as the facet list of a complex",
    )
    p.set_defaults(func=_cmd_homology)

    p = sub.add_parser("conn", help="all connectivity bounds in one table")
    p.add_argument("file")
    p.set_defaults(func=_cmd_conn)

    p = sub.add_parser("distance", help="proper-chain distance between edges")
    p.add_argument("file")
    p.add_argument("edge_a", help="edge as comma- or space-separated labels")
    p.add_argument("edge_b")
    p.set_defaults(func=_cmd_distance)

    p = sub.add_parser("check", help="structural predicates with witnesses")
    p.add_argument("file")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--properly-connected", action="store_true")
    g.add_argument("--triangulated", action="store_true")
    g.add_argument("--properly-splitted", action="store_true")
    g.add_argument("--splitting-edge", metavar="EDGE")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("homotopy-type", help="wedge decomposition, when defined")
    p.add_argument("file")
    p.set_defaults(func=_cmd_homotopy_type)

    p = sub.add_parser("verify", help="run the verification suites")
    p.add_argument("--suite", action="append", default=None,
                   help="suite name, repeatable; 'all' or omitted for all")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-vertices", type=int, default=8)
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--json", action="store_true", help="emit the JSON report")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("fixture", help="print a named fixture")
    p.add_argument("name", help="one of: " + ", ".join(FIXTURE_NAMES))
    p.add_argument("--emit", choices=["json", "text"], default="text")
    p.set_defaults(func=_cmd_fixture)

    return ap


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, ValidationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ResourceError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())

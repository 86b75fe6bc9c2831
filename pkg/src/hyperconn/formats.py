"""Text and JSON documents for hypergraphs and facet-listed complexes.

Text format: one edge per line, whitespace-separated labels, with an
optional leading header line "vertices: a b c" declaring the full vertex
set (needed exactly when isolated vertices exist).  Blank lines and lines
starting with # are ignored.  JSON format mirrors HypergraphDocument.

Labels are strings in documents.  When every label is a decimal integer
the in-memory hypergraph uses those integers as vertex ids, so documents
written by hand with numeric labels round-trip through results without a
translation table; otherwise ids are assigned densely in sorted label
order and the mapping is returned alongside.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .complexes import SimplicialComplex
from .errors import ParseError, ValidationError
from .hypergraph import Hypergraph

__all__ = [
    "HypergraphDocument",
    "parse_text",
    "emit_text",
    "parse_json",
    "emit_json",
    "document_to_hypergraph",
    "hypergraph_to_document",
    "document_to_complex",
    "complex_to_document",
    "load_hypergraph",
    "load_complex",
]


@dataclass(frozen=True)
class HypergraphDocument:
    """Serialized form: a name, unique labels, and edges as label lists."""

    name: str = ""
    vertices: tuple = ()
    edges: tuple = ()

    def __post_init__(self):
        labels = list(self.vertices)
        if len(set(labels)) != len(labels):
            dup = sorted({x for x in labels if labels.count(x) > 1})
            raise ValidationError(f"duplicate labels: {dup}")
        declared = set(labels)
        for e in self.edges:
            for x in e:
                if x not in declared:
                    raise ValidationError(f"edge label {x!r} not in the vertex list")


def _canonical(name: str, vertices, edges) -> HypergraphDocument:
    verts = sorted(set(vertices), key=_label_key)
    seen = set()
    canon_edges = []
    for e in edges:
        t = tuple(sorted(set(e), key=_label_key))
        if t not in seen:
            seen.add(t)
            canon_edges.append(t)
    canon_edges.sort(key=lambda t: (len(t), tuple(_label_key(x) for x in t)))
    return HypergraphDocument(name, tuple(verts), tuple(canon_edges))


def _is_int_label(x: str) -> bool:
    try:
        int(x)
        return True
    except (TypeError, ValueError):
        return False


def _label_key(x: str):
    # numeric labels sort numerically among themselves, others after
    if _is_int_label(x):
        return (0, int(x), "")
    return (1, 0, str(x))


def parse_text(text: str, name: str = "") -> HypergraphDocument:
    """Parse the line-oriented format; ParseError carries the line number."""
    declared: list | None = None
    edges = []
    mentioned = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.lower().startswith("vertices:"):
            if declared is not None:
                raise ParseError("second vertices: header", lineno)
            if edges:
                raise ParseError("vertices: header must come before edges", lineno)
            declared = line.split(":", 1)[1].split()
            if len(set(declared)) != len(declared):
                raise ParseError("duplicate label in vertices: header", lineno)
            continue
        labels = line.split()
        if len(set(labels)) != len(labels):
            raise ParseError(f"repeated label in edge {labels}", lineno)
        if declared is not None:
            for x in labels:
                if x not in declared:
                    raise ParseError(f"label {x!r} not in vertices: header", lineno)
        edges.append(tuple(labels))
        mentioned.extend(labels)
    vertices = declared if declared is not None else sorted(set(mentioned), key=_label_key)
    return _canonical(name, vertices, edges)


def emit_text(doc: HypergraphDocument) -> str:
    """Canonical text: sorted labels and edges, vertices: header exactly
    when some label lies in no edge."""
    doc = _canonical(doc.name, doc.vertices, doc.edges)
    used = {x for e in doc.edges for x in e}
    lines = []
    if set(doc.vertices) != used:
        lines.append("vertices: " + " ".join(doc.vertices))
    for e in doc.edges:
        lines.append(" ".join(e))
    return "\n".join(lines) + ("\n" if lines else "")


def parse_json(text: str, name: str = "") -> HypergraphDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno) from exc
    if not isinstance(data, dict):
        raise ParseError("top-level JSON value must be an object")
    for key in data:
        if key not in ("name", "vertices", "edges"):
            raise ParseError(f"unknown field {key!r}")
    doc_name = data.get("name", name)
    if not isinstance(doc_name, str):
        raise ParseError("name must be a string")
    verts = data.get("vertices")
    edges = data.get("edges", [])
    if not isinstance(edges, list) or not all(isinstance(e, list) for e in edges):
        raise ParseError("edges must be a list of lists")
    str_edges = [tuple(str(x) for x in e) for e in edges]
    if verts is None:
        verts = sorted({x for e in str_edges for x in e}, key=_label_key)
    elif isinstance(verts, list):
        verts = [str(x) for x in verts]
    else:
        raise ParseError("vertices must be a list")
    return _canonical(doc_name, verts, str_edges)


def emit_json(doc: HypergraphDocument) -> str:
    doc = _canonical(doc.name, doc.vertices, doc.edges)
    payload = {
        "name": doc.name,
        "vertices": list(doc.vertices),
        "edges": [list(e) for e in doc.edges],
    }
    return json.dumps(payload, indent=2) + "\n"


def document_to_hypergraph(doc: HypergraphDocument) -> tuple[Hypergraph, dict]:
    """Build the hypergraph and return it with the label -> id mapping."""
    doc = _canonical(doc.name, doc.vertices, doc.edges)
    if all(_is_int_label(x) for x in doc.vertices):
        mapping = {x: int(x) for x in doc.vertices}
    else:
        mapping = {x: i for i, x in enumerate(sorted(doc.vertices), start=1)}
    H = Hypergraph(
        mapping.values(),
        [frozenset(mapping[x] for x in e) for e in doc.edges],
    )
    return H, mapping


def hypergraph_to_document(H: Hypergraph, name: str = "") -> HypergraphDocument:
    return _canonical(
        name,
        [str(v) for v in sorted(H.vertices)],
        [tuple(str(v) for v in sorted(e)) for e in H.edges],
    )


def document_to_complex(doc: HypergraphDocument) -> tuple[SimplicialComplex, dict]:
    """Read the edge lines as the facet list of a complex; singleton
    facets are legal here, unlike hypergraph edges."""
    doc = _canonical(doc.name, doc.vertices, doc.edges)
    if all(_is_int_label(x) for x in doc.vertices):
        mapping = {x: int(x) for x in doc.vertices}
    else:
        mapping = {x: i for i, x in enumerate(sorted(doc.vertices), start=1)}
    facets = [frozenset(mapping[x] for x in e) for e in doc.edges]
    used = {v for f in facets for v in f}
    for x, v in sorted(mapping.items()):
        if v not in used:
            facets.append(frozenset([v]))
    return SimplicialComplex(facets), mapping


def complex_to_document(delta: SimplicialComplex, name: str = "") -> HypergraphDocument:
    return _canonical(
        name,
        [str(v) for v in sorted(delta.vertices)],
        [tuple(str(v) for v in sorted(f)) for f in delta.facets],
    )


def _read(path: str) -> tuple[str, bool]:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    return text, path.endswith(".json")

def load_hypergraph(path: str) -> tuple[Hypergraph, dict]:
    """Parse a file (JSON if named *.json, text otherwise) to a hypergraph."""
    text, is_json = _read(path)
    doc = (parse_json if is_json else parse_text)(text)
    return document_to_hypergraph(doc)


def load_complex(path: str) -> tuple[SimplicialComplex, dict]:
    """Parse a file to a facet-listed simplicial complex."""
    text, is_json = _read(path)
    doc = (parse_json if is_json else parse_text)(text)
    return document_to_complex(doc)

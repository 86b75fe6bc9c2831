"""Finite abstract simplicial complexes, stored by their facets.

A complex is the downward closure of its facet list.  The empty face belongs
to every complex here; the complex {empty} alone is stored as an empty facet
tuple.  The void complex (no faces at all) is not representable.  The vertex
set is always exactly the union of the facets, so every vertex is a face.
"""

from __future__ import annotations

from collections.abc import Iterable
from itertools import combinations

from .errors import (
    CapacityExceeded,
    NotAFace,
    NotASubset,
    OverlappingVertexSets,
    ValidationError,
)
from .hypergraph import Hypergraph, _edge_key
from .limits import vertex_cap

__all__ = [
    "SimplicialComplex",
    "full_simplex",
    "simplex_boundary",
    "independence_complex",
    "minimal_nonfaces",
    "link",
    "deletion",
    "induced_subcomplex",
    "join",
    "complex_union",
]


class SimplicialComplex:
    """Downward-closed set system represented by its maximal faces."""

    __slots__ = ("facets", "vertices", "_facet_set", "_faces", "_hash")

    def __init__(self, faces: Iterable[Iterable[int]]):
        """Build the complex generated by the given faces.

        Non-maximal entries are dropped; the empty face never appears in the
        facet list (an empty list means the complex {empty}).
        """
        cand = {frozenset(f) for f in faces}
        for f in cand:
            for v in f:
                if not isinstance(v, int):
                    raise ValidationError(f"vertex {v!r} is not an int")
        maximal = [f for f in cand if f and not any(f < g for g in cand)]
        facets = tuple(sorted(maximal, key=_edge_key))
        object.__setattr__(self, "facets", facets)
        object.__setattr__(
            self, "vertices", frozenset().union(*facets) if facets else frozenset()
        )
        object.__setattr__(self, "_facet_set", frozenset(facets))
        object.__setattr__(self, "_faces", None)
        object.__setattr__(self, "_hash", hash(self._facet_set))

    def __setattr__(self, name, value):
        raise AttributeError("SimplicialComplex is immutable")

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self._facet_set == other._facet_set

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        fs = ", ".join("{" + ",".join(map(str, sorted(f))) + "}" for f in self.facets)
        return f"SimplicialComplex([{fs}])"

    @property
    def dim(self) -> int:
        """Dimension: largest face size minus one; -1 for the complex {empty}."""
        if not self.facets:
            return -1
        return max(len(f) for f in self.facets) - 1

    @property
    def is_point_only(self) -> bool:
        """True for the complex {empty} (the (-1)-sphere)."""
        return not self.facets

    def has_face(self, sigma: Iterable[int]) -> bool:
        s = frozenset(sigma)
        if not s:
            return True
        return any(s <= f for f in self.facets)

    def faces(self, cap: int | None = None) -> frozenset:
        """All faces, the empty face included.  Cached after the first call.

        Raises CapacityExceeded when the vertex count is over the cap
        (default 25), since the face list can be exponential in it.
        """
        if self._faces is not None:
            return self._faces
        if len(self.vertices) > vertex_cap(cap):
            raise CapacityExceeded(
                f"{len(self.vertices)} vertices exceeds the face enumeration cap"
            )
        out = {frozenset()}
        for f in self.facets:
            elems = sorted(f)
            for k in range(1, len(elems) + 1):
                out.update(frozenset(c) for c in combinations(elems, k))
        object.__setattr__(self, "_faces", frozenset(out))
        return self._faces

    def face_count(self) -> int:
        return len(self.faces())


def full_simplex(vertices: Iterable[int]) -> SimplicialComplex:
    """The simplex on the given vertices; {empty} when none are given."""
    return SimplicialComplex([frozenset(vertices)])


def simplex_boundary(vertices: Iterable[int]) -> SimplicialComplex:
    """Boundary of the simplex on n vertices, a sphere of dimension n - 2."""
    vs = sorted(frozenset(vertices))
    if not vs:
        raise ValidationError("the empty simplex has no boundary complex")
    return SimplicialComplex(frozenset(vs) - {v} for v in vs)


def independence_complex(C: Hypergraph, cap: int | None = None) -> SimplicialComplex:
    """Faces are the subsets of V(C) containing no edge of C.

    Facets are complements of minimal transversals of the edge family.  For
    an edgeless hypergraph this is the full simplex on V; on the empty
    vertex set it is {empty}.
    """
    if C.order > vertex_cap(cap):
        raise CapacityExceeded(f"{C.order} vertices exceeds the enumeration cap")
    if not C.edges:
        return full_simplex(C.vertices)
    edges = C.edges
    transversals: set = set()

    def extend(i: int, chosen: set) -> None:
        j = i
        while j < len(edges) and edges[j] & chosen:
            j += 1
        if j == len(edges):
            transversals.add(frozenset(chosen))
            return
        for v in sorted(edges[j]):
            chosen.add(v)
            extend(j + 1, chosen)
            chosen.discard(v)

    extend(0, set())
    facets = []
    for t in transversals:
        # t is minimal iff every chosen vertex privately covers some edge
        if all(any(e & t == {v} for e in edges) for v in t):
            facets.append(C.vertices - t)
    return SimplicialComplex(facets)


def minimal_nonfaces(delta: SimplicialComplex, cap: int | None = None) -> Hypergraph:
    """Inclusion-minimal non-faces, as a hypergraph on the complex's vertices.

    Every minimal non-face has size >= 2 (singletons are faces by the type
    invariant) and the family is an antichain, so the result validates.
    Candidates stop at dimension + 2: larger sets always contain a smaller
    non-face.
    """
    n = len(delta.vertices)
    if n > vertex_cap(cap):
        raise CapacityExceeded(f"{n} vertices exceeds the enumeration cap")
    face_set = delta.faces(cap)
    verts = sorted(delta.vertices)
    out = []
    for k in range(2, min(n, delta.dim + 2) + 1):
        for c in combinations(verts, k):
            s = frozenset(c)
            if s in face_set:
                continue
            if all(s - {v} in face_set for v in s):
                out.append(s)
    return Hypergraph(delta.vertices, out)


def link(delta: SimplicialComplex, sigma: Iterable[int]) -> SimplicialComplex:
    """Faces tau disjoint from sigma with tau | sigma a face."""
    s = frozenset(sigma)
    if not delta.has_face(s):
        raise NotAFace(f"{sorted(s)} is not a face")
    return SimplicialComplex(f - s for f in delta.facets if s <= f)


def deletion(delta: SimplicialComplex, sigma: Iterable[int]) -> SimplicialComplex:
    """Faces that do not contain sigma."""
    s = frozenset(sigma)
    if not s:
        raise ValidationError("deleting the empty face would leave the void complex")
    if not delta.has_face(s):
        raise NotAFace(f"{sorted(s)} is not a face")
    out = []
    for f in delta.facets:
        if s <= f:
            out.extend(f - {v} for v in s)
        else:
            out.append(f)
    return SimplicialComplex(out)


def induced_subcomplex(delta: SimplicialComplex, U: Iterable[int]) -> SimplicialComplex:
    """Faces contained in U."""
    U = frozenset(U)
    if not U <= delta.vertices:
        raise NotASubset(f"{sorted(U)} is not a subset of the vertex set")
    return SimplicialComplex(f & U for f in delta.facets)


def _facets_with_empty(delta: SimplicialComplex) -> tuple:
    return delta.facets if delta.facets else (frozenset(),)


def join(d1: SimplicialComplex, d2: SimplicialComplex) -> SimplicialComplex:
    """Join of complexes on disjoint vertex sets; {empty} is the identity."""
    if d1.vertices & d2.vertices:
        raise OverlappingVertexSets(
            f"shared vertices {sorted(d1.vertices & d2.vertices)}"
        )
    return SimplicialComplex(
        f1 | f2 for f1 in _facets_with_empty(d1) for f2 in _facets_with_empty(d2)
    )


def complex_union(d1: SimplicialComplex, d2: SimplicialComplex) -> SimplicialComplex:
    """Union of the two face sets (vertex sets may overlap)."""
    return SimplicialComplex(list(d1.facets) + list(d2.facets))

"""Domination-style invariants of complexes and hypergraphs.

sp_tilde(delta, A) collects the vertices v for which some face sigma
inside A stops being a face when v is added.  A set A with sp_tilde(A)
equal to the whole vertex set is a dominating set of the complex;
gamma_tilde is the least size of one.  For the independence complex of a
graph this recovers the classical total domination number.
"""

from __future__ import annotations

from itertools import combinations

from .complexes import SimplicialComplex, independence_complex
from .errors import CapacityExceeded, NotASubset, NotSubfamily
from .extnat import INF, ExtNat, ceil_half
from .hypergraph import Hypergraph
from .limits import DEFAULT_COMBINATION_CAP, vertex_cap

__all__ = [
    "sp_tilde",
    "gamma_tilde",
    "gamma_tilde_witness",
    "k_bound",
    "is_edgewise_dominant",
    "epsilon",
    "epsilon_witness",
]


def sp_tilde(delta: SimplicialComplex, A) -> frozenset:
    """Vertices v admitting a face sigma <= A with sigma + {v} not a face.

    sigma ranges over all faces inside A, the empty face included.  A
    vertex already in sigma never qualifies through that sigma, since
    sigma + {v} is then sigma itself.
    """
    A = frozenset(A)
    if not A <= delta.vertices:
        raise NotASubset(f"{sorted(A)} is not a subset of the vertex set")
    out: set = set()
    pending = set(delta.vertices)
    for sigma in delta.faces():
        if not sigma <= A:
            continue
        hits = {v for v in pending if not delta.has_face(sigma | {v})}
        out |= hits
        pending -= hits
        if not pending:
            break
    return frozenset(out)


def _sp_masks(delta: SimplicialComplex) -> tuple:
    """Bitmask tables for fast domination search."""
    verts = sorted(delta.vertices)
    pos = {v: i for i, v in enumerate(verts)}
    faces = []
    for sigma in delta.faces():
        smask = 0
        for v in sigma:
            smask |= 1 << pos[v]
        kmask = 0
        for v in verts:
            if v not in sigma and not delta.has_face(sigma | {v}):
                kmask |= 1 << pos[v]
        if kmask:
            faces.append((smask, kmask))
    return verts, faces


def gamma_tilde_witness(
    delta: SimplicialComplex, cap: int | None = None
) -> tuple[ExtNat, frozenset | None]:
    """(gamma_tilde, a smallest dominating set or None when none exists).

    Search order: increasing size, lexicographic within a size, so the
    witness is deterministic.  INF when even the full vertex set fails,
    as for a full simplex.
    """
    n = len(delta.vertices)
    if n > vertex_cap(cap):
        raise CapacityExceeded(f"{n} vertices exceeds the domination search cap")
    verts, faces = _sp_masks(delta)
    full = (1 << n) - 1
    for size in range(0, n + 1):
        for combo in combinations(range(n), size):
            amask = 0
            for i in combo:
                amask |= 1 << i
            sp = 0
            for smask, kmask in faces:
                if smask & ~amask == 0:
                    sp |= kmask
                    if sp == full:
                        break
            if sp == full:
                return (size, frozenset(verts[i] for i in combo))
    return (INF, None)


def gamma_tilde(delta: SimplicialComplex, cap: int | None = None) -> ExtNat:
    """Least size of a set A with sp_tilde(A) covering every vertex."""
    return gamma_tilde_witness(delta, cap)[0]


def k_bound(C: Hypergraph, cap: int | None = None) -> ExtNat:
    """Half the domination number of the independence complex, rounded up."""
    return ceil_half(gamma_tilde(independence_complex(C, cap), cap))


def is_edgewise_dominant(C: Hypergraph, family) -> bool:
    """Every non-isolated vertex is in or next to a vertex covered by the family.

    The family must consist of edges of C (NotSubfamily otherwise).
    """
    fam = [frozenset(e) for e in family]
    for e in fam:
        if not C.has_edge(e):
            raise NotSubfamily(f"{sorted(e)} is not an edge of the hypergraph")
    cover: set = set()
    for e in fam:
        cover |= e
    for v in C.vertices - C.isolated_vertices():
        if v in cover or C.vertex_neighborhood(v) & cover:
            continue
        return False
    return True


def epsilon_witness(C: Hypergraph) -> tuple[int, tuple]:
    """(epsilon, a smallest edgewise dominant subfamily).

    0 with the empty family when every vertex is isolated.  The full edge
    family always dominates, so the value is finite.
    """
    if not (C.vertices - C.isolated_vertices()):
        return (0, ())
    m = len(C.edges)
    budget = DEFAULT_COMBINATION_CAP
    seen = 0
    for size in range(1, m + 1):
        for fam in combinations(C.edges, size):
            seen += 1
            if seen > budget:
                raise CapacityExceeded("edgewise dominance search too large")
            if is_edgewise_dominant(C, fam):
                return (size, fam)
    raise AssertionError("full family must dominate")


def epsilon(C: Hypergraph) -> int:
    """Least size of an edgewise dominant subfamily of edges."""
    return epsilon_witness(C)[0]

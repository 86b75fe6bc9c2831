"""Proper chains between edges and the structure they induce.

A proper chain from F to G is an alternating sequence

    E_0 = F, x_1, E_1, x_2, ..., x_n, E_n = G

of pairwise distinct edges E_i and pairwise distinct vertices x_k with
x_k in E_{k-1} & E_k for every k and |E_i & E_{i+1}| = |E_{i+1}| - 1 for
every i.  (The pivot conditions here are equivalent to the usual phrasing
x_1 in E_0, x_n in E_n, x_k and x_{k+1} both in E_k.)  Its length is n.
A chain is irredundant when no strict subsequence of its edges, first and
last kept, carries pivots making it a proper chain again.  The distance
between two edges is the minimum length of a proper chain between them;
a shortest proper chain is automatically irredundant, because a proper
subsequence chain would be strictly shorter.

On top of the metric: a d-uniform hypergraph is properly connected when
every two intersecting edges F, G satisfy dist(F, G) = d - |F & G|; a
vertex v is a decomposition vertex when its neighborhood induces a
d-complete hypergraph and v lies in at most two edges of any proper
irredundant chain; a hypergraph is triangulated when every nonempty
induced subhypergraph has a decomposition vertex.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import (
    CapacityExceeded,
    EdgeNotPresent,
    NotProperlyConnected,
    NotUniform,
    ValidationError,
)
from .extnat import INF, ExtNat
from .hypergraph import Hypergraph
from .limits import triangulated_cap

__all__ = [
    "ProperChain",
    "is_proper_chain",
    "is_irredundant",
    "edge_distance",
    "shortest_chain",
    "is_properly_connected",
    "c_max_disjoint",
    "is_splitting_edge",
    "find_splitting_vertex",
    "find_decomposition_vertex",
    "is_triangulated",
    "hypergraph_geq",
]


@dataclass(frozen=True)
class ProperChain:
    """Edge sequence with its pivot vertices; length = number of pivots."""

    edges: tuple
    pivots: tuple

    @property
    def length(self) -> int:
        return len(self.pivots)

    def describe(self) -> str:
        parts = ["{" + " ".join(map(str, sorted(self.edges[0]))) + "}"]
        for x, e in zip(self.pivots, self.edges[1:]):
            parts.append(f"-[{x}]-")
            parts.append("{" + " ".join(map(str, sorted(e))) + "}")
        return " ".join(parts)


def is_proper_chain(C: Hypergraph, chain: ProperChain) -> bool:
    """Validate the chain conditions inside C.

    Raises EdgeNotPresent when a listed edge is not an edge of C; any
    other violation returns False.
    """
    edges = [frozenset(e) for e in chain.edges]
    pivots = list(chain.pivots)
    for e in edges:
        if not C.has_edge(e):
            raise EdgeNotPresent(f"chain edge {sorted(e)} is not an edge")
    if not edges or len(pivots) != len(edges) - 1:
        return False
    if len(set(edges)) != len(edges) or len(set(pivots)) != len(pivots):
        return False
    for k, x in enumerate(pivots, start=1):
        if x not in edges[k - 1] or x not in edges[k]:
            return False
    for i in range(len(edges) - 1):
        if len(edges[i] & edges[i + 1]) != len(edges[i + 1]) - 1:
            return False
    return True


def _feasible_pivots(edges: list) -> tuple | None:
    """Pivot assignment for an edge sequence, or None.

    Checks the intersection law, then backtracks for distinct pivots
    x_k in E_{k-1} & E_k.
    """
    n = len(edges) - 1
    for i in range(n):
        if len(edges[i] & edges[i + 1]) != len(edges[i + 1]) - 1:
            return None
    chosen: list = []
    used: set = set()

    def place(k: int) -> bool:
        if k > n:
            return True
        for x in sorted(edges[k - 1] & edges[k]):
            if x not in used:
                used.add(x)
                chosen.append(x)
                if place(k + 1):
                    return True
                chosen.pop()
                used.discard(x)
        return False

    if place(1):
        return tuple(chosen)
    return None


def is_irredundant(C: Hypergraph, chain: ProperChain) -> bool:
    """True when no strict edge subsequence is again a proper chain.

    The candidate subsequences keep the first and last edge and preserve
    order; their pivots are re-derived by search.  Raises ValidationError
    if the input is not a proper chain of C.
    """
    if not is_proper_chain(C, chain):
        raise ValidationError("not a proper chain")
    edges = [frozenset(e) for e in chain.edges]
    n = len(edges) - 1
    if n <= 1:
        return True
    interior = list(range(1, n))
    for keep in range(n - 1):
        for subset in combinations(interior, keep):
            seq = [edges[0]] + [edges[i] for i in subset] + [edges[n]]
            if _feasible_pivots(seq) is not None:
                return False
    return True


def shortest_chain(
    C: Hypergraph, F, G, max_length: int | None = None
) -> ProperChain | None:
    """A shortest proper chain from F to G within the length bound.

    None when no proper chain of length <= max_length exists.  The default
    bound, one less than the edge count, is exhaustive since chain edges
    are distinct.  Deterministic: iterative deepening with canonical edge
    and pivot order.
    """
    F = frozenset(F)
    G = frozenset(G)
    for e in (F, G):
        if not C.has_edge(e):
            raise EdgeNotPresent(f"{sorted(e)} is not an edge")
    if F == G:
        return ProperChain(edges=(F,), pivots=())
    limit = len(C.edges) - 1 if max_length is None else max_length
    all_edges = C.edges

    def extend(seq: list, pivots: list, used_p: set, depth: int) -> ProperChain | None:
        last = seq[-1]
        if last == G:
            return ProperChain(edges=tuple(seq), pivots=tuple(pivots))
        if depth == 0:
            return None
        for e in all_edges:
            if e in seq:
                continue
            if len(last & e) != len(e) - 1:
                continue
            if depth > 1 and e == G:
                continue  # reaching G early would have been found at a
                # smaller deepening level
            for x in sorted(last & e):
                if x in used_p:
                    continue
                seq.append(e)
                pivots.append(x)
                used_p.add(x)
                out = extend(seq, pivots, used_p, depth - 1)
                if out is not None:
                    return out
                used_p.discard(x)
                pivots.pop()
                seq.pop()
        return None

    for depth in range(1, limit + 1):
        out = extend([F], [], set(), depth)
        if out is not None:
            return out
    return None


def edge_distance(C: Hypergraph, F, G) -> ExtNat:
    """Minimum proper chain length from F to G; INF when none exists."""
    chain = shortest_chain(C, F, G)
    return INF if chain is None else chain.length


def is_properly_connected(C: Hypergraph) -> bool:
    """Every intersecting edge pair at distance exactly d - |F & G|.

    Vacuously true for an edgeless hypergraph; mixed edge sizes raise
    NotUniform.
    """
    if not C.edges:
        return True
    d = C.uniform_size()
    if d is None:
        raise NotUniform("properly connected is defined for d-uniform input")
    for i, F in enumerate(C.edges):
        for G in C.edges[i + 1 :]:
            common = F & G
            if not common:
                continue
            target = d - len(common)
            chain = shortest_chain(C, F, G, max_length=target)
            if chain is None or chain.length != target:
                return False
    return True


def c_max_disjoint(C: Hypergraph, t: int | None = None) -> int:
    """Largest number of edges pairwise at distance >= t.

    Default t = d + 1, the threshold for the contraction identities.  Uses
    the conflict graph (edges at distance < t adjacent) and a simple exact
    branch and bound for its maximum independent set.
    """
    if not C.edges:
        return 0
    d = C.uniform_size()
    if t is None:
        if d is None:
            raise NotUniform("default threshold needs a d-uniform hypergraph")
        t = d + 1
    m = len(C.edges)
    conflict = [set() for _ in range(m)]
    for i in range(m):
        for j in range(i + 1, m):
            if shortest_chain(C, C.edges[i], C.edges[j], max_length=t - 1) is not None:
                conflict[i].add(j)
                conflict[j].add(i)
    best = [0]

    def grow(chosen: int, cand: list) -> None:
        if chosen + len(cand) <= best[0]:
            return
        if not cand:
            best[0] = max(best[0], chosen)
            return
        v = cand[0]
        grow(chosen + 1, [u for u in cand[1:] if u not in conflict[v]])
        grow(chosen, cand[1:])

    grow(0, list(range(m)))
    return best[0]


def find_splitting_vertex(C: Hypergraph, F) -> int | None:
    """A vertex z in F with (F - z) + {x} an edge for every neighbor x."""
    F = frozenset(F)
    if not C.has_edge(F):
        raise EdgeNotPresent(f"{sorted(F)} is not an edge")
    nbrs = C.neighbor_set(F)
    for z in sorted(F):
        base = F - {z}
        if all(C.has_edge(base | {x}) for x in nbrs):
            return z
    return None


def is_splitting_edge(C: Hypergraph, F) -> bool:
    """True when some z in F swaps with every neighbor of F inside C.

    Vacuously true when F has no neighbors.
    """
    return find_splitting_vertex(C, F) is not None


def _chain_occurrences_ok(
    C: Hypergraph, v: int, limit: int = 2, count_pivots: bool = False,
    max_length: int | None = None,
) -> bool:
    """No proper irredundant chain of C carries v in more than limit edges.

    With count_pivots the count also adds one when v serves as a pivot
    (the alternative reading of the occurrence condition).  Every prefix
    of a proper chain is a proper chain, so the search tests each prefix
    whose count first exceeds the limit and keeps extending either way.
    """
    v_edges = [e for e in C.edges if v in e]
    if len(v_edges) + (1 if count_pivots else 0) <= limit:
        return True
    all_edges = C.edges
    cap = len(all_edges) - 1 if max_length is None else max_length

    def over_limit(seq: list, pivots: list) -> bool:
        cnt = sum(1 for e in seq if v in e)
        if count_pivots and v in pivots:
            cnt += 1
        return cnt > limit

    def extend(seq: list, pivots: list, used_p: set) -> bool:
        """Returns True when a violating irredundant chain was found."""
        if over_limit(seq, pivots):
            chain = ProperChain(edges=tuple(seq), pivots=tuple(pivots))
            if is_irredundant(C, chain):
                return True
        if len(pivots) >= cap:
            return False
        remaining_v = sum(1 for e in v_edges if e not in seq)
        cnt = sum(1 for e in seq if v in e)
        if count_pivots:
            remaining_v += 0 if v in pivots else 1
            if v in pivots:
                cnt += 1
        if cnt + remaining_v <= limit:
            return False
        last = seq[-1]
        for e in all_edges:
            if e in seq or len(last & e) != len(e) - 1:
                continue
            for x in sorted(last & e):
                if x in used_p:
                    continue
                seq.append(e)
                pivots.append(x)
                used_p.add(x)
                if extend(seq, pivots, used_p):
                    return True
                used_p.discard(x)
                pivots.pop()
                seq.pop()
        return False

    for start in all_edges:
        if extend([start], [], set()):
            return False
    return True


def _neighborhood_complete(C: Hypergraph, v: int, d: int) -> bool:
    nbrs = C.vertex_neighborhood(v)
    if len(nbrs) < d:
        return True  # below order: the induced hypergraph is edgeless
    return all(C.has_edge(frozenset(s)) for s in combinations(sorted(nbrs), d))


def find_decomposition_vertex(
    C: Hypergraph, count_pivots: bool = False, _memo: dict | None = None
) -> int | None:
    """Smallest vertex whose neighborhood induces a d-complete hypergraph
    and which sits in at most two edges of every proper irredundant chain.

    For graphs (d = 2) the chain condition holds automatically: a third
    edge membership always yields a proper subsequence chain shortcut, so
    the irredundant chains never show one.  A decomposition vertex of a
    graph is then exactly a simplicial vertex.  Raises NotUniform on mixed
    edge sizes; every vertex qualifies in an edgeless hypergraph.
    """
    d = C.uniform_size()
    if d is None and C.edges:
        raise NotUniform("decomposition vertices need a d-uniform hypergraph")
    for v in sorted(C.vertices):
        if not C.edges:
            return v
        if not _neighborhood_complete(C, v, d):
            continue
        if d == 2:
            return v
        if _memo is not None:
            key = (C._edge_set, v)
            if key not in _memo:
                _memo[key] = _chain_occurrences_ok(C, v, count_pivots=count_pivots)
            ok = _memo[key]
        else:
            ok = _chain_occurrences_ok(C, v, count_pivots=count_pivots)
        if ok:
            return v
    return None


def is_triangulated(
    C: Hypergraph, cap: int | None = None, count_pivots: bool = False
) -> bool:
    """Every nonempty induced subhypergraph has a decomposition vertex.

    Exponential in the vertex count; raises CapacityExceeded above the cap
    (default 16).  A subhypergraph with a vertex in no edge passes
    immediately, since that vertex qualifies; the remaining verdicts only
    depend on the induced edge set, which is memoized.
    """
    d = C.uniform_size()
    if d is None and C.edges:
        raise NotUniform("triangulated is defined for d-uniform input")
    n = C.order
    if n > triangulated_cap(cap):
        raise CapacityExceeded(f"{n} vertices exceeds the triangulated check cap")
    verts = sorted(C.vertices)
    vmemo: dict = {}
    ememo: dict = {}
    for mask in range(1, 1 << n):
        A = frozenset(verts[i] for i in range(n) if mask >> i & 1)
        sub = C.induced(A)
        if len(A) > len(A - sub.isolated_vertices()):
            continue  # an isolated vertex of the induced part qualifies
        key = sub._edge_set
        if key not in ememo:
            ememo[key] = (
                find_decomposition_vertex(sub, count_pivots=count_pivots, _memo=vmemo)
                is not None
            )
        if not ememo[key]:
            return False
    return True


def hypergraph_geq(C: Hypergraph, F) -> Hypergraph:
    """Edges at distance >= d + 1 from F, on V minus F and its neighbors.

    Requires a properly connected input (NotProperlyConnected otherwise);
    F must be an edge.
    """
    F = frozenset(F)
    if not C.has_edge(F):
        raise EdgeNotPresent(f"{sorted(F)} is not an edge")
    if not is_properly_connected(C):
        raise NotProperlyConnected("input is not properly connected")
    d = C.uniform_size()
    far = [
        G
        for G in C.edges
        if G != F and shortest_chain(C, F, G, max_length=d) is None
    ]
    return Hypergraph(C.vertices - F - C.neighbor_set(F), far)

"""Proper chains between edges, and recognition of triangulated hypergraphs.

A proper chain steps between edges through shared pivot vertices subject to
an intersection law; its length gives a metric on the edge set.  Triangulated
hypergraphs are recognised recursively through decomposition vertices, and on
graphs the notion coincides with chordality.
"""

from hyperconn import (
    Hypergraph,
    all_graphs,
    d_complete,
    edge_distance,
    hypergraph_geq,
    is_chordal,
    is_properly_connected,
    is_triangulated,
    shortest_chain,
)
from hyperconn.fixtures import cycle_hypergraph

print("shortest proper chain across the 6-cycle:")
C6 = cycle_hypergraph(6)
F, G = frozenset({1, 2}), frozenset({4, 5})
chain = shortest_chain(C6, F, G)
print(f"  {chain.describe()}")
print(f"  distance = {edge_distance(C6, F, G)}")

print()
print("every 2-uniform hypergraph is properly connected, even a disconnected one:")
H = Hypergraph(range(1, 5), [{1, 2}, {3, 4}])
print(f"  two disjoint edges -> {is_properly_connected(H)}")

print()
print("contraction-compatible subhypergraph above an edge of the 6-cycle:")
above = hypergraph_geq(C6, frozenset({1, 2}))
print(f"  vertices {sorted(above.vertices)}, edges {sorted(sorted(e) for e in above.edges)}")

print()
print("triangulated recognition agrees with chordality on every graph up to 5 vertices:")
checked = agreements = 0
for n in range(1, 6):
    for G_ in all_graphs(n):
        checked += 1
        agreements += is_triangulated(G_) == is_chordal(G_)
print(f"  {agreements}/{checked} graphs agree")

print()
print("complete multi-uniform examples:")
for n, d in [(4, 2), (4, 3), (5, 3)]:
    H = d_complete(n, d)
    print(f"  all {d}-subsets of {n} vertices -> triangulated: {is_triangulated(H)}")

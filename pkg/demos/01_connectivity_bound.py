"""The recursive connectivity bound on small hypergraphs.

The bound is defined by a max-min recursion over edges: deleting an edge
keeps the vertex set, contracting one removes the edge together with its
neighborhood.  Infinite values appear as soon as some vertex can never be
covered.
"""

from hyperconn import Hypergraph, psi, psi_naive, psi_witness
from hyperconn.fixtures import cycle_hypergraph, path_hypergraph

cases = [
    ("single edge", Hypergraph([1, 2], [{1, 2}])),
    ("two disjoint edges", Hypergraph(range(1, 5), [{1, 2}, {3, 4}])),
    ("4-cycle", cycle_hypergraph(4)),
    ("5-cycle", cycle_hypergraph(5)),
    ("path on 4 vertices", path_hypergraph(4)),
    ("one triple", Hypergraph([1, 2, 3], [{1, 2, 3}])),
    ("three isolated vertices", Hypergraph([1, 2, 3], [])),
]

print("value and witness edge for a few shapes:\n")
for name, H in cases:
    value, edge = psi_witness(H)
    shown = "inf" if value == float("inf") else value
    witness = f"via edge {sorted(edge)}" if edge is not None else "(base case)"
    print(f"  {name:<26} -> {shown:>4}  {witness}")

print()
print("the two independent solvers always agree on small inputs:")
H = cycle_hypergraph(6)
print(f"  6-cycle: recursive search = {psi(H)}, plain recursion = {psi_naive(H)}")

print()
print("an isolated vertex forces the value to infinity:")
H = Hypergraph([1, 2, 3], [{1, 2}])
print(f"  edge plus isolated vertex -> {psi(H)}")

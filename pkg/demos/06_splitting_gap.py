"""A family showing the splitting construction is not tight.

The builder produces, for each k >= 3, a (k+1)-uniform hypergraph that is
properly splitted yet whose connectivity value rises by one when a common
apex vertex joins all its edges.  Contrast with splitting edges, where the
value is preserved.
"""

from hyperconn import (
    Hypergraph,
    build_counterexample_family,
    is_properly_splitted,
    properly_splitted_witness,
    psi,
)

H = build_counterexample_family(3)
sizes = sorted({len(E) for E in H.edges})
print(f"the k=3 member: {len(H.vertices)} vertices, {len(H.edges)} edges "
      f"of sizes {sizes}")
print(f"  properly splitted: {is_properly_splitted(H)}")
witness = properly_splitted_witness(H)
print(f"  split order found: {len(witness.edge_sequence())} steps")

value = psi(H, cap_preservation=True)
print(f"  connectivity value: {value}")

apex = max(H.vertices) + 1
joined = Hypergraph(
    set(H.vertices) | {apex},
    [set(E) | {apex} for E in H.edges],
)
value_joined = psi(joined, cap_preservation=True)
print(f"  after joining an apex vertex to every edge: {value_joined}")
print()
print(f"the jump {value} -> {value_joined} shows the splitting bound can be strict.")

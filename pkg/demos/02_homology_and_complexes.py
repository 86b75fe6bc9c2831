"""Exact integer homology of independence complexes.

Faces of the independence complex are the vertex sets containing no edge.
Reduced homology is computed over the integers via Smith normal form, so
torsion is reported exactly rather than being lost to floating point.
"""

from hyperconn import (
    SimplicialComplex,
    conn_h,
    fixture,
    independence_complex,
    reduced_homology,
)
from hyperconn.fixtures import cycle_hypergraph

print("independence complex of the 5-cycle:")
H = cycle_hypergraph(5)
K = independence_complex(H)
print(f"  facets: {sorted(tuple(sorted(f)) for f in K.facets)}")
profile = reduced_homology(K)
print("  homology:")
for line in profile.describe().splitlines():
    print(f"    {line}")
print(f"  connectivity: {conn_h(K)}")

print()
print("a triangulation of the real projective plane has 2-torsion:")
RP2 = SimplicialComplex(
    [
        (1, 2, 3), (1, 2, 4), (1, 3, 5), (1, 4, 6), (1, 5, 6),
        (2, 3, 6), (2, 4, 5), (2, 5, 6), (3, 4, 5), (3, 4, 6),
    ]
)
profile = reduced_homology(RP2)
print("  homology:")
for line in profile.describe().splitlines():
    print(f"    {line}")
print(f"  torsion in degree 1: {profile.torsion_at(1)}")

print()
print("the bundled 10-vertex acyclic complex (31 facets, trivial homology):")
K = fixture("lutz-acyclic")
profile = reduced_homology(K)
print(f"  vertices: {len(K.vertices)}, facets: {len(K.facets)}")
print(f"  trivial homology: {profile.is_trivial()}")

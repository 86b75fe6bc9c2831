"""Domination-style parameters that bound the connectivity value.

Three parameters are computed: a strong domination number over independent
sets, an iterated variant built from disjoint edgewise-dominant sets, and a
covering count.  The latter two sit below the recursive connectivity value,
which in turn caps the topological connectivity from below.
"""

from hyperconn import (
    conn_h,
    epsilon,
    gamma_tilde,
    independence_complex,
    k_bound,
    psi,
)
from hyperconn.fixtures import cycle_hypergraph, path_hypergraph

print(f"{'shape':<22}{'strong dom':>11}{'iterated':>10}{'covers':>8}{'psi':>6}{'conn':>6}")
for name, H in [
    ("4-cycle", cycle_hypergraph(4)),
    ("5-cycle", cycle_hypergraph(5)),
    ("6-cycle", cycle_hypergraph(6)),
    ("path on 5 vertices", path_hypergraph(5)),
]:
    K = independence_complex(H)
    row = (gamma_tilde(K), k_bound(H), epsilon(H), psi(H), conn_h(K))
    print(f"{name:<22}" + "".join(f"{v:>{w}}" for v, w in zip(row, (11, 10, 8, 6, 6))))

print()
print("the chain of inequalities on the 6-cycle:")
H = cycle_hypergraph(6)
K = independence_complex(H)
print(f"  iterated domination {k_bound(H)}  <=  psi {psi(H)}")
print(f"  covering count {epsilon(H)}  <=  psi {psi(H)}")
print(f"  conn {conn_h(K)}  >=  psi - 2 = {psi(H) - 2}")

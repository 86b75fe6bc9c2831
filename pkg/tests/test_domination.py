"""Domination-style invariants of independence complexes."""

import random

import pytest

from hyperconn import (
    INF,
    Hypergraph,
    d_complete,
    epsilon,
    epsilon_witness,
    gamma_tilde,
    gamma_tilde_witness,
    independence_complex,
    is_edgewise_dominant,
    k_bound,
    psi,
    sp_tilde,
)
from hyperconn.fixtures import cycle_hypergraph, path_hypergraph
from hyperconn.generators import all_graphs, random_hypergraph

import oracles


PINNED = [
    (cycle_hypergraph(4), 2, 1, 1),
    (cycle_hypergraph(5), 3, 2, 2),
    (path_hypergraph(4), 2, 1, 1),
    (Hypergraph([1, 2], [{1, 2}]), 2, 1, 1),
    (d_complete(4, 2), 2, 1, 1),
    (Hypergraph([1, 2, 3], []), INF, INF, 0),
]


class TestPinned:
    @pytest.mark.parametrize("H,g,k,e", PINNED)
    def test_values(self, H, g, k, e):
        assert gamma_tilde(independence_complex(H)) == g
        assert k_bound(H) == k
        assert epsilon(H) == e


class TestGammaTilde:
    def test_matches_definition_oracle(self):
        rng = random.Random(31)
        for _ in range(40):
            H = random_hypergraph(rng, 6)
            ind = independence_complex(H)
            expect = oracles.strong_dominating_number(H.vertices, ind.faces())
            assert gamma_tilde(ind) == expect

    def test_graphs_match_total_domination(self):
        for n in range(1, 6):
            for G in all_graphs(n):
                g = gamma_tilde(independence_complex(G))
                assert g == oracles.total_domination(G.vertices, G.edges)

    def test_witness_dominates(self):
        rng = random.Random(32)
        for _ in range(30):
            H = random_hypergraph(rng, 6)
            ind = independence_complex(H)
            size, A = gamma_tilde_witness(ind)
            if size == INF:
                continue
            assert len(A) == size
            assert sp_tilde(ind, A) == ind.vertices | frozenset()
            # also confirm it's covered by the package's own closure
            assert sp_tilde(ind, A) >= frozenset(H.vertices)


class TestEpsilon:
    def test_witness_is_dominant_family(self):
        rng = random.Random(33)
        for _ in range(30):
            H = random_hypergraph(rng, 7)
            size, fam = epsilon_witness(H)
            assert len(fam) == size
            assert is_edgewise_dominant(H, fam)
            # minimality: no smaller family works
            if size > 0:
                import itertools

                smaller_works = any(
                    is_edgewise_dominant(H, sub)
                    for sub in itertools.combinations(H.edges, size - 1)
                )
                assert not smaller_works

    def test_edgeless_is_zero(self):
        assert epsilon(Hypergraph([1, 2], [])) == 0


class TestBoundsAgainstPsi:
    def test_k_and_epsilon_below_psi(self):
        rng = random.Random(34)
        for _ in range(50):
            H = random_hypergraph(rng, 7)
            p = psi(H)
            assert k_bound(H) <= p
            assert epsilon(H) <= p

    def test_degree_times_gamma_covers_order(self):
        rng = random.Random(35)
        for _ in range(50):
            H = random_hypergraph(rng, 7)
            if not H.edges:
                continue
            g = gamma_tilde(independence_complex(H))
            assert g * H.max_degree() >= H.order

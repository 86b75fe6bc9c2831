"""The recursive connectivity bound: ground truths, solver agreement,
structural laws, and resource limits."""

import random

import pytest

from hyperconn import (
    BudgetExceeded,
    Hypergraph,
    INF,
    PsiSolver,
    d_complete,
    degree_bound,
    disjoint_union,
    psi,
    psi_naive,
    psi_witness,
)
from hyperconn.fixtures import cycle_hypergraph, path_hypergraph
from hyperconn.generators import random_hypergraph


def small_pool(seed, count, max_vertices=7, max_edges=5):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        H = random_hypergraph(rng, max_vertices)
        if len(H.edges) <= max_edges:
            out.append(H)
    return out


PINNED = [
    (Hypergraph([], []), 0),
    (Hypergraph([1, 2, 3], []), INF),
    (Hypergraph([1, 2], [{1, 2}]), 1),
    (Hypergraph(range(1, 5), [{1, 2}, {3, 4}]), 2),
    (cycle_hypergraph(4), 1),
    (cycle_hypergraph(5), 2),
    (cycle_hypergraph(6), 2),
    (path_hypergraph(4), INF),
    (path_hypergraph(5), 2),
    (path_hypergraph(6), 2),
    (d_complete(3, 2), 1),
    (d_complete(4, 2), 1),
    (d_complete(4, 3), 2),
    (Hypergraph(range(1, 5), [{1, 2}, {1, 3}, {1, 4}]), 1),
    (Hypergraph(range(1, 4), [{1, 2, 3}]), 2),
    (Hypergraph(range(1, 7), [{1, 2, 3}, {4, 5, 6}]), 4),
]

PINNED_LARGE = [
    (d_complete(5, 2), 1),
    (d_complete(6, 2), 1),
    (d_complete(5, 3), 2),
    (d_complete(6, 3), 2),
    (Hypergraph(range(1, 6), [{1, 2}, {2, 3}, {1, 3}, {3, 4}, {4, 5}, {3, 5}]), 1),
]


class TestPinnedValues:
    @pytest.mark.parametrize("H,expect", PINNED)
    def test_all_three_solvers(self, H, expect):
        assert psi(H) == expect
        assert psi_naive(H) == expect
        assert psi(H, cap_preservation=True) == expect

    @pytest.mark.parametrize("H,expect", PINNED_LARGE)
    def test_two_solvers_large(self, H, expect):
        assert psi(H) == expect
        assert psi(H, cap_preservation=True) == expect


class TestSolverAgreement:
    def test_matches_naive_on_small_pool(self):
        for H in small_pool(23, 150):
            v = psi_naive(H)
            assert psi(H) == v
            assert psi(H, cap_preservation=True) == v

    def test_no_decomposition_matches(self):
        for H in small_pool(24, 60):
            assert psi(H, solver=PsiSolver(decompose_components=False)) == psi(H)


class TestStructuralLaws:
    def test_isolated_vertex_forces_infinity(self):
        for H in small_pool(25, 40):
            extra = max(H.vertices, default=0) + 1
            K = Hypergraph(set(H.vertices) | {extra}, H.edges)
            assert psi(K) == INF

    def test_component_additivity(self):
        pool = small_pool(26, 60, max_vertices=5, max_edges=3)
        rng = random.Random(27)
        for _ in range(30):
            A = rng.choice(pool)
            B = rng.choice(pool)
            off = max(A.vertices, default=0) + 1 - min(B.vertices, default=1)
            B = Hypergraph(
                (v + off for v in B.vertices),
                [frozenset(v + off for v in e) for e in B.edges],
            )
            assert psi(disjoint_union(A, B)) == psi(A) + psi(B)

    def test_value_bounded_by_order_when_finite(self):
        for H in small_pool(28, 80):
            v = psi(H)
            if v != INF and H.edges:
                assert v <= H.order - 1


class TestWitness:
    def test_witness_achieves_value(self):
        for H in small_pool(29, 60):
            v, F = psi_witness(H)
            if F is None:
                # base case: no outer maximization happened
                assert v == 0 or v == INF
                continue
            inner = min(psi(H.delete_edge(F)), psi(H.contract(F)) + len(F) - 1)
            assert inner == v

    def test_witness_deterministic(self):
        H = cycle_hypergraph(5)
        assert psi_witness(H) == psi_witness(H)


class TestResources:
    def test_budget_raises(self):
        with pytest.raises(BudgetExceeded):
            psi(d_complete(6, 2), budget=2)

    def test_env_budget(self, monkeypatch):
        monkeypatch.setenv("HYPERCONN_PSI_BUDGET", "2")
        with pytest.raises(BudgetExceeded):
            psi(d_complete(6, 2))


class TestDegreeBound:
    def test_values(self):
        assert degree_bound(Hypergraph([], [])) == 0
        assert degree_bound(Hypergraph([1, 2], [])) == INF
        assert degree_bound(cycle_hypergraph(5)) == 2
        assert degree_bound(path_hypergraph(4)) == 1

    def test_below_psi(self):
        for H in small_pool(30, 60):
            assert degree_bound(H) <= psi(H)

"""Named fixture instances used by the CLI, tests, and demos.

The registry accepts plain names (lutz-acyclic, c4, c5) and parametric
names (path(n), complete(n,d), counterexample(k)).
"""

from __future__ import annotations

import re

from .complexes import SimplicialComplex
from .errors import UnknownFixture, ValidationError
from .hypergraph import Hypergraph, d_complete

__all__ = [
    "lutz_acyclic_complex",
    "cycle_hypergraph",
    "path_hypergraph",
    "fixture",
    "FIXTURE_NAMES",
]

# A 10-vertex 2-dimensional complex whose reduced integer homology vanishes
# in every dimension although the complex is not contractible.  31 triangle
# facets.
_ACYCLIC_FACETS = [
    (1, 2, 4), (1, 2, 5), (1, 3, 6), (1, 3, 8), (1, 3, 10),
    (1, 4, 8), (1, 4, 9), (1, 5, 7), (1, 5, 10), (1, 6, 7),
    (1, 6, 9), (2, 3, 5), (2, 3, 7), (2, 3, 8), (2, 4, 6),
    (2, 4, 10), (2, 6, 7), (2, 6, 8), (2, 8, 10), (3, 5, 6),
    (3, 5, 9), (3, 7, 9), (3, 7, 10), (4, 5, 6), (4, 5, 7),
    (4, 5, 8), (4, 7, 9), (4, 7, 10), (5, 8, 9), (5, 8, 10),
    (6, 8, 9),
]


def lutz_acyclic_complex() -> SimplicialComplex:
    """The acyclic-but-not-contractible 2-complex on vertices 1..10."""
    return SimplicialComplex(_ACYCLIC_FACETS)


def cycle_hypergraph(n: int) -> Hypergraph:
    """The n-cycle as a 2-uniform hypergraph on vertices 1..n."""
    if n < 3:
        raise ValidationError(f"a cycle needs at least 3 vertices, got {n}")
    return Hypergraph(
        range(1, n + 1), [{i, i % n + 1} for i in range(1, n + 1)]
    )


def path_hypergraph(n: int) -> Hypergraph:
    """The path on n vertices 1..n with n - 1 edges."""
    if n < 1:
        raise ValidationError(f"a path needs at least 1 vertex, got {n}")
    return Hypergraph(range(1, n + 1), [{i, i + 1} for i in range(1, n)])


FIXTURE_NAMES = [
    "lutz-acyclic",
    "c4",
    "c5",
    "path(n)",
    "complete(n,d)",
    "counterexample(k)",
]


def fixture(name: str):
    """Look up a fixture by name; Hypergraph or SimplicialComplex result.

    Raises UnknownFixture for anything not in the registry.
    """
    name = name.strip().lower()
    if name == "lutz-acyclic":
        return lutz_acyclic_complex()
    if name == "c4":
        return cycle_hypergraph(4)
    if name == "c5":
        return cycle_hypergraph(5)
    m = re.fullmatch(r"path\((\d+)\)", name)
    if m:
        return path_hypergraph(int(m.group(1)))
    m = re.fullmatch(r"complete\((\d+),\s*(\d+)\)", name)
    if m:
        return d_complete(int(m.group(1)), int(m.group(2)))
    m = re.fullmatch(r"counterexample\((\d+)\)", name)
    if m:
        from .homotopy import build_counterexample_family

        return build_counterexample_family(int(m.group(1)))
    raise UnknownFixture(f"no fixture named {name!r}; known: {', '.join(FIXTURE_NAMES)}")

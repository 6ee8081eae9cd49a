from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from conftest import load
from surfbasis.generators import random_embedding, torus_grid, with_boundaries
from surfbasis.gf2 import rank
from surfbasis.oracle import (
    MAX_DIM, OracleLimitError, enumerate_cycle_space, face_boundaries, fundamental_cycles,
    greedy_mcb, greedy_mhb, homology_rank, horton_set, is_null_homologous,
)


def is_even(g, mask: int) -> bool:
    deg = [0] * g.n
    for e, (u, v) in enumerate(g.ends):
        if mask >> e & 1:
            deg[u] += 1
            deg[v] += 1
    return all(d % 2 == 0 for d in deg)


def test_theta_enumeration(theta):
    space = enumerate_cycle_space(theta)
    assert space.dim == 2 and len(space) == 4
    assert sorted(space.weights) == [0, 3, 4, 5]


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10_000))
def test_enumeration_is_the_even_subgraphs(seed):
    n = 2 + seed % 5
    g = random_embedding(n, n + 1 + seed % 6, seed, loops=True)
    space = enumerate_cycle_space(g)
    assert len(set(space.elements)) == 1 << (g.m - g.n + 1)
    assert all(is_even(g, c) for c in space.elements)
    assert rank(fundamental_cycles(g)) == g.m - g.n + 1


def test_limit():
    g = torus_grid(5)  # dimension 26
    with pytest.raises(OracleLimitError):
        enumerate_cycle_space(g)
    assert MAX_DIM == 20


@pytest.mark.parametrize("name, mcb, mhb", [
    ("theta", 7, 0), ("k4-sphere", 9, 0), ("torus1", 2, 2), ("projective-loop", None, 1),
    ("torus-grid-3", 34, 6),
])
def test_reference_values(name, mcb, mhb):
    g = load(name)
    if mcb is not None:
        assert greedy_mcb(g)[1] == mcb
    assert greedy_mhb(g.punctured())[1] == mhb


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10_000))
def test_horton_set_holds_a_minimum_basis(seed):
    n = 3 + seed % 6
    g = random_embedding(n, n + 3 + seed % 7, seed, orientable=seed % 2 == 0, loops=True, max_weight=5)
    hs = horton_set(g)
    assert rank(hs) == g.m - g.n + 1
    # greedy restricted to the Horton set gives the same weight as full enumeration
    from surfbasis.gf2 import XorBasis

    xb, total = XorBasis(), 0
    for c in sorted(hs, key=lambda c: (sum(g.weights[e] for e in range(g.m) if c >> e & 1), c)):
        if xb.add(c):
            total += sum(g.weights[e] for e in range(g.m) if c >> e & 1)
    assert total == greedy_mcb(g)[1]


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10_000), st.booleans())
def test_homology_rank_is_beta(seed, orientable):
    n = 2 + seed % 7
    g = random_embedding(n, n + 2 + seed % 8, seed, orientable=orientable, loops=True)
    assert homology_rank(g) == g.stats.beta
    h = with_boundaries(g, 1 + seed % 3, seed)
    assert homology_rank(h) == h.stats.beta


def test_face_boundaries_null_homologous(k4s):
    for c in face_boundaries(k4s, interior_only=False):
        assert is_even(k4s, c)
    # on the sphere every cycle bounds
    for c in enumerate_cycle_space(k4s).elements:
        assert is_null_homologous(k4s, c)


def test_large_grids_use_horton_fallback():
    for n in (5, 6):
        g = torus_grid(n)
        chosen, total = greedy_mhb(g.punctured())
        assert len(chosen) == 2 and total == 2 * n

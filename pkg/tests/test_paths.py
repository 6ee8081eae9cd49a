from __future__ import annotations

import networkx as nx
from hypothesis import given, settings, strategies as st

from surfbasis.generators import random_embedding, torus_grid
from surfbasis.paths import AllPairs, adjacency, dijkstra, shortest_path


def to_networkx(g) -> nx.MultiGraph:
    h = nx.MultiGraph()
    h.add_nodes_from(range(g.n))
    for e, (u, v) in enumerate(g.ends):
        h.add_edge(u, v, key=e, weight=g.weights[e])
    return h


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 10_000))
def test_distances_match_networkx(seed):
    g = random_embedding(3 + seed % 8, 10 + seed % 10, seed, loops=True)
    ref = dict(nx.all_pairs_dijkstra_path_length(to_networkx(g)))
    ap = AllPairs(g)
    for u in range(g.n):
        for v in range(g.n):
            assert ap.dist(u, v) == ref[u][v]


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 10_000))
def test_tree_paths_are_consistent(seed):
    g = random_embedding(3 + seed % 8, 10 + seed % 10, seed)
    ap = AllPairs(g)
    for u in range(g.n):
        for v in range(g.n):
            p = ap.path(u, v)
            assert sum(g.weights[e] for e in p) == ap.dist(u, v)
            # uniqueness makes the two directions agree
            assert ap.mask(u, v) == ap.mask(v, u)
            assert sum(1 << e for e in p) == ap.mask(u, v)


def test_ties_prefer_lower_edge_indices():
    g = torus_grid(4)  # all weights 1, many ties
    t = dijkstra(g, 0)
    for v in range(g.n):
        w = t.dist[v]
        # the chosen path has the smallest mask among equal-weight alternatives
        alt = dijkstra(g, v)
        assert alt.mask[0] == t.mask[v] and alt.dist[0] == w


def test_loops_ignored_and_skip():
    g = random_embedding(1, 3, 0, loops=True)
    assert adjacency(g) == [[]]
    h = torus_grid(3)
    w, edges = shortest_path(h, 0, 1)
    assert w == 1
    w2, edges2 = shortest_path(h, 0, 1, skip={edges[0]})
    assert w2 == 2 and edges[0] not in edges2


def test_unreachable():
    g = torus_grid(3)
    skip = {e for e, (u, v) in enumerate(g.ends) if 0 in (u, v)}
    assert shortest_path(g, 0, 4, skip=skip) is None

"""Shortest paths with a deterministic, consistent tie-break.

Path costs are compared as ``(weight, mask)`` where ``mask`` is the set of
edge indices on the path packed into an int.  Comparing masks as integers
is the same as perturbing edge ``k`` by ``eps * 2**k`` for an infinitesimal
``eps``: the perturbation is additive, so every subpath of a chosen path is
itself chosen and shortest paths become unique.  Shortest-path trees built
this way are mutually consistent, which the Horton/isometric machinery needs.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .surface import EmbeddedGraph


def adjacency(g: EmbeddedGraph, skip: frozenset | set = frozenset()) -> list[list[tuple[int, int]]]:
    """Per-vertex ``(edge, neighbour)`` lists; loops never lie on shortest paths."""
    adj: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]
    for e, (u, v) in enumerate(g.ends):
        if u == v or e in skip:
            continue
        adj[u].append((e, v))
        adj[v].append((e, u))
    return adj


@dataclass
class ShortestPathTree:
    source: int
    dist: list  # weight to each vertex (None if unreachable)
    mask: list  # edge set of the tree path, as an int
    pred: list  # edge into each vertex on the tree path (-1 at the source)

    def path(self, g: EmbeddedGraph, v: int) -> list[int]:
        """Edges of the tree path from ``v`` back to the source."""
        out = []
        while v != self.source:
            e = self.pred[v]
            if e < 0:
                raise ValueError(f"vertex {v} is unreachable from {self.source}")
            out.append(e)
            v = g.other_end(e, v)
        return out


def dijkstra(g: EmbeddedGraph, source: int, adj=None, skip=frozenset()) -> ShortestPathTree:
    if adj is None:
        adj = adjacency(g, skip)
    weights = g.weights
    n = g.n
    dist: list = [None] * n
    mask: list = [0] * n
    pred = [-1] * n
    done = [False] * n
    dist[source] = 0
    heap = [(0, 0, source)]
    while heap:
        w, x, u = heapq.heappop(heap)
        if done[u]:
            continue
        done[u] = True
        for e, v in adj[u]:
            if done[v]:
                continue
            bit = 1 << e
            if x & bit:
                continue
            nw = w + weights[e]
            nx = x | bit
            dv = dist[v]
            if dv is None or nw < dv or (nw == dv and nx < mask[v]):
                dist[v] = nw
                mask[v] = nx
                pred[v] = e
                heapq.heappush(heap, (nw, nx, v))
    return ShortestPathTree(source, dist, mask, pred)


def shortest_path(g: EmbeddedGraph, s: int, t: int, skip=frozenset()) -> tuple[float, list[int]] | None:
    """The unique shortest ``s``-``t`` path avoiding ``skip``; None if there is none."""
    tree = dijkstra(g, s, skip=skip)
    if tree.dist[t] is None:
        return None
    return tree.dist[t], tree.path(g, t)


class AllPairs:
    """One shortest-path tree per source vertex."""

    def __init__(self, g: EmbeddedGraph):
        self.g = g
        adj = adjacency(g)
        self.trees = [dijkstra(g, s, adj) for s in range(g.n)]

    def dist(self, u: int, v: int):
        return self.trees[u].dist[v]

    def mask(self, u: int, v: int) -> int:
        return self.trees[u].mask[v]

    def path(self, u: int, v: int) -> list[int]:
        """Edges of sigma(u, v), listed from ``v`` back to ``u``."""
        return self.trees[u].path(self.g, v)


def all_pairs_shortest(g: EmbeddedGraph) -> AllPairs:
    return AllPairs(g)

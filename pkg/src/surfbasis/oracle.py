"""Brute-force reference answers for small instances.

Everything here is deliberately independent of the signature machinery:
the cycle space comes from fundamental cycles of a BFS tree, independence
is plain Gaussian elimination on edge masks, and homology is decided by
whether a cycle lies in the span of the interior face boundaries.
"""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass

from .gf2 import XorBasis, bits_of
from .surface import EmbeddedGraph

MAX_DIM = 20


class OracleLimitError(ValueError):
    """The cycle space is too large to enumerate."""


def _weight(g: EmbeddedGraph, mask: int):
    return sum(g.weights[e] for e in bits_of(mask))


def fundamental_cycles(g: EmbeddedGraph) -> list[int]:
    parent_edge = [-1] * g.n
    seen = [False] * g.n
    seen[0] = True
    order = deque([0])
    adj: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]
    for e, (u, v) in enumerate(g.ends):
        adj[u].append((e, v))
        if u != v:
            adj[v].append((e, u))
    tree = set()
    while order:
        u = order.popleft()
        for e, v in adj[u]:
            if not seen[v]:
                seen[v] = True
                parent_edge[v] = e
                tree.add(e)
                order.append(v)
    to_root = [0] * g.n

    def path(v: int) -> int:
        m = 0
        while parent_edge[v] >= 0:
            e = parent_edge[v]
            m ^= 1 << e
            a, b = g.ends[e]
            v = a if b == v else b
        return m

    for v in range(g.n):
        to_root[v] = path(v)
    out = []
    for e, (u, v) in enumerate(g.ends):
        if e not in tree:
            out.append(to_root[u] ^ to_root[v] ^ (1 << e))
    return out


@dataclass
class CycleSpaceEnumeration:
    graph: EmbeddedGraph
    dim: int
    elements: list  # every element of the cycle space, as an edge mask
    weights: list

    def __len__(self) -> int:
        return len(self.elements)


def enumerate_cycle_space(g: EmbeddedGraph, max_dim: int = MAX_DIM) -> CycleSpaceEnumeration:
    base = fundamental_cycles(g)
    d = len(base)
    if d > max_dim:
        raise OracleLimitError(f"cycle space dimension {d} exceeds {max_dim}")
    elems = [0]
    cur = 0
    for i in range(1, 1 << d):
        # Gray code: flip the generator at the lowest set bit of i
        cur ^= base[(i & -i).bit_length() - 1]
        elems.append(cur)
    weights = [_weight(g, x) for x in elems]
    return CycleSpaceEnumeration(g, d, elems, weights)


def face_boundaries(g: EmbeddedGraph, interior_only: bool = True) -> list[int]:
    out = []
    for f in range(g.face_count):
        if interior_only and f in g.boundary:
            continue
        m = 0
        for e in g.face_edges(f):
            m ^= 1 << e
        out.append(m)
    return out


def null_space_basis(g: EmbeddedGraph) -> XorBasis:
    """Span of the boundaries of the interior faces (all faces when ``b = 0``)."""
    basis = XorBasis()
    for m in face_boundaries(g):
        basis.add(m)
    return basis


def is_null_homologous(g: EmbeddedGraph, mask: int, basis: XorBasis | None = None) -> bool:
    if basis is None:
        basis = null_space_basis(g)
    return basis.reduce(mask) == 0


def homologous(g: EmbeddedGraph, a: int, b: int, basis: XorBasis | None = None) -> bool:
    return is_null_homologous(g, a ^ b, basis)


def homology_rank(g: EmbeddedGraph) -> int:
    return g.m - g.n + 1 - len(null_space_basis(g))


def _dijkstra(g: EmbeddedGraph, s: int, adj) -> tuple[list, list, list]:
    """Plain Dijkstra; also returns the vertices in the order they settled."""
    dist = [None] * g.n
    pred = [-1] * g.n
    dist[s] = 0
    heap = [(0, s)]
    done = [False] * g.n
    settled = []
    while heap:
        d, u = heapq.heappop(heap)
        if done[u]:
            continue
        done[u] = True
        settled.append(u)
        for e, v in adj[u]:
            nd = d + g.weights[e]
            if dist[v] is None or nd < dist[v]:
                dist[v] = nd
                pred[v] = e
                heapq.heappush(heap, (nd, v))
    return dist, pred, settled


def horton_set(g: EmbeddedGraph) -> list[int]:
    """Simple cycles made of two shortest paths from a root plus one edge."""
    adj: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]
    for e, (u, v) in enumerate(g.ends):
        if u != v:
            adj[u].append((e, v))
            adj[v].append((e, u))
    out = set()
    for x in range(g.n):
        dist, pred, settled = _dijkstra(g, x, adj)
        pm = [0] * g.n
        for v in settled[1:]:
            e = pred[v]
            pm[v] = pm[g.other_end(e, v)] | (1 << e)
        for e, (u, v) in enumerate(g.ends):
            if pred[u] == e or pred[v] == e:
                continue
            if u == v:
                if u == x:
                    out.add(1 << e)
                continue
            a, b = pm[u], pm[v]
            if a & b:
                continue
            out.add(a ^ b ^ (1 << e))
    return sorted(out)


def _candidates(g: EmbeddedGraph) -> list[int]:
    d = g.m - g.n + 1
    if d <= MAX_DIM:
        return [x for x in enumerate_cycle_space(g).elements if x]
    return horton_set(g)


def _sorted(g: EmbeddedGraph, cands: list[int]) -> list[tuple]:
    return sorted((_weight(g, c), c) for c in cands)


def greedy_mcb(g: EmbeddedGraph) -> tuple[list[int], float]:
    """Minimum cycle basis by the matroid greedy algorithm."""
    d = g.m - g.n + 1
    basis = XorBasis()
    chosen = []
    total = 0
    for w, c in _sorted(g, _candidates(g)):
        if len(chosen) == d:
            break
        if basis.add(c):
            chosen.append(c)
            total += w
    return chosen, total


def greedy_mhb(g: EmbeddedGraph) -> tuple[list[int], float]:
    """Minimum homology basis: greedy over cycles, independence modulo face boundaries."""
    basis = null_space_basis(g)
    beta = g.m - g.n + 1 - len(basis)
    chosen = []
    total = 0
    if beta == 0:
        return chosen, total
    for w, c in _sorted(g, _candidates(g)):
        if basis.add(c):
            chosen.append(c)
            total += w
            if len(chosen) == beta:
                break
    return chosen, total

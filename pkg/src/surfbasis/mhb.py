"""Minimum homology basis (orientable or not) via the cyclic double cover.

For a homology support vector ``S`` the double cover has vertices
``(v, z)``; edge ``uv`` lifts to ``(u, z)(v, z ^ p)`` with ``p`` the parity
of ``S`` against the edge's homology signature.  A closed walk has odd
product with ``S`` exactly when its lift switches sheets, so the cheapest
such cycle through ``s`` is a shortest ``(s, 0)``-``(s, 1)`` path.  Every
cycle with non-trivial homology meets one of a few shortest paths (the
path system below), so only their vertices need to be tried as ``s``.
"""

from __future__ import annotations

import heapq
import time
from dataclasses import dataclass, field
from functools import cached_property

from .gf2 import bits_of, parity
from .paths import ShortestPathTree, dijkstra
from .signatures import CoPathSystem, decompose, homology_signature
from .sparsifier import sparsify
from .support import Basis, InvariantError, extend_basis
from .surface import EmbeddedGraph, split_cycles


class DoubleCover:
    """The two-sheeted cover of ``g`` determined by a homology support vector."""

    def __init__(self, g: EmbeddedGraph, S: int, cp: CoPathSystem):
        self.base = g
        self.S = S
        hm = cp.hmask
        self.parity = [parity(S & cp.edge_sig[e] & hm) for e in range(g.m)]

    # vertex (v, z) is 2v + z, edge (e, z) is 2e + z
    @property
    def n(self) -> int:
        return 2 * self.base.n

    @property
    def m(self) -> int:
        return 2 * self.base.m

    @staticmethod
    def project(x: int) -> int:
        return x >> 1

    def edge_ends(self, e: int, z: int) -> tuple[int, int]:
        u, v = self.base.ends[e]
        return 2 * u + z, 2 * v + (z ^ self.parity[e])

    def lift_walk(self, start: int, edges: list[int], z: int = 0) -> list[int]:
        """Lift a walk in the base graph starting at ``(start, z)``; returns cover vertices."""
        g = self.base
        out = [2 * start + z]
        cur = start
        for e in edges:
            u, v = g.ends[e]
            if cur not in (u, v):
                raise ValueError("edges do not form a walk")
            cur = v if cur == u else u
            z ^= self.parity[e]
            out.append(2 * cur + z)
        return out

    def end_sheet(self, edges, z: int = 0) -> int:
        for e in edges:
            z ^= self.parity[e]
        return z

    @cached_property
    def embedding(self) -> EmbeddedGraph:
        """The cover as an embedded graph; faces and boundaries are the lifts of the base's."""
        g = self.base

        def lifted(d: int, sheet: int) -> int:
            e = d >> 1
            if d & 1 == 0:
                return 2 * (2 * e + sheet)
            return 2 * (2 * e + (sheet ^ self.parity[e])) + 1

        rotation = []
        for v in range(g.n):
            for sheet in (0, 1):
                rotation.append([lifted(d, sheet) for d in g.rotation[v]])
        ids, ends, weights, sigs = [], [], [], []
        for e in range(g.m):
            for sheet in (0, 1):
                ids.append(f"{g.edge_ids[e]}@{sheet}")
                ends.append(self.edge_ends(e, sheet))
                weights.append(g.weights[e])
                sigs.append(g.sigs[e])
        markers = []
        for s in g.boundary_markers():
            for sheet in (0, 1):
                markers.append(2 * lifted(s >> 1, sheet) + (s & 1))
        return EmbeddedGraph(
            self.n, ids, ends, weights, sigs, rotation, markers,
            require_connected=False, strict_boundary=False,
        )

    def is_connected(self) -> bool:
        return self.embedding.component_count() == 1

    @property
    def face_count(self) -> int:
        return self.embedding.face_count

    @property
    def boundary_count(self) -> int:
        return self.embedding.b

    @property
    def euler(self) -> int:
        """Euler characteristic of the cover with its boundary disks removed."""
        h = self.embedding
        return h.n - h.m + h.face_count - h.b


def build_double_cover(g: EmbeddedGraph, S: int, cp: CoPathSystem) -> DoubleCover:
    return DoubleCover(g, S, cp)


@dataclass
class ShortestPathSystem:
    """Shortest paths from one root such that every non-null-homologous cycle meets one."""

    root: int
    paths: list  # vertex lists, root first
    vertices: list  # distinct vertices on the paths, sorted


def _tree_path(tree: ShortestPathTree, g: EmbeddedGraph, v: int) -> list[int]:
    out = [v]
    while v != tree.source:
        v = g.other_end(tree.pred[v], v)
        out.append(v)
    return out[::-1]


def shortest_path_system(
    g: EmbeddedGraph, cp: CoPathSystem | None = None, tree: ShortestPathTree | None = None
) -> ShortestPathSystem:
    """Root paths of a shortest-path tree to the ends of every leftover edge.

    The leftover edges close the tree paths into loops that cut the capped
    surface into a disk, so a cycle avoiding them can only wind around
    holes.  With several boundary faces one more root path per boundary
    face catches those.  ``cp`` must be built on ``tree``.
    """
    if tree is None:
        tree = dijkstra(g, 0)
    if cp is None:
        cp = decompose(g, [e for e in tree.pred if e >= 0])
    targets = []
    for e in cp.decomposition.leftover:
        targets.extend(g.ends[e])
    if cp.beta and g.b >= 2:
        for f in sorted(g.boundary):
            targets.append(min(g.face_vertices(f)))
    paths = [_tree_path(tree, g, v) for v in dict.fromkeys(targets)]
    verts = sorted({v for p in paths for v in p})
    return ShortestPathSystem(tree.source, paths, verts)


def _cover_adjacency(g: EmbeddedGraph) -> list[list[tuple[int, int, float]]]:
    adj: list[list[tuple[int, int, float]]] = [[] for _ in range(g.n)]
    for e, (u, v) in enumerate(g.ends):
        w = g.weights[e]
        adj[u].append((v, e, w))
        if u != v:
            adj[v].append((u, e, w))
    return adj


def _sheet_path(adj, par, n: int, s: int, bound) -> tuple | None:
    """Shortest (s,0) -> (s,1) path in the cover, abandoned once it exceeds ``bound``.

    Returns ``(weight, edges)`` with base-graph edge indices, or None.
    """
    src, dst = 2 * s, 2 * s + 1
    inf = float("inf")
    dist = [inf] * (2 * n)
    pred_edge = [-1] * (2 * n)
    pred_node = [-1] * (2 * n)
    dist[src] = 0
    heap = [(0, src)]
    pop, push = heapq.heappop, heapq.heappush
    while heap:
        d, x = pop(heap)
        if d > dist[x]:
            continue
        if bound is not None and d > bound:
            return None
        if x == dst:
            edges = []
            while x != src:
                edges.append(pred_edge[x])
                x = pred_node[x]
            return d, edges
        z = x & 1
        for u, e, w in adj[x >> 1]:
            y = 2 * u + (z ^ par[e])
            nd = d + w
            if nd < dist[y]:
                dist[y] = nd
                pred_edge[y] = e
                pred_node[y] = x
                push(heap, (nd, y))
    return None


def select_min_homology_cycle(
    g: EmbeddedGraph,
    S: int,
    cp: CoPathSystem,
    psys: ShortestPathSystem | None = None,
    adj=None,
) -> int:
    """Cheapest cycle (edge mask) whose homology signature has odd product with ``S``."""
    if not S & cp.hmask:
        raise ValueError("support vector is zero")
    if psys is None:
        psys = shortest_path_system(g, cp)
    if adj is None:
        adj = _cover_adjacency(g)
    par = DoubleCover(g, S, cp).parity
    best = None  # (weight, mask)
    for s in psys.vertices:
        found = _sheet_path(adj, par, g.n, s, best[0] if best else None)
        if found is None:
            continue
        odd = 0
        for e in found[1]:
            odd ^= 1 << e
        # the projection is a closed walk with odd product; keep an odd simple piece
        for piece in split_cycles(g, bits_of(odd)):
            mask = 0
            for e in piece:
                mask |= 1 << e
            if parity(homology_signature(mask, cp) & S):
                key = (g.weight(piece), mask)
                if best is None or key < best:
                    best = key
    if best is None:
        raise InvariantError("no cycle with odd product found through the path system")
    return best[1]


@dataclass
class MhbState:
    residual: EmbeddedGraph | None = None
    copaths: CoPathSystem | None = None
    paths: ShortestPathSystem | None = None
    timings: dict = field(default_factory=dict)


def minimum_homology_basis(
    g: EmbeddedGraph,
    recursion: str = "balanced",
    check: bool = False,
    state: MhbState | None = None,
) -> Basis:
    if state is None:
        state = MhbState()
    clock = time.perf_counter()

    def lap(name: str) -> None:
        nonlocal clock
        now = time.perf_counter()
        state.timings[name] = state.timings.get(name, 0.0) + now - clock
        clock = now

    out = sparsify(g)
    forced = list(out.forced_mhb)
    lap("sparsify")
    res = out.graph
    if res is None:
        return Basis(g, forced, len(forced))
    res = res.punctured()
    tree = dijkstra(res, 0)
    cp = decompose(res, [e for e in tree.pred if e >= 0])
    state.residual, state.copaths = res, cp
    if cp.beta == 0:
        return Basis(g, forced, len(forced))
    psys = shortest_path_system(res, cp, tree)
    state.paths = psys
    adj = _cover_adjacency(res)
    lap("setup")
    cycles, _, _ = extend_basis(
        cp.beta,
        lambda S: select_min_homology_cycle(res, S, cp, psys, adj),
        lambda c: homology_signature(c, cp),
        recursion=recursion,
        check=check,
    )
    lap("select")
    return Basis(g, forced + [out.lift(c) for c in cycles], len(forced))

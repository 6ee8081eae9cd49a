"""Tree-coforest decompositions, co-paths and cycle/homology signatures.

Edge sets are handled as packed ints (bit ``k`` is edge ``k``); the public
functions also accept any iterable of edge indices.  A signature is an int
whose bit ``i`` (0-based) records the parity of the intersection with the
co-path ``p_{i+1}``; the homology signature is the low ``beta`` bits.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable

from .gf2 import bits_of, rank
from .surface import EmbeddedGraph, EmbeddingError, _DSU


def as_mask(edges) -> int:
    if isinstance(edges, int):
        return edges
    m = 0
    for e in edges:
        m |= 1 << e
    return m


def edges_of(mask: int) -> list[int]:
    return list(bits_of(mask))


@dataclass(frozen=True)
class TreeCoforest:
    tree: frozenset  # spanning tree T
    coforest: frozenset  # C: dual forest, one boundary face per component
    leftover: tuple  # L = e_1 .. e_beta, in increasing edge order

    @property
    def beta(self) -> int:
        return len(self.leftover)


def bfs_tree(g: EmbeddedGraph, root: int = 0) -> frozenset:
    seen = [False] * g.n
    seen[root] = True
    tree = set()
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for d in g.rotation[u]:
            w = g.dart_vertex(d ^ 1)
            if not seen[w]:
                seen[w] = True
                tree.add(d >> 1)
                queue.append(w)
    return frozenset(tree)


def tree_coforest(g: EmbeddedGraph, tree: Iterable[int] | None = None) -> TreeCoforest:
    """Split the edges into a spanning tree, a dual coforest and leftovers.

    The coforest is grown greedily in edge order over the faces, with all
    boundary faces merged up front so each of its components holds exactly
    one boundary face.
    """
    if g.b == 0:
        raise EmbeddingError("tree-coforest decomposition needs a boundary face (puncture first)")
    if tree is None:
        tree = bfs_tree(g)
    tree = frozenset(tree)
    if len(tree) != g.n - 1:
        raise EmbeddingError("tree does not span the vertices")
    dsu = _DSU(g.face_count)
    bnd = sorted(g.boundary)
    for f in bnd[1:]:
        dsu.union(bnd[0], f)
    co, left = [], []
    for e in range(g.m):
        if e in tree:
            continue
        f1, f2 = g.side_faces(e)
        if dsu.union(f1, f2):
            co.append(e)
        else:
            left.append(e)
    d = TreeCoforest(tree, frozenset(co), tuple(left))
    if d.beta != g.stats.beta:
        raise EmbeddingError(f"leftover count {d.beta} differs from beta {g.stats.beta}")
    return d


@dataclass
class CoPathSystem:
    """Co-paths ``p_1 .. p_dim`` and the per-edge signatures they induce."""

    graph: EmbeddedGraph
    decomposition: TreeCoforest
    beta: int
    copaths: list  # edge masks, index i <-> p_{i+1}
    faces: list  # f_{beta+1} .. f_dim (interior faces in trace order)
    edge_sig: list  # signature of every edge
    tree_mask: list = field(default_factory=list)  # vertex -> edge mask of its T-path to vertex 0

    @property
    def dim(self) -> int:
        return len(self.copaths)

    @property
    def hmask(self) -> int:
        return (1 << self.beta) - 1

    def signature(self, edges) -> int:
        return cycle_signature(edges, self)

    def homology(self, edges) -> int:
        return homology_signature(edges, self)

    def fundamental_cycle(self, i: int) -> int:
        """zeta_{i+1}: the T-path between the ends of leftover edge i, plus the edge."""
        e = self.decomposition.leftover[i]
        u, v = self.graph.ends[e]
        return self.tree_mask[u] ^ self.tree_mask[v] ^ (1 << e)


def _root_tree(n_nodes: int, roots, adj) -> list:
    """BFS a forest from ``roots``; per node, the edge mask of its path to a root."""
    pmask = [None] * n_nodes
    for r in roots:
        pmask[r] = 0
        queue = deque([r])
        while queue:
            x = queue.popleft()
            for e, y in adj[x]:
                if pmask[y] is None:
                    pmask[y] = pmask[x] | (1 << e)
                    queue.append(y)
    return pmask


def copaths(g: EmbeddedGraph, d: TreeCoforest) -> CoPathSystem:
    nf = g.face_count
    fadj: list[list[tuple[int, int]]] = [[] for _ in range(nf)]
    for e in d.coforest:
        f1, f2 = g.side_faces(e)
        fadj[f1].append((e, f2))
        fadj[f2].append((e, f1))
    froot = _root_tree(nf, sorted(g.boundary), fadj)
    if any(x is None for x in froot):
        raise EmbeddingError("coforest does not reach every face")

    vadj: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]
    for e in d.tree:
        u, v = g.ends[e]
        vadj[u].append((e, v))
        vadj[v].append((e, u))
    vroot = _root_tree(g.n, [0], vadj)

    paths = []
    for e in d.leftover:
        f1, f2 = g.side_faces(e)
        paths.append((1 << e) ^ froot[f1] ^ froot[f2])
    faces = g.interior_faces
    for f in faces:
        paths.append(froot[f])
    dim = g.m - g.n + 1
    if len(paths) != dim:
        raise EmbeddingError(f"{len(paths)} co-paths for a cycle space of dimension {dim}")

    edge_sig = [0] * g.m
    for i, p in enumerate(paths):
        for e in bits_of(p):
            edge_sig[e] |= 1 << i
    return CoPathSystem(g, d, d.beta, paths, faces, edge_sig, vroot)


def decompose(g: EmbeddedGraph, tree: Iterable[int] | None = None) -> CoPathSystem:
    return copaths(g, tree_coforest(g, tree))


def cycle_signature(edges, cp: CoPathSystem) -> int:
    sig = 0
    es = cp.edge_sig
    if isinstance(edges, int):
        edges = bits_of(edges)
    for e in edges:
        sig ^= es[e]
    return sig


def homology_signature(edges, cp: CoPathSystem) -> int:
    return cycle_signature(edges, cp) & cp.hmask


def face_boundary_mask(g: EmbeddedGraph, f: int) -> int:
    m = 0
    for e in g.face_edges(f):
        m ^= 1 << e
    return m


def reconstruct_cycle(w: int, g: EmbeddedGraph, d: TreeCoforest, cp: CoPathSystem) -> int:
    """The unique cycle (as an edge mask) whose signature is ``w``."""
    out = 0
    beta = d.beta
    for i in bits_of(w):
        if i < beta:
            out ^= cp.fundamental_cycle(i)
        else:
            out ^= face_boundary_mask(g, cp.faces[i - beta])
    return out


def signature_rank(cycles, cp: CoPathSystem, homology: bool = False) -> int:
    f = homology_signature if homology else cycle_signature
    return rank(f(c, cp) for c in cycles)

"""Removal of faces of degree one and two before the main basis computation.

A face bounded by a single loop forces that loop into the cycle basis.  A
face bounded by two distinct edges ``e``, ``e'`` (``e'`` the heavier, ties
broken by edge index) forces the cycle made of ``e'`` and the shortest path
between its ends that avoids ``e'``; ``e'`` can then be deleted without
changing the rest of the minimum cycle basis, and no minimum homology basis
needs it.  Faces are processed from a worklist until none is left, since a
deletion can create new thin faces.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .paths import AllPairs, all_pairs_shortest, shortest_path
from .surface import EmbeddedGraph

__all__ = ["SparsifyOutcome", "sparsify", "all_pairs_shortest", "AllPairs"]


@dataclass
class SparsifyOutcome:
    graph: EmbeddedGraph | None  # residual embedding; None for a terminal case
    terminal: str | None  # 'sphere-path', 'projective-loop', 'single-loop' or None
    forced_mcb: list = field(default_factory=list)  # edge masks in the input graph
    forced_mhb: list = field(default_factory=list)
    origin: list = field(default_factory=list)  # residual edge -> input edge

    def lift(self, mask: int) -> int:
        """Map a residual edge mask back to input edge indices."""
        out = 0
        k = 0
        while mask:
            if mask & 1:
                out |= 1 << self.origin[k]
            mask >>= 1
            k += 1
        return out


def _thin_face(g: EmbeddedGraph) -> int | None:
    for f in range(g.face_count):
        if f not in g.boundary and 1 <= g.face_degree(f) <= 2:
            return f
    return None


def sparsify(g: EmbeddedGraph) -> SparsifyOutcome:
    """Strip thin interior faces; boundary faces are left alone."""
    cur = g
    origin = list(range(g.m))
    forced_mcb: list[int] = []
    forced_mhb: list[int] = []

    def done(terminal: str | None) -> SparsifyOutcome:
        graph = None if terminal else cur
        return SparsifyOutcome(graph, terminal, forced_mcb, forced_mhb, origin if graph else [])

    while True:
        f = _thin_face(cur)
        if f is None:
            return done(None)
        edges = cur.face_edges(f)
        if len(edges) == 1:
            (e,) = edges
            forced_mcb.append(1 << origin[e])
            if cur.m == 1:
                return done("single-loop")
            kill = e
        elif edges[0] == edges[1]:
            e = edges[0]
            u, v = cur.ends[e]
            if u != v:
                return done("sphere-path")
            forced_mcb.append(1 << origin[e])
            forced_mhb.append(1 << origin[e])
            return done("projective-loop")
        else:
            e1, e2 = edges
            heavy = max(e1, e2, key=lambda k: (cur.weights[k], origin[k]))
            u, v = cur.ends[heavy]
            cyc = 1 << origin[heavy]
            if u != v:
                found = shortest_path(cur, u, v, skip=frozenset([heavy]))
                assert found is not None, "parallel edge guarantees a path"
                for k in found[1]:
                    cyc |= 1 << origin[k]
            forced_mcb.append(cyc)
            kill = heavy
        cur, keep = cur.delete_edges([kill])
        origin = [origin[k] for k in keep]

"""Minimum cycle basis of a graph embedded on an orientable surface.

Pipeline: sparsify, puncture one face (it becomes ``f_inf``), build the
signature system, collect the distinct isometric cycles from the Horton
candidates, arrange each homology class in a region tree, then run the
support-vector recursion where every selection is a walk over the trees.

Cycles are edge masks (ints).  Candidate order and tie-breaks use the key
``(weight, mask)``, the same total order the shortest-path routines use.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .gf2 import bits_of, parity
from .paths import AllPairs, all_pairs_shortest
from .signatures import CoPathSystem, cycle_signature, decompose
from .sparsifier import sparsify
from .support import Basis, InvariantError, extend_basis
from .surface import EmbeddedGraph, EmbeddingError, order_cycle


class NonOrientableError(EmbeddingError):
    """The minimum cycle basis routine only handles orientable surfaces."""


class CrossingError(InvariantError):
    """Two isometric cycles of one homology class cross (needs unique shortest paths)."""


@dataclass(frozen=True)
class HortonCycle:
    root: int
    edge: int
    mask: int
    weight: float


def horton_candidates(g: EmbeddedGraph, ap: AllPairs | None = None) -> list[HortonCycle]:
    """``sigma(x,u) + uv + sigma(x,v)`` for every root ``x`` and non-tree edge ``uv``.

    Candidates whose two tree paths share an edge are not simple and are skipped.
    """
    if ap is None:
        ap = all_pairs_shortest(g)
    out = []
    weights = g.weights
    for x in range(g.n):
        t = ap.trees[x]
        tree_edges = set(t.pred)
        dist, mask = t.dist, t.mask
        for e, (u, v) in enumerate(g.ends):
            if e in tree_edges or dist[u] is None:
                continue
            mu, mv = mask[u], mask[v]
            if mu & mv:
                continue
            if u == v and u != x:
                continue
            out.append(HortonCycle(x, e, mu ^ mv ^ (1 << e), dist[u] + dist[v] + weights[e]))
    return out


def is_isometric(g: EmbeddedGraph, mask: int, ap: AllPairs) -> bool:
    """Direct check: the cycle holds a shortest path between every pair of its vertices."""
    verts, walk = order_cycle(g, bits_of(mask))
    k = len(walk)
    pos = [0]
    for e in walk:
        pos.append(pos[-1] + g.weights[e])
    total = pos[-1]
    for i in range(k):
        for j in range(i + 1, k):
            along = pos[j] - pos[i]
            if min(along, total - along) != ap.dist(verts[i], verts[j]):
                return False
    return True


@dataclass(frozen=True)
class IsoCycle:
    mask: int
    weight: float
    signature: int  # full cycle signature
    hclass: int  # homology signature

    @property
    def key(self) -> tuple:
        return (self.weight, self.mask)


@dataclass
class IsometricCycleSet:
    cycles: list  # IsoCycle, sorted by key
    classes: dict  # homology signature -> list of indices into ``cycles``

    def __len__(self) -> int:
        return len(self.cycles)


def isometric_cycles(cands: list[HortonCycle], cp: CoPathSystem) -> IsometricCycleSet:
    """Distinct isometric cycles among the candidates.

    With unique shortest paths a simple cycle is isometric exactly when the
    candidate list produces it once from each of its vertices, so counting
    realizations replaces a pairwise distance check.
    """
    count: dict[int, int] = {}
    weight: dict[int, float] = {}
    for c in cands:
        count[c.mask] = count.get(c.mask, 0) + 1
        weight[c.mask] = c.weight
    keep = sorted(
        (weight[mk], mk) for mk, cnt in count.items() if cnt == mk.bit_count()
    )
    cycles = []
    classes: dict[int, list[int]] = {}
    hm = cp.hmask
    for w, mk in keep:
        sig = cycle_signature(mk, cp)
        classes.setdefault(sig & hm, []).append(len(cycles))
        cycles.append(IsoCycle(mk, w, sig, sig & hm))
    return IsometricCycleSet(cycles, classes)


@dataclass
class RegionTree:
    """Nesting tree of the cycles of one homology class.

    Node 0 is the root (the region holding ``f_inf``).  Every other node
    ``v`` hangs below ``parent[v]`` through the cycle ``edge_cycle[v]``, and
    ``node_mask[v]`` lists its faces as signature bits.  The faces below the
    edge into ``v`` are exactly the faces bounded by that cycle (trivial
    class) or by its sum with the representative ``rep`` (other classes).
    """

    hclass: int
    parent: list
    edge_cycle: list  # index into the cycle set; -1 for the root
    node_mask: list
    order: list  # non-root nodes, children before parents
    rep: int | None = None
    rep_signature: int = 0
    below: list = field(default_factory=list)  # per node, mask of all faces below it

    @property
    def trivial(self) -> bool:
        return self.rep is None

    def leaves(self) -> list[int]:
        has_child = set(self.parent[1:])
        return [v for v in range(1, len(self.parent)) if v not in has_child]


def _laminar_tree(items: list[tuple[int, int]], full: int) -> tuple[list, list, list, list]:
    """Tree of a laminar family of face masks.

    ``items`` holds ``(mask, cycle)`` pairs; node ``i + 1`` is item ``i``
    after sorting by size.  Raises :class:`CrossingError` if two masks
    overlap without nesting.
    """
    items = sorted(items, key=lambda it: (it[0].bit_count(), it[0]))
    k = len(items)
    parent = [-1] + [0] * k
    for i in range(k):
        a = items[i][0]
        if not a:
            raise CrossingError("a cycle bounds no faces")
        for j in range(i + 1, k):
            b = items[j][0]
            common = a & b
            if common == a:
                if a == b:
                    raise CrossingError("two cycles bound the same faces")
                parent[i + 1] = j + 1
                break
            if common:
                raise CrossingError("two cycles of one class cross")
    node_mask = [full] + [it[0] for it in items]
    for v in range(1, k + 1):
        node_mask[parent[v]] &= ~items[v - 1][0]
    below = [full] + [it[0] for it in items]
    return parent, [-1] + [it[1] for it in items], node_mask, below


def build_region_trees(iso: IsometricCycleSet, cp: CoPathSystem) -> dict[int, RegionTree]:
    full = ((1 << cp.dim) - 1) & ~cp.hmask
    trees = {}
    for cls, idxs in iso.classes.items():
        cyc = iso.cycles
        if cls == 0:
            # the interior-face bits of a null-homologous signature are the faces it bounds
            items = [(cyc[i].signature & full, i) for i in idxs]
            parent, ecyc, node_mask, below = _laminar_tree(items, full)
            tree = RegionTree(cls, parent, ecyc, node_mask, list(range(1, len(parent))), below=below)
        else:
            # pick a cycle next to the root region: relative to any member, the
            # members farthest away on either side are the two root neighbours
            ref = cyc[idxs[0]].signature
            rep = max(idxs, key=lambda i: (((cyc[i].signature ^ ref) & full).bit_count(), -i))
            rs = cyc[rep].signature
            items = [((cyc[i].signature ^ rs) & full, i) for i in idxs if i != rep]
            parent, ecyc, node_mask, below = _laminar_tree(items, full)
            for v in range(1, len(parent) - 1):
                if parent[v] != v + 1:
                    raise CrossingError("homologous cycles do not form a chain")
            tree = RegionTree(
                cls, parent, ecyc, node_mask, list(range(1, len(parent))), rep, rs, below
            )
        trees[cls] = tree
    return trees


def select_min_cycle(S: int, trees: dict[int, RegionTree], iso: IsometricCycleSet) -> int:
    """Cheapest isometric cycle with odd inner product with ``S`` (as an edge mask)."""
    if not S:
        raise ValueError("support vector is zero")
    cyc = iso.cycles
    best = None
    for tree in trees.values():
        nodes = len(tree.parent)
        z = [0] * nodes
        if tree.trivial:
            for v in tree.order:
                z[v] ^= parity(S & tree.node_mask[v])
                p = tree.parent[v]
                if p > 0:
                    z[p] ^= z[v]
            base = 0
        else:
            base = parity(S & tree.rep_signature)
            if base:
                best = _better(best, cyc[tree.rep])
            acc = base
            for v in tree.order:  # leaf first, walking up the chain
                acc ^= parity(S & tree.node_mask[v])
                z[v] = acc
        for v in tree.order:
            if z[v]:
                best = _better(best, cyc[tree.edge_cycle[v]])
    if best is None:
        raise InvariantError("no isometric cycle has odd product with the support vector")
    return best.mask


def _better(best: IsoCycle | None, c: IsoCycle) -> IsoCycle:
    return c if best is None or c.key < best.key else best


@dataclass
class McbState:
    """Intermediate objects of one run, kept for inspection and tests."""

    residual: EmbeddedGraph | None = None
    copaths: CoPathSystem | None = None
    allpairs: AllPairs | None = None
    isometric: IsometricCycleSet | None = None
    trees: dict | None = None
    timings: dict = field(default_factory=dict)


def minimum_cycle_basis(
    g: EmbeddedGraph,
    recursion: str = "balanced",
    check: bool = False,
    state: McbState | None = None,
) -> Basis:
    import time

    if not g.is_orientable():
        raise NonOrientableError("minimum cycle basis needs an orientable surface")
    if state is None:
        state = McbState()
    clock = time.perf_counter()

    def lap(name: str) -> None:
        nonlocal clock
        now = time.perf_counter()
        state.timings[name] = state.timings.get(name, 0.0) + now - clock
        clock = now

    # boundary faces play no role for cycle bases: fill them all back in
    out = sparsify(g.with_boundary_states([]))
    forced = list(out.forced_mcb)
    lap("sparsify")
    res = out.graph
    if res is None or res.m - res.n + 1 == 0:
        return Basis(g, forced, len(forced))
    res = res.punctured()
    cp = decompose(res)
    ap = all_pairs_shortest(res)
    lap("shortest-paths")
    iso = isometric_cycles(horton_candidates(res, ap), cp)
    lap("isometric")
    trees = build_region_trees(iso, cp)
    lap("region-trees")
    cycles, _, _ = extend_basis(
        cp.dim,
        lambda S: select_min_cycle(S, trees, iso),
        lambda c: cycle_signature(c, cp),
        recursion=recursion,
        check=check,
    )
    lap("select")
    state.residual, state.copaths, state.allpairs = res, cp, ap
    state.isometric, state.trees = iso, trees
    return Basis(g, forced + [out.lift(c) for c in cycles], len(forced))

"""Cellular embeddings of undirected multigraphs on surfaces.

An embedding is stored combinatorially.  Edge ``k`` owns two darts:
``2k`` sits at its tail ``u`` and ``2k + 1`` at its head ``v``.  Each vertex
carries the cyclic order of its darts (the rotation) and each edge an
orientation bit.  Faces are traced with a walk that carries a local
orientation bit, flipped whenever the walk crosses an edge whose bit is 1.

A walk state is a pair ``(dart, z)`` encoded as ``2 * dart + z``.  Every face
owns two state orbits, one per traversal direction.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence


class EmbeddingError(ValueError):
    """Invalid or inconsistent embedding description."""


class ParseError(EmbeddingError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class _DSU:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if rb < ra:
            ra, rb = rb, ra
        self.parent[rb] = ra
        return True


@dataclass(frozen=True)
class TopoStats:
    """Topological invariants of an embedding.

    ``faces`` counts every traced face, boundary faces included, so ``chi``
    is the Euler characteristic of the closed surface obtained by capping
    every boundary component with a disk.  ``chi_with_boundary`` is the
    characteristic of the surface with the ``b`` boundary disks removed.
    """

    n: int
    m: int
    faces: int
    b: int
    chi: int
    genus: int
    orientable: bool
    beta: int

    @property
    def chi_with_boundary(self) -> int:
        return self.chi - self.b


@dataclass(frozen=True)
class DualGraph:
    """One dual vertex per face; dual edge ``k`` joins the faces beside edge ``k``."""

    vertex_count: int
    boundary: frozenset
    edges: tuple  # (face, face) per primal edge index
    edge_ids: tuple


class EmbeddedGraph:
    """Immutable dart-based cellular embedding with weights and boundary faces."""

    def __init__(
        self,
        n: int,
        edge_ids: Sequence[str],
        ends: Sequence[tuple[int, int]],
        weights: Sequence[float],
        sigs: Sequence[int],
        rotation: Sequence[Sequence[int]],
        boundary_states: Iterable[int] = (),
        *,
        require_connected: bool = True,
        strict_boundary: bool = True,
    ):
        m = len(edge_ids)
        if not (len(ends) == len(weights) == len(sigs) == m):
            raise EmbeddingError("edge attribute lists differ in length")
        if len(rotation) != n:
            raise EmbeddingError(f"expected {n} rotations, got {len(rotation)}")
        if n < 1:
            raise EmbeddingError("embedding needs at least one vertex")
        self.n = n
        self.m = m
        self.edge_ids = tuple(edge_ids)
        self.ends = tuple((int(u), int(v)) for u, v in ends)
        self.weights = tuple(weights)
        self.sigs = tuple(int(s) & 1 for s in sigs)
        self.rotation = tuple(tuple(r) for r in rotation)
        if len(set(self.edge_ids)) != m:
            raise EmbeddingError("duplicate edge identifier")
        self.edge_index = {eid: k for k, eid in enumerate(self.edge_ids)}
        for k, w in enumerate(self.weights):
            if w < 0:
                raise EmbeddingError(f"edge {self.edge_ids[k]} has negative weight")

        dart_vertex = [-1] * (2 * m)
        nxt = [-1] * (2 * m)
        prv = [-1] * (2 * m)
        for v, rot in enumerate(self.rotation):
            for i, d in enumerate(rot):
                if not 0 <= d < 2 * m:
                    raise EmbeddingError(f"vertex {v}: unknown dart {d}")
                if dart_vertex[d] != -1:
                    raise EmbeddingError(f"dart {self.dart_name(d)} appears in two rotations")
                dart_vertex[d] = v
                nxt[d] = rot[(i + 1) % len(rot)]
                prv[d] = rot[i - 1]
        for d in range(2 * m):
            if dart_vertex[d] == -1:
                raise EmbeddingError(f"dart {self.dart_name(d)} missing from every rotation")
            expected = self.ends[d >> 1][d & 1]
            if dart_vertex[d] != expected:
                raise EmbeddingError(
                    f"dart {self.dart_name(d)} placed at vertex {dart_vertex[d]}, "
                    f"but the edge end is vertex {expected}"
                )
        self._dart_vertex = dart_vertex
        self._next = nxt
        self._prev = prv

        if require_connected and self.component_count() != 1:
            raise EmbeddingError("graph is disconnected")

        self._trace_faces()

        boundary = set()
        for s in boundary_states:
            if not 0 <= s < 4 * m:
                raise EmbeddingError("boundary marker references an unknown dart")
            f = self._state_face[s]
            if f in boundary:
                if strict_boundary:
                    raise EmbeddingError(
                        f"boundary markers trace face {f} twice (dart {self.dart_name(s >> 1)})"
                    )
                continue
            boundary.add(f)
        self.boundary = frozenset(boundary)
        if strict_boundary and len(self.boundary) > 1:
            seen: dict[int, int] = {}
            for f in sorted(self.boundary):
                for v in set(self.face_vertices(f)):
                    if v in seen and seen[v] != f:
                        raise EmbeddingError(f"boundary faces {seen[v]} and {f} share vertex {v}")
                    seen[v] = f
        self._stats: TopoStats | None = None

    # -- darts -----------------------------------------------------------

    def dart_name(self, d: int) -> str:
        return f"{self.edge_ids[d >> 1]}{'+' if d & 1 else '-'}"

    def dart_vertex(self, d: int) -> int:
        return self._dart_vertex[d]

    def rot_next(self, d: int) -> int:
        return self._next[d]

    def rot_prev(self, d: int) -> int:
        return self._prev[d]

    def other_end(self, e: int, v: int) -> int:
        u, w = self.ends[e]
        return w if u == v else u

    # -- faces -----------------------------------------------------------

    def step(self, state: int) -> int:
        """Advance a face-walk state by one edge."""
        d, z = state >> 1, state & 1
        r = d ^ 1
        z ^= self.sigs[d >> 1]
        nd = self._prev[r] if z else self._next[r]
        return 2 * nd + z

    def reverse_state(self, state: int) -> int:
        d, z = state >> 1, state & 1
        return 2 * (d ^ 1) + (1 ^ z ^ self.sigs[d >> 1])

    def _trace_faces(self) -> None:
        m = self.m
        state_face = [-1] * (4 * m)
        walks: list[tuple[int, ...]] = []
        for start in range(4 * m):
            if state_face[start] >= 0:
                continue
            fi = len(walks)
            walk = []
            s = start
            while True:
                state_face[s] = fi
                walk.append(s)
                s = self.step(s)
                if s == start:
                    break
            for s in walk:
                r = self.reverse_state(s)
                if state_face[r] not in (-1, fi):
                    raise EmbeddingError("face tracing is inconsistent")
                state_face[r] = fi
            walks.append(tuple(walk))
        if m == 0:
            walks.append(())
        self._state_face = state_face
        self.face_walks = tuple(walks)

    @property
    def face_count(self) -> int:
        return len(self.face_walks)

    def face_of_state(self, state: int) -> int:
        return self._state_face[state]

    def face_darts(self, f: int) -> list[int]:
        return [s >> 1 for s in self.face_walks[f]]

    def face_edges(self, f: int) -> list[int]:
        return [s >> 2 for s in self.face_walks[f]]

    def face_degree(self, f: int) -> int:
        return len(self.face_walks[f])

    def face_vertices(self, f: int) -> list[int]:
        return [self._dart_vertex[s >> 1] for s in self.face_walks[f]]

    def face_boundary(self, f: int) -> frozenset:
        """Edges that appear an odd number of times on the face walk."""
        odd: set[int] = set()
        for e in self.face_edges(f):
            odd ^= {e}
        return frozenset(odd)

    def face_states(self, f: int) -> list[int]:
        """All walk states (both directions) that belong to face ``f``."""
        fwd = self.face_walks[f]
        return sorted(set(fwd) | {self.reverse_state(s) for s in fwd})

    def side_faces(self, e: int) -> tuple[int, int]:
        """The faces on the two sides of edge ``e`` (possibly equal)."""
        return self._state_face[4 * e], self._state_face[4 * e + 1]

    @property
    def interior_faces(self) -> list[int]:
        return [f for f in range(self.face_count) if f not in self.boundary]

    @property
    def b(self) -> int:
        return len(self.boundary)

    def boundary_markers(self) -> list[int]:
        """One state with ``z = 0`` per boundary face, usable as a ``bnd`` marker."""
        out = []
        for f in sorted(self.boundary):
            out.append(min(s for s in self.face_states(f) if s & 1 == 0))
        return out

    # -- global structure ---------------------------------------------------

    def component_count(self) -> int:
        dsu = _DSU(self.n)
        comps = self.n
        for u, v in self.ends:
            if dsu.union(u, v):
                comps -= 1
        return comps

    def vertex_components(self) -> list[int]:
        dsu = _DSU(self.n)
        for u, v in self.ends:
            dsu.union(u, v)
        return [dsu.find(v) for v in range(self.n)]

    def incident(self, v: int) -> list[int]:
        return [d >> 1 for d in self.rotation[v]]

    def local_orientation(self) -> list[int]:
        """Per-vertex flip bits from a BFS tree; an edge is consistent if
        ``flip[u] ^ flip[v] == sig``."""
        flip = [-1] * self.n
        for root in range(self.n):
            if flip[root] != -1:
                continue
            flip[root] = 0
            queue = deque([root])
            while queue:
                u = queue.popleft()
                for d in self.rotation[u]:
                    e = d >> 1
                    w = self._dart_vertex[d ^ 1]
                    if flip[w] == -1:
                        flip[w] = flip[u] ^ self.sigs[e]
                        queue.append(w)
        return flip

    def is_orientable(self) -> bool:
        flip = self.local_orientation()
        return all(flip[u] ^ flip[v] == s for (u, v), s in zip(self.ends, self.sigs))

    @property
    def stats(self) -> TopoStats:
        if self._stats is None:
            self._stats = topo_stats(self)
        return self._stats

    def weight(self, edges: Iterable[int]) -> float:
        return sum(self.weights[e] for e in edges)

    def ids(self, edges: Iterable[int]) -> list[str]:
        return [self.edge_ids[e] for e in sorted(edges)]

    # -- derived embeddings -------------------------------------------------

    def with_boundary_states(self, states: Iterable[int]) -> EmbeddedGraph:
        return EmbeddedGraph(
            self.n, self.edge_ids, self.ends, self.weights, self.sigs, self.rotation,
            states, require_connected=False, strict_boundary=False,
        )

    def with_boundary_faces(self, faces: Iterable[int]) -> EmbeddedGraph:
        states = [self.face_states(f)[0] for f in faces if self.face_walks[f]]
        return self.with_boundary_states(states)

    def punctured(self) -> EmbeddedGraph:
        """Turn the highest-index face into a boundary component when ``b = 0``."""
        if self.boundary:
            return self
        return self.with_boundary_faces([self.face_count - 1])

    def delete_edges(self, kill: Iterable[int]) -> tuple[EmbeddedGraph, list[int]]:
        """Remove edges, keeping vertices and boundary designations.

        Returns the new embedding and, for every new edge index, the old one.
        A boundary face whose darts all disappear hands its marker to a face
        it merges with.
        """
        kill = set(kill)
        keep = [k for k in range(self.m) if k not in kill]
        newidx = {k: i for i, k in enumerate(keep)}

        def remap(d: int) -> int:
            return 2 * newidx[d >> 1] + (d & 1)

        rotation = [[remap(d) for d in rot if (d >> 1) not in kill] for rot in self.rotation]
        markers = []
        for f in sorted(self.boundary):
            state = self._surviving_state(f, kill)
            if state is not None:
                markers.append(2 * remap(state >> 1) + (state & 1))
        g = EmbeddedGraph(
            self.n,
            [self.edge_ids[k] for k in keep],
            [self.ends[k] for k in keep],
            [self.weights[k] for k in keep],
            [self.sigs[k] for k in keep],
            rotation,
            markers,
            require_connected=False,
            strict_boundary=False,
        )
        return g, keep

    def _surviving_state(self, f: int, kill: set) -> int | None:
        seen = {f}
        queue = deque([f])
        while queue:
            h = queue.popleft()
            for s in self.face_states(h):
                if (s >> 2) not in kill:
                    return s
            for s in self.face_walks[h]:
                e = s >> 2
                if e in kill:
                    for nb in self.side_faces(e):
                        if nb not in seen:
                            seen.add(nb)
                            queue.append(nb)
        return None

    def __repr__(self) -> str:
        return f"EmbeddedGraph(n={self.n}, m={self.m}, faces={self.face_count}, b={self.b})"


# ---------------------------------------------------------------------------


def build_embedding(
    n: int,
    edges: Sequence[tuple[str, int, int, float, int]],
    rotation: dict[int, Sequence[str]] | Sequence[Sequence[str]],
    boundary: Sequence[str] = (),
) -> EmbeddedGraph:
    """Build an embedding from named edges and dart tokens such as ``"a+"``.

    ``edges`` holds ``(id, u, v, weight, sig)`` tuples.  A dart token is an
    edge id followed by ``+`` (head end, at ``v``) or ``-`` (tail end, at
    ``u``).  Each ``boundary`` token marks the face traced from that dart.
    """
    ids = [e[0] for e in edges]
    index = {eid: k for k, eid in enumerate(ids)}

    def dart(tok: str) -> int:
        if len(tok) < 2 or tok[-1] not in "+-":
            raise EmbeddingError(f"bad dart token {tok!r}")
        eid = tok[:-1]
        if eid not in index:
            raise EmbeddingError(f"dart {tok!r} names an unknown edge")
        return 2 * index[eid] + (tok[-1] == "+")

    if isinstance(rotation, dict):
        rot = [list(rotation.get(v, ())) for v in range(n)]
    else:
        rot = [list(r) for r in rotation]
    return EmbeddedGraph(
        n,
        ids,
        [(e[1], e[2]) for e in edges],
        [e[3] for e in edges],
        [e[4] for e in edges],
        [[dart(t) for t in r] for r in rot],
        [2 * dart(t) for t in boundary],
    )


def _parse_number(tok: str):
    try:
        return int(tok)
    except ValueError:
        return float(tok)


def parse_instance(text: str) -> EmbeddedGraph:
    """Parse the line-oriented instance format (see README)."""
    n = None
    edges: list[tuple[str, int, int, float, int]] = []
    seen_ids: set[str] = set()
    rot: dict[int, list[str]] = {}
    bnd: list[str] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        key, args = parts[0], parts[1:]
        try:
            if key == "v":
                if len(args) != 1 or n is not None:
                    raise ParseError(lineno, "expected a single 'v <count>' line")
                n = int(args[0])
            elif key == "e":
                if len(args) != 5:
                    raise ParseError(lineno, "expected 'e <id> <u> <v> <weight> <sig>'")
                eid, u, v, w, s = args
                if eid in seen_ids:
                    raise ParseError(lineno, f"duplicate edge id {eid!r}")
                if eid[-1:] in "+-" or not eid:
                    raise ParseError(lineno, f"edge id {eid!r} may not end in '+' or '-'")
                if s not in ("0", "1"):
                    raise ParseError(lineno, f"signature must be 0 or 1, got {s!r}")
                seen_ids.add(eid)
                edges.append((eid, int(u), int(v), _parse_number(w), int(s)))
            elif key == "rot":
                if not args:
                    raise ParseError(lineno, "expected 'rot <vertex> <dart>...'")
                v = int(args[0])
                if v in rot:
                    raise ParseError(lineno, f"second rotation for vertex {v}")
                for tok in args[1:]:
                    if tok[-1:] not in ("+", "-") or tok[:-1] not in seen_ids:
                        raise ParseError(lineno, f"bad dart {tok!r}")
                rot[v] = args[1:]
            elif key == "bnd":
                if len(args) != 1:
                    raise ParseError(lineno, "expected 'bnd <dart>'")
                bnd.append(args[0])
            else:
                raise ParseError(lineno, f"unknown directive {key!r}")
        except ParseError:
            raise
        except ValueError as exc:
            raise ParseError(lineno, str(exc)) from None
    if n is None:
        raise EmbeddingError("missing 'v <count>' line")
    for v in rot:
        if not 0 <= v < n:
            raise EmbeddingError(f"rotation given for unknown vertex {v}")
    for eid, u, v, _, _ in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise EmbeddingError(f"edge {eid} has an endpoint outside 0..{n - 1}")
    return build_embedding(n, edges, rot, bnd)


def _fmt_weight(w) -> str:
    if isinstance(w, float) and w.is_integer():
        return repr(w)
    return str(w)


def format_instance(g: EmbeddedGraph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"v {g.n}")
    for k in range(g.m):
        u, v = g.ends[k]
        lines.append(f"e {g.edge_ids[k]} {u} {v} {_fmt_weight(g.weights[k])} {g.sigs[k]}")
    for v in range(g.n):
        lines.append(" ".join(["rot", str(v)] + [g.dart_name(d) for d in g.rotation[v]]))
    for s in g.boundary_markers():
        lines.append(f"bnd {g.dart_name(s >> 1)}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------


def topo_stats(g: EmbeddedGraph) -> TopoStats:
    chi = g.n - g.m + g.face_count
    orientable = g.is_orientable()
    if orientable:
        if (2 - chi) % 2:
            raise EmbeddingError("odd Euler characteristic on an orientable surface")
        genus = (2 - chi) // 2
        beta = 2 * genus
    else:
        genus = 2 - chi
        beta = genus
    b = g.b
    if b:
        beta += b - 1
    return TopoStats(g.n, g.m, g.face_count, b, chi, genus, orientable, beta)


def dual(g: EmbeddedGraph) -> DualGraph:
    return DualGraph(
        g.face_count,
        g.boundary,
        tuple(g.side_faces(e) for e in range(g.m)),
        g.edge_ids,
    )


def order_cycle(g: EmbeddedGraph, edges: Iterable[int], start: int | None = None):
    """Order the edges of a simple cycle as a closed walk.

    Returns ``(vertices, edges)`` where ``vertices[i]`` and ``vertices[i+1]``
    (cyclically) are the endpoints of ``edges[i]``.
    """
    edges = set(edges)
    if not edges:
        return [], []
    inc: dict[int, list[int]] = {}
    for e in edges:
        u, v = g.ends[e]
        inc.setdefault(u, []).append(e)
        inc.setdefault(v, []).append(e)
    for v, es in inc.items():
        if len(es) != 2:
            raise ValueError(f"edge set is not a simple cycle at vertex {v}")
    if start is None:
        start = min(inc)
    e0 = min(inc[start])
    verts, walk = [start], [e0]
    cur = g.other_end(e0, start)
    prev = e0
    while cur != start:
        a, b = inc[cur]
        nxt = b if a == prev else a
        verts.append(cur)
        walk.append(nxt)
        cur = g.other_end(nxt, cur)
        prev = nxt
    if len(walk) != len(edges):
        raise ValueError("edge set is a union of several cycles")
    return verts, walk


def split_cycles(g: EmbeddedGraph, edges: Iterable[int]) -> list[frozenset]:
    """Decompose an even-degree edge set into edge-disjoint simple cycles."""
    remaining = set(edges)
    inc: dict[int, set[int]] = {}
    for e in remaining:
        for x in g.ends[e]:
            inc.setdefault(x, set()).add(e)
    out = []
    while remaining:
        cur = g.ends[min(remaining)][0]
        stack_v = [cur]
        stack_e: list[int] = []
        pos = {cur: 0}
        while inc[cur]:
            e = min(inc[cur])
            nxt = g.other_end(e, cur)
            inc[cur].discard(e)
            inc[nxt].discard(e)
            remaining.discard(e)
            stack_e.append(e)
            if nxt in pos:
                i = pos[nxt]
                out.append(frozenset(stack_e[i:]))
                for v in stack_v[i + 1:]:
                    del pos[v]
                del stack_v[i + 1:]
                del stack_e[i:]
            else:
                pos[nxt] = len(stack_v)
                stack_v.append(nxt)
            cur = nxt
        if stack_e:
            raise ValueError("edge set has a vertex of odd degree")
    return out


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CutResult:
    """Outcome of cutting an embedding along a path or closed path."""

    graph: EmbeddedGraph
    vertex_origin: tuple  # new vertex -> original vertex
    edge_origin: tuple  # new edge -> original edge
    new_boundary: tuple  # face indices of the boundary walks created by the cut

    def components(self) -> int:
        return self.graph.component_count()


def _walk_from(g: EmbeddedGraph, edges: list[int], start: int):
    verts = [start]
    darts = []
    cur = start
    for e in edges:
        u, v = g.ends[e]
        if cur == u:
            darts.append(2 * e)
            cur = v
        elif cur == v:
            darts.append(2 * e + 1)
            cur = u
        else:
            return None
        verts.append(cur)
    return verts, darts


def cut_along(g: EmbeddedGraph, path: Sequence, start: int | None = None) -> CutResult:
    """Cut the surface open along a simple path or simple closed path.

    ``path`` lists edges (ids or indices) in walk order.  A two-sided closed
    path yields two new boundary walks, a one-sided one yields a single walk
    of twice the length, and an open path yields one walk around both of its
    copies.  Paths that revisit a vertex are rejected: a simple path never
    crosses itself, and self-touching paths are not supported.
    """
    edges = [g.edge_index[e] if isinstance(e, str) else int(e) for e in path]
    if not edges:
        raise ValueError("empty path")
    if len(set(edges)) != len(edges):
        raise ValueError("path repeats an edge")
    for e in edges:
        if not 0 <= e < g.m:
            raise ValueError(f"edge {e} is not in the graph")
    starts = [start] if start is not None else list(dict.fromkeys(g.ends[edges[0]]))
    walk = None
    for s in starts:
        walk = _walk_from(g, edges, s)
        if walk is not None:
            break
    if walk is None:
        raise ValueError("edges do not form a path in the graph")
    verts, darts = walk
    k = len(edges)
    closed = verts[-1] == verts[0]
    inner = verts[:-1] if closed else verts
    if len(set(inner)) != len(inner):
        raise ValueError("path revisits a vertex (crossing or self-touching paths are not supported)")

    # local orientation carried along the path
    zs = [0]
    for e in edges:
        zs.append(zs[-1] ^ g.sigs[e])
    flip = zs[-1] if closed else 0

    m, n = g.m, g.n
    r_edge = {e: m + i for i, e in enumerate(edges)}  # index of the R copy

    def copy(d: int, side: str) -> int:
        if side == "L":
            return d
        return 2 * r_edge[d >> 1] + (d & 1)

    def rho(v: int, z: int) -> list[int]:
        rot = list(g.rotation[v])
        return rot if z == 0 else rot[::-1]

    def unrho(lst: list[int], z: int) -> list[int]:
        return lst if z == 0 else lst[::-1]

    rotation = [list(r) for r in g.rotation]
    vertex_origin = list(range(n))
    split_index = {}
    split_vertices = range(k) if closed else range(1, k)
    for i in split_vertices:
        v = verts[i]
        d = darts[i]
        a = darts[i - 1] ^ 1 if i > 0 else darts[k - 1] ^ 1
        z = zs[i]
        order = rho(v, z)
        p = order.index(d)
        order = order[p:] + order[:p]
        q = order.index(a)
        arc_l, arc_r = order[1:q], order[q + 1:]
        a_l, a_r = ("R", "L") if (i == 0 and flip) else ("L", "R")
        left = [copy(d, "L")] + arc_l + [copy(a, a_l)]
        right = [copy(a, a_r)] + arc_r + [copy(d, "R")]
        rotation[v] = unrho(left, z)
        split_index[v] = len(rotation)
        rotation.append(unrho(right, z))
        vertex_origin.append(v)
    if not closed:
        w, d0 = verts[0], darts[0]
        order = rho(w, 0)
        p = order.index(d0)
        order[p:p + 1] = [copy(d0, "R"), copy(d0, "L")]
        rotation[w] = unrho(order, 0)
        w2, ak = verts[k], darts[k - 1] ^ 1
        order = rho(w2, zs[k])
        p = order.index(ak)
        order[p:p + 1] = [copy(ak, "L"), copy(ak, "R")]
        rotation[w2] = unrho(order, zs[k])

    new_m = m + k
    dart_vertex = [0] * (2 * new_m)
    for v, rot in enumerate(rotation):
        for d in rot:
            dart_vertex[d] = v
    ids = list(g.edge_ids)
    on_path = set(edges)
    for e in edges:
        ids[e] = f"{g.edge_ids[e]}.L"
    ids += [f"{g.edge_ids[e]}.R" for e in edges]
    ends = [(dart_vertex[2 * e], dart_vertex[2 * e + 1]) for e in range(new_m)]
    weights = list(g.weights) + [g.weights[e] for e in edges]
    sigs = list(g.sigs) + [g.sigs[e] for e in edges]

    markers = []
    for f in sorted(g.boundary):
        for s in g.face_states(f):
            if (s >> 2) not in on_path:
                markers.append(s)
                break
    new_markers = [2 * copy(darts[0], "L") + 0]
    if closed and not flip:
        new_markers.append(2 * copy(darts[0], "R") + 1)
    cut = EmbeddedGraph(
        len(rotation), ids, ends, weights, sigs, rotation, markers + new_markers,
        require_connected=False, strict_boundary=False,
    )
    new_faces = tuple(dict.fromkeys(cut.face_of_state(s) for s in new_markers))
    edge_origin = tuple(list(range(m)) + edges)
    return CutResult(cut, tuple(vertex_origin), edge_origin, new_faces)

"""Instance generators: named fixtures, surface grids and random rotation systems."""

from __future__ import annotations

import random

from .surface import EmbeddedGraph, build_embedding


def theta() -> EmbeddedGraph:
    """Three parallel edges (weights 1, 2, 3) on the sphere."""
    edges = [("a", 0, 1, 1, 0), ("b", 0, 1, 2, 0), ("c", 0, 1, 3, 0)]
    rot = [["a-", "b-", "c-"], ["c+", "b+", "a+"]]
    return build_embedding(2, edges, rot, ["a-"])


def k4_sphere() -> EmbeddedGraph:
    """K4 drawn as a tetrahedron; the outer triangle is the boundary."""
    edges = [
        ("a", 0, 1, 1, 0), ("b", 0, 2, 1, 0), ("c", 0, 3, 1, 0),
        ("d", 1, 2, 1, 0), ("e", 2, 3, 1, 0), ("f", 3, 1, 1, 0),
    ]
    rot = [
        ["a-", "b-", "c-"],
        ["d-", "a+", "f+"],
        ["e-", "b+", "d+"],
        ["f-", "c+", "e+"],
    ]
    return build_embedding(4, edges, rot, ["d+"])


def torus1() -> EmbeddedGraph:
    """One vertex with loops x, y glued as x y x' y'; the square is the boundary."""
    edges = [("x", 0, 0, 1, 0), ("y", 0, 0, 1, 0)]
    return build_embedding(1, edges, [["x-", "y-", "x+", "y+"]], ["x-"])


def projective_loop() -> EmbeddedGraph:
    """A single one-sided loop: the projective plane with one disk face."""
    return build_embedding(1, [("e", 0, 0, 1, 1)], [["e-", "e+"]])


def _grid(N: int, weights, klein: bool) -> EmbeddedGraph:
    if N < 1:
        raise ValueError("grid size must be positive")

    def vid(i: int, j: int) -> int:
        return (i % N) * N + (j % N)

    edges = []
    for i in range(N):
        for j in range(N):
            if klein and j == N - 1:
                edges.append((f"h{i}_{j}", vid(i, j), vid(N - 1 - i, 0), 1, 1))
            else:
                edges.append((f"h{i}_{j}", vid(i, j), vid(i, j + 1), 1, 0))
            edges.append((f"v{i}_{j}", vid(i, j), vid(i + 1, j), 1, 0))
    if weights is not None:
        edges = [(eid, u, v, weights(k), s) for k, (eid, u, v, _, s) in enumerate(edges)]
    rot = []
    for i in range(N):
        for j in range(N):
            if klein and j == 0:
                west = f"h{N - 1 - i}_{N - 1}+"
            else:
                west = f"h{i}_{(j - 1) % N}+"
            # counterclockwise: east, north, west, south
            rot.append([f"h{i}_{j}-", f"v{(i - 1) % N}_{j}+", west, f"v{i}_{j}-"])
    return build_embedding(N * N, edges, rot)


def _weight_fn(seed: int | None, lo: int = 1, hi: int = 9):
    if seed is None:
        return None
    rng = random.Random(seed)
    table: dict[int, int] = {}

    def w(k: int) -> int:
        if k not in table:
            table[k] = rng.randint(lo, hi)
        return table[k]

    return w


def torus_grid(N: int, seed: int | None = None) -> EmbeddedGraph:
    """N x N grid on the torus; unit weights unless ``seed`` is given."""
    return _grid(N, _weight_fn(seed), klein=False)


def klein_grid(N: int, seed: int | None = None) -> EmbeddedGraph:
    """N x N grid on the Klein bottle (horizontal wrap reflects the rows)."""
    return _grid(N, _weight_fn(seed), klein=True)


def random_embedding(
    n: int,
    m: int,
    seed: int,
    *,
    orientable: bool = True,
    loops: bool = False,
    max_weight: int = 9,
) -> EmbeddedGraph:
    """Random connected multigraph with a random rotation system.

    Every rotation system describes some cellular embedding, so the result
    is always valid; its genus is whatever the rotation produces.  With
    ``orientable=False`` the edge signatures are random too.
    """
    if n < 1 or m < n - 1:
        raise ValueError("need n >= 1 and m >= n - 1")
    if n == 1 and m > 0 and not loops:
        raise ValueError("a single vertex needs loops")
    rng = random.Random(seed)
    pairs = [(rng.randrange(v), v) for v in range(1, n)]
    while len(pairs) < m:
        u, v = rng.randrange(n), rng.randrange(n)
        if u == v and not loops:
            continue
        pairs.append((u, v))
    rng.shuffle(pairs)
    edges = []
    for k, (u, v) in enumerate(pairs):
        sig = rng.randrange(2) if not orientable else 0
        edges.append((f"e{k}", u, v, rng.randint(1, max_weight), sig))
    rot: list[list[str]] = [[] for _ in range(n)]
    for eid, u, v, _, _ in edges:
        rot[u].append(f"{eid}-")
        rot[v].append(f"{eid}+")
    for r in rot:
        rng.shuffle(r)
    return build_embedding(n, edges, rot)


def add_thin_faces(g: EmbeddedGraph, count: int, seed: int, max_weight: int = 9) -> EmbeddedGraph:
    """Insert parallel edges and loops that bound faces of degree 2 and 1."""
    rng = random.Random(seed)
    edges = [(g.edge_ids[k], *g.ends[k], g.weights[k], g.sigs[k]) for k in range(g.m)]
    rot = [[g.dart_name(d) for d in r] for r in g.rotation]
    for t in range(count):
        eid = f"t{t}"
        w = rng.randint(1, max_weight)
        if rng.random() < 0.3 or not any(u != v for _, u, v, _, _ in edges):
            v = rng.randrange(g.n)
            edges.append((eid, v, v, w, 0))
            p = rng.randrange(len(rot[v]) + 1)
            rot[v][p:p] = [f"{eid}+", f"{eid}-"]
        else:
            base = rng.choice([e for e in edges if e[1] != e[2]])
            bid, u, v, _, s = base
            edges.append((eid, u, v, w, s))
            pu = rot[u].index(f"{bid}-")
            rot[u].insert(pu + 1, f"{eid}-")
            pv = rot[v].index(f"{bid}+")
            # the new head dart goes on the matching side of the old one
            rot[v].insert(pv + (1 if s else 0), f"{eid}+")
    return build_embedding(g.n, edges, rot)


def bouquet(genus: int, orientable: bool = True) -> EmbeddedGraph:
    """One vertex and one face on the closed surface of the given genus.

    Orientable: loops ``a_i, b_i`` in the order ``a_i b_i a_i' b_i'``.
    Non-orientable: one-sided loops ``c_i`` in the order ``c_i c_i``.
    """
    if genus < 1:
        raise ValueError("genus must be positive")
    edges, rot = [], []
    if orientable:
        for i in range(genus):
            edges += [(f"a{i}", 0, 0, 1, 0), (f"b{i}", 0, 0, 1, 0)]
            rot += [f"a{i}-", f"b{i}-", f"a{i}+", f"b{i}+"]
    else:
        for i in range(genus):
            edges.append((f"c{i}", 0, 0, 1, 1))
            rot += [f"c{i}-", f"c{i}+"]
    return build_embedding(1, edges, [rot])


def subdivide(g: EmbeddedGraph, count: int, seed: int, max_weight: int = 9) -> EmbeddedGraph:
    """Split randomly chosen edges in two; the surface does not change."""
    rng = random.Random(seed)
    n = g.n
    edges = [[g.edge_ids[k], *g.ends[k], g.weights[k], g.sigs[k]] for k in range(g.m)]
    rot = [[g.dart_name(d) for d in r] for r in g.rotation]
    fresh = 0
    for _ in range(count):
        k = rng.randrange(len(edges))
        eid, u, v, _, s = edges[k]
        a, b = f"s{fresh}", f"s{fresh + 1}"
        fresh += 2
        x = n
        n += 1
        edges[k] = [a, u, x, rng.randint(1, max_weight), s]
        edges.append([b, x, v, rng.randint(1, max_weight), 0])
        rot[u][rot[u].index(f"{eid}-")] = f"{a}-"
        rot[v][rot[v].index(f"{eid}+")] = f"{b}+"
        rot.append([f"{a}+", f"{b}-"])
    return build_embedding(n, [tuple(e) for e in edges], rot)


def with_boundaries(g: EmbeddedGraph, count: int, seed: int) -> EmbeddedGraph:
    """Mark up to ``count`` faces with pairwise disjoint vertex sets as boundaries."""
    rng = random.Random(seed)
    faces = list(range(g.face_count))
    rng.shuffle(faces)
    used: set[int] = set()
    chosen = []
    for f in faces:
        if len(chosen) == count:
            break
        vs = set(g.face_vertices(f))
        walk = g.face_vertices(f)
        if len(walk) != len(vs) or vs & used:
            continue
        used |= vs
        chosen.append(f)
    return g.with_boundary_faces(chosen)

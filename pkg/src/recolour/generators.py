"""Named families of embedded graphs used as witnesses and test corpus."""

from __future__ import annotations

import math
import random
from typing import Callable, Sequence

import networkx as nx
import numpy as np

from .planar import GraphFormatError, PlanarGraph, girth


def _from_coordinates(pos: dict[int, tuple[float, float]], edges) -> PlanarGraph:
    adj: dict[int, set[int]] = {v: set() for v in pos}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    rot = {}
    for v, nb in adj.items():
        x0, y0 = pos[v]
        # clockwise = decreasing angle
        rot[v] = tuple(sorted(nb, key=lambda w: -math.atan2(pos[w][1] - y0, pos[w][0] - x0)))
    return PlanarGraph(adj, rot)


def cycle(n: int) -> PlanarGraph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    pos = {i: (math.cos(2 * math.pi * i / n), math.sin(2 * math.pi * i / n)) for i in range(n)}
    return _from_coordinates(pos, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> PlanarGraph:
    pos = {i: (float(i), 0.0) for i in range(n)}
    return _from_coordinates(pos, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> PlanarGraph:
    g = PlanarGraph.from_networkx(nx.complete_graph(n), embed=False)
    return g.embedded() if n <= 4 else g


def cube() -> PlanarGraph:
    """Q3 on vertices 0..7, adjacent when the labels differ in one bit."""
    edges = [(x, x ^ (1 << b)) for x in range(8) for b in range(3) if x < x ^ (1 << b)]
    return PlanarGraph.from_edges(8, edges).embedded()


def dodecahedron() -> PlanarGraph:
    return PlanarGraph.from_networkx(nx.dodecahedral_graph())


def icosahedron() -> PlanarGraph:
    return PlanarGraph.from_networkx(nx.icosahedral_graph())


def octahedron() -> PlanarGraph:
    return PlanarGraph.from_networkx(nx.octahedral_graph())


def tetrahedron() -> PlanarGraph:
    return complete(4)


def hex_patch(r: int) -> PlanarGraph:
    """Hexagons of the honeycomb within hex-distance ``r - 1`` of a centre
    hexagon (``r = 1`` is a single hexagon)."""
    if r < 1:
        raise ValueError("hex_patch radius must be >= 1")
    ids: dict[tuple[int, int], int] = {}
    pos: dict[int, tuple[float, float]] = {}
    edges: set[tuple[int, int]] = set()

    def vid(x: float, y: float) -> int:
        key = (round(x * 1000), round(y * 1000))
        if key not in ids:
            ids[key] = len(ids)
            pos[ids[key]] = (x, y)
        return ids[key]

    for q in range(-(r - 1), r):
        for s in range(-(r - 1), r):
            if abs(q + s) > r - 1:
                continue
            cx, cy = math.sqrt(3) * (q + s / 2), 1.5 * s
            corner = [
                vid(cx + math.cos(math.radians(30 + 60 * i)), cy + math.sin(math.radians(30 + 60 * i)))
                for i in range(6)
            ]
            for i in range(6):
                a, b = corner[i], corner[(i + 1) % 6]
                edges.add((min(a, b), max(a, b)))
    return _from_coordinates(pos, sorted(edges))


def subdivide(G: PlanarGraph, times: int = 1) -> PlanarGraph:
    """Replace every edge by a path with ``times`` internal vertices; the
    embedding is carried over."""
    if G.rotation is None:
        G = G.embedded()
    nxt = max(G.vertices, default=-1) + 1
    adj: dict[int, set[int]] = {v: set() for v in G.vertices}
    rot: dict[int, list[int]] = {v: list(G.rotation[v]) for v in G.vertices}
    for u, w in G.edges():
        chain = [u] + list(range(nxt, nxt + times)) + [w]
        nxt += times
        for a, b in zip(chain, chain[1:]):
            adj.setdefault(a, set()).add(b)
            adj.setdefault(b, set()).add(a)
        if times:
            rot[u][rot[u].index(w)] = chain[1]
            rot[w][rot[w].index(u)] = chain[-2]
            for i in range(1, len(chain) - 1):
                rot[chain[i]] = [chain[i - 1], chain[i + 1]]
    return PlanarGraph(adj, rot)


def stellate(G: PlanarGraph) -> PlanarGraph:
    """Insert a new vertex in every face, joined to the whole boundary."""
    if G.rotation is None:
        G = G.embedded()
    adj = {v: set(G.neighbours(v)) for v in G.vertices}
    rot = {v: list(G.rotation[v]) for v in G.vertices}
    nxt = max(G.vertices) + 1
    for f in G.faces:
        w = f.walk
        if len(set(w)) != len(w):
            raise GraphFormatError("stellate needs faces bounded by cycles")
        c = nxt
        nxt += 1
        adj[c] = set(w)
        L = len(w)
        for i in range(L):
            prev = w[i - 1]
            adj[w[i]].add(c)
            r = rot[w[i]]
            r.insert(r.index(prev) + 1, c)
        rot[c] = list(reversed(w))
    return PlanarGraph(adj, rot)


def pentakis_dodecahedron() -> PlanarGraph:
    return stellate(dodecahedron())


def star_subdivision(n: int) -> PlanarGraph:
    """K_{1,n} with every edge subdivided once."""
    pos = {0: (0.0, 0.0)}
    edges = []
    for i in range(n):
        a = 2 * math.pi * i / n
        pos[1 + i] = (math.cos(a), math.sin(a))
        pos[1 + n + i] = (2 * math.cos(a), 2 * math.sin(a))
        edges += [(0, 1 + i), (1 + i, 1 + n + i)]
    return _from_coordinates(pos, edges)


def pentagon_fan(petals: int, closed: bool = False) -> PlanarGraph:
    """Pentagons glued around a hub ``0``.

    Open fans have hub degree ``petals + 1`` (the degree-5 hub with four
    5-faces is ``pentagon_fan(4)``); closed fans have hub degree ``petals``.
    Vertex layout: hub 0, spokes ``1..``, then the two outer vertices of each
    petal.
    """
    spokes = petals if closed else petals + 1
    u = list(range(1, spokes + 1))
    edges = [(0, x) for x in u]
    nxt = spokes + 1
    for i in range(petals):
        z, z2 = nxt, nxt + 1
        nxt += 2
        edges += [(u[i], z), (z, z2), (z2, u[(i + 1) % spokes])]
    return PlanarGraph.from_edges(nxt, edges).embedded()


def double_flower(d: int) -> PlanarGraph:
    """Two closed pentagon flowers with hubs of degree ``d`` whose outer
    boundaries are joined by a ring of pentagons.  Every face is a pentagon;
    ``double_flower(3)`` is the dodecahedron."""
    if d < 3:
        raise ValueError("double_flower needs d >= 3")
    edges = []

    def flower(offset: int) -> list[int]:
        hub = offset
        u = [offset + 1 + i for i in range(d)]
        edges.extend((hub, x) for x in u)
        ring = []
        base = offset + 1 + d
        for i in range(d):
            z, z2 = base + 2 * i, base + 2 * i + 1
            edges.extend([(u[i], z), (z, z2), (z2, u[(i + 1) % d])])
            ring += [z, z2]
        return ring

    size = 1 + 3 * d
    a = flower(0)
    b = flower(size)
    L = 2 * d
    # arcs alternate 1,2 on each side; a shift of one pairs them into pentagons
    for j in range(L):
        edges.append((a[j], b[(L - j) % L]))
    G = PlanarGraph.from_edges(2 * size, edges).embedded()
    if any(f.length != 5 for f in G.faces):  # pragma: no cover - construction check
        raise AssertionError("double_flower produced a non-pentagonal face")
    return G


def locked_face_gadget(hub_degree: int = 4, drop_pendant: int | None = None) -> PlanarGraph:
    """A 5-face ``v, u1..u4`` (vertices 0..4) with one pendant at each of
    ``u1..u4`` (vertices 5..8) and ``hub_degree - 2`` pendants at ``v``
    (vertices 9, 10).  ``drop_pendant`` in 1..4 removes the pendant of that
    face vertex."""
    pos = {}
    for i in range(5):
        a = math.radians(270 - 72 * i)
        pos[i] = (math.cos(a), math.sin(a))
    edges = [(i, (i + 1) % 5) for i in range(5)]
    for i in range(1, 5):
        if drop_pendant == i:
            continue
        a = math.radians(270 - 72 * i)
        pos[4 + i] = (2 * math.cos(a), 2 * math.sin(a))
        edges.append((i, 4 + i))
    for j in range(hub_degree - 2):
        a = math.radians(255 + 30 * j)
        pos[9 + j] = (2 * math.cos(a), 2 * math.sin(a))
        edges.append((0, 9 + j))
    G = _from_coordinates(pos, edges)
    mapping = {v: i for i, v in enumerate(sorted(pos))}
    return G.relabel(mapping) if list(mapping) != list(range(len(mapping))) else G


def delaunay(n: int, seed: int = 0) -> PlanarGraph:
    """Delaunay triangulation of ``n`` uniform random points."""
    from scipy.spatial import Delaunay

    rng = np.random.default_rng(seed)
    pts = rng.random((n, 2))
    tri = Delaunay(pts)
    edges = set()
    for s in tri.simplices:
        for i in range(3):
            a, b = int(s[i]), int(s[(i + 1) % 3])
            edges.add((min(a, b), max(a, b)))
    return _from_coordinates({i: (float(p[0]), float(p[1])) for i, p in enumerate(pts)}, sorted(edges))


def random_degenerate(n: int, d: int, seed: int = 0, p: float = 0.7) -> PlanarGraph:
    """Random graph built by attaching each new vertex to at most ``d``
    earlier ones; its degeneracy is at most ``d``.  Not embedded."""
    rng = random.Random(seed)
    edges = []
    for v in range(1, n):
        k = sum(1 for _ in range(min(d, v)) if rng.random() < p)
        for w in rng.sample(range(v), k):
            edges.append((w, v))
    return PlanarGraph.from_edges(n, edges)


def random_girth_planar(n: int, min_girth: int = 5, seed: int = 0, attempts: int = 4000) -> PlanarGraph:
    """Grow a connected plane graph of girth >= ``min_girth`` by adding paths
    of length 1..3 across faces, starting from a cycle of length ``min_girth``."""
    rng = random.Random(seed)
    G = cycle(min_girth)
    for _ in range(attempts):
        if G.n >= n:
            break
        faces = [f for f in G.faces if len(set(f.walk)) == f.length and f.length >= 4]
        f = rng.choice(faces)
        L = f.length
        i, j = sorted(rng.sample(range(L), 2))
        x, y = f.walk[i], f.walk[j]
        extra = rng.choice([0, 1, 2]) if G.n + 2 <= n else min(n - G.n, rng.choice([0, 1]))
        new = list(range(max(G.vertices) + 1, max(G.vertices) + 1 + extra))
        plen = extra + 1
        if min(j - i, L - (j - i)) + plen < min_girth or y in G.neighbours(x) and extra == 0:
            continue
        H = _insert_path(G, f, i, j, new)
        if girth(H) >= min_girth:
            G = H
    return G


def _insert_path(G: PlanarGraph, f, i: int, j: int, new: Sequence[int]) -> PlanarGraph:
    """Add the path ``walk[i], *new, walk[j]`` inside face ``f``."""
    w = f.walk
    L = len(w)
    x, y = w[i], w[j]
    adj = {v: set(G.neighbours(v)) for v in G.vertices}
    rot = {v: list(G.rotation[v]) for v in G.vertices}
    chain = [x] + list(new) + [y]
    for a, b in zip(chain, chain[1:]):
        adj.setdefault(a, set()).add(b)
        adj.setdefault(b, set()).add(a)
    # corner at x is (w[i-1], x, w[i+1]); the new edge goes right after w[i-1]
    rx = rot[x]
    rx.insert(rx.index(w[(i - 1) % L]) + 1, chain[1])
    ry = rot[y]
    ry.insert(ry.index(w[(j - 1) % L]) + 1, chain[-2])
    for k in range(1, len(chain) - 1):
        rot[chain[k]] = [chain[k - 1], chain[k + 1]]
    H = PlanarGraph(adj, rot)
    if not H.euler_ok():  # pragma: no cover - insertion is always plane
        raise AssertionError("path insertion broke the embedding")
    return H


GENERATORS: dict[str, Callable[..., PlanarGraph]] = {
    "cycle": cycle,
    "path": path,
    "complete": complete,
    "cube": cube,
    "dodecahedron": dodecahedron,
    "icosahedron": icosahedron,
    "octahedron": octahedron,
    "tetrahedron": tetrahedron,
    "hex_patch": hex_patch,
    "star_subdivision": star_subdivision,
    "pentagon_fan": pentagon_fan,
    "double_flower": double_flower,
    "pentakis": pentakis_dodecahedron,
    "locked_face": locked_face_gadget,
    "delaunay": delaunay,
    "random_degenerate": random_degenerate,
    "random_girth": random_girth_planar,
}


def generate(name: str, *args) -> PlanarGraph:
    """Build a named graph; ``args`` are integers (or a base graph name for
    ``subdivided``/``stellated``), e.g. ``generate("cycle", 5)``,
    ``generate("subdivided", "icosahedron", 1)``."""
    if name in ("subdivided", "stellated"):
        if not args:
            raise ValueError(f"{name} needs a base graph name")
        base_name, *rest = args
        if name == "subdivided":
            times = int(rest[-1]) if rest and str(rest[-1]).isdigit() else 1
            base_args = rest[:-1] if rest and str(rest[-1]).isdigit() else rest
            return subdivide(generate(str(base_name), *base_args), times)
        return stellate(generate(str(base_name), *rest))
    if name not in GENERATORS:
        raise ValueError(f"unknown graph family {name!r}")
    return GENERATORS[name](*(int(a) for a in args))

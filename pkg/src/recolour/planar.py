"""Embedded graphs: rotation systems, face tracing and structural queries.

Vertices are integers.  A rotation system gives, for every vertex, the
clockwise cyclic order of its neighbours; faces are traced from it by the
usual "turn to the next neighbour" rule.  Graphs without a rotation system are
allowed (``rotation is None``) for operations that never look at faces.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Sequence

import networkx as nx


class GraphFormatError(ValueError):
    """Malformed embedded-graph text or an inconsistent graph description."""


class NonPlanarError(ValueError):
    """An embedding was requested for a graph that has none in the plane."""


def _min_rotation(seq: Sequence[int]) -> tuple[int, ...]:
    n = len(seq)
    if n == 0:
        return ()
    return min(tuple(seq[i:]) + tuple(seq[:i]) for i in range(n))


@dataclass(frozen=True)
class Face:
    """A face, stored as its boundary walk rotated to the lexicographically
    smallest starting point.  Two faces are equal iff their walks are."""

    walk: tuple[int, ...]

    @classmethod
    def from_walk(cls, walk: Sequence[int]) -> "Face":
        return cls(_min_rotation(walk))

    @property
    def length(self) -> int:
        return len(self.walk)

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self.walk)

    @property
    def key(self) -> str:
        return "-".join(map(str, self.walk))

    def darts(self) -> list[tuple[int, int]]:
        w = self.walk
        return [(w[i], w[(i + 1) % len(w)]) for i in range(len(w))]

    def __len__(self) -> int:
        return len(self.walk)


class PlanarGraph:
    """Simple graph with an optional rotation system.

    Immutable after construction.  ``rotation[v]`` lists the neighbours of
    ``v`` in clockwise order.
    """

    def __init__(
        self,
        adjacency: Mapping[int, Iterable[int]],
        rotation: Mapping[int, Sequence[int]] | None = None,
        labels: Mapping[int, str] | None = None,
    ):
        adj: dict[int, frozenset[int]] = {}
        for v, nbrs in adjacency.items():
            nb = frozenset(nbrs)
            if v in nb:
                raise GraphFormatError(f"loop at vertex {v}")
            adj[v] = nb
        for v, nb in adj.items():
            for w in nb:
                if w not in adj or v not in adj[w]:
                    raise GraphFormatError(f"edge {v}-{w} is not symmetric")
        self._adj = adj
        self._rot: dict[int, tuple[int, ...]] | None = None
        if rotation is not None:
            rot = {}
            for v in adj:
                r = tuple(rotation.get(v, ()))
                if len(r) != len(set(r)) or set(r) != adj[v]:
                    raise GraphFormatError(
                        f"rotation at {v} is not a permutation of its neighbours"
                    )
                rot[v] = r
            self._rot = rot
        self.labels = dict(labels) if labels else None

    # -- construction -----------------------------------------------------
    @classmethod
    def from_edges(
        cls,
        n_or_vertices: int | Iterable[int],
        edges: Iterable[tuple[int, int]],
        rotation: Mapping[int, Sequence[int]] | None = None,
    ) -> "PlanarGraph":
        if isinstance(n_or_vertices, int):
            verts = range(n_or_vertices)
        else:
            verts = n_or_vertices
        adj: dict[int, set[int]] = {v: set() for v in verts}
        for u, v in edges:
            if u == v:
                raise GraphFormatError(f"loop at vertex {u}")
            if v in adj.setdefault(u, set()):
                raise GraphFormatError(f"duplicate edge {u}-{v}")
            adj[u].add(v)
            adj.setdefault(v, set()).add(u)
        return cls(adj, rotation)

    @classmethod
    def from_networkx(cls, g: nx.Graph, embed: bool = True) -> "PlanarGraph":
        mapping = {v: i for i, v in enumerate(sorted(g.nodes(), key=repr))}
        if all(isinstance(v, int) for v in g.nodes()):
            mapping = {v: v for v in g.nodes()}
        adj = {mapping[v]: {mapping[w] for w in g[v]} for v in g.nodes()}
        graph = cls(adj)
        return graph.embedded() if embed else graph

    # -- basic queries ----------------------------------------------------
    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted(self._adj))

    @property
    def n(self) -> int:
        return len(self._adj)

    @cached_property
    def m(self) -> int:
        return sum(len(nb) for nb in self._adj.values()) // 2

    @property
    def rotation(self) -> dict[int, tuple[int, ...]] | None:
        return self._rot

    @property
    def is_embedded(self) -> bool:
        return self._rot is not None

    def __contains__(self, v: object) -> bool:
        return v in self._adj

    def __len__(self) -> int:
        return len(self._adj)

    def __repr__(self) -> str:
        return f"PlanarGraph(n={self.n}, m={self.m}, embedded={self.is_embedded})"

    def neighbours(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def edges(self) -> list[tuple[int, int]]:
        return sorted((u, w) for u, nb in self._adj.items() for w in nb if u < w)

    def adjacency(self) -> dict[int, frozenset[int]]:
        return dict(self._adj)

    def min_degree(self) -> int:
        return min((len(nb) for nb in self._adj.values()), default=0)

    def max_degree(self) -> int:
        return max((len(nb) for nb in self._adj.values()), default=0)

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(self.edges())
        return g

    def components(self) -> list[frozenset[int]]:
        seen: set[int] = set()
        comps = []
        for s in self.vertices:
            if s in seen:
                continue
            comp = {s}
            queue = deque([s])
            while queue:
                x = queue.popleft()
                for y in self._adj[x]:
                    if y not in comp:
                        comp.add(y)
                        queue.append(y)
            seen |= comp
            comps.append(frozenset(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n == 0 or len(self.components()) == 1

    # -- derived graphs ---------------------------------------------------
    def induced(self, keep: Iterable[int]) -> "PlanarGraph":
        """Induced subgraph; the rotation system is restricted, which keeps
        the embedding plane."""
        keep = set(keep)
        adj = {v: self._adj[v] & keep for v in self._adj if v in keep}
        rot = None
        if self._rot is not None:
            rot = {v: tuple(w for w in self._rot[v] if w in keep) for v in adj}
        return PlanarGraph(adj, rot, self.labels)

    def remove(self, drop: Iterable[int]) -> "PlanarGraph":
        drop = set(drop)
        return self.induced(v for v in self._adj if v not in drop)

    def relabel(self, mapping: Mapping[int, int]) -> "PlanarGraph":
        adj = {mapping[v]: {mapping[w] for w in nb} for v, nb in self._adj.items()}
        rot = None
        if self._rot is not None:
            rot = {mapping[v]: tuple(mapping[w] for w in r) for v, r in self._rot.items()}
        return PlanarGraph(adj, rot)

    def embedded(self) -> "PlanarGraph":
        """A copy carrying a planar rotation system (computed if absent).

        The embedding comes from the left-right planarity test on a graph
        whose vertices and edges are inserted in sorted order, so it is
        deterministic.
        """
        if self._rot is not None:
            return self
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(self.edges())
        ok, emb = nx.check_planarity(g)
        if not ok:
            raise NonPlanarError("graph is not planar")
        rot = {v: tuple(emb.neighbors_cw_order(v)) if self._adj[v] else () for v in self.vertices}
        return PlanarGraph(self._adj, rot, self.labels)

    # -- faces --------------------------------------------------------------
    def _succ(self, v: int, u: int) -> int:
        r = self._rot[v]  # type: ignore[index]
        return r[(r.index(u) + 1) % len(r)]

    @cached_property
    def faces(self) -> tuple[Face, ...]:
        return tuple(trace_faces(self))

    @cached_property
    def dart_face(self) -> dict[tuple[int, int], Face]:
        out = {}
        for f in self.faces:
            for d in f.darts():
                out[d] = f
        return out

    def faces_at(self, v: int) -> list[Face]:
        """Faces around ``v`` in rotation order, one per corner.

        Entry ``i`` is the face containing the dart from ``v`` to
        ``rotation[v][i]``; consecutive entries share the edge to that
        neighbour.
        """
        if self._rot is None:
            raise ValueError("graph has no rotation system")
        return [self.dart_face[(v, w)] for w in self._rot[v]]

    def euler_ok(self) -> bool:
        """Every non-trivial component satisfies n - m + f = 2."""
        faces_by_comp: dict[frozenset[int], int] = {}
        comps = self.components()
        where = {v: c for c in comps for v in c}
        for f in self.faces:
            c = where[f.walk[0]]
            faces_by_comp[c] = faces_by_comp.get(c, 0) + 1
        for c in comps:
            if len(c) == 1:
                continue
            m = sum(len(self._adj[v]) for v in c) // 2
            if len(c) - m + faces_by_comp.get(c, 0) != 2:
                return False
        return True


def trace_faces(G: PlanarGraph) -> list[Face]:
    """Trace every face of the embedding.

    Each directed edge lies on exactly one returned walk.  Disconnected graphs
    are traced component by component (each component contributes its own
    outer face); isolated vertices contribute no walk.
    """
    if G.rotation is None:
        raise ValueError("graph has no rotation system")
    seen: set[tuple[int, int]] = set()
    faces = []
    for u in G.vertices:
        for w in G.rotation[u]:
            if (u, w) in seen:
                continue
            walk = []
            a, b = u, w
            while (a, b) not in seen:
                seen.add((a, b))
                walk.append(a)
                a, b = b, G._succ(b, a)
            faces.append(Face.from_walk(walk))
    faces.sort(key=lambda f: f.walk)
    return faces


def girth(G: PlanarGraph) -> float:
    """Length of a shortest cycle, ``math.inf`` for forests."""
    best = math.inf
    for s in G.vertices:
        dist = {s: 0}
        parent = {s: None}
        queue = deque([s])
        while queue:
            x = queue.popleft()
            if 2 * dist[x] + 1 >= best:
                break
            for y in G.neighbours(x):
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif parent[x] != y:
                    best = min(best, dist[x] + dist[y] + 1)
    return best


def degeneracy_order(G: PlanarGraph) -> tuple[int, list[int]]:
    """Peel minimum-degree vertices (smallest id on ties).

    Returns ``(d, order)`` where ``order`` is the removal order and ``d`` the
    largest degree seen at removal time.
    """
    deg = {v: G.degree(v) for v in G.vertices}
    alive = set(deg)
    order = []
    d = 0
    while alive:
        v = min(alive, key=lambda x: (deg[x], x))
        d = max(d, deg[v])
        order.append(v)
        alive.discard(v)
        for w in G.neighbours(v):
            if w in alive:
                deg[w] -= 1
    return d, order


def degeneracy(G: PlanarGraph) -> int:
    return degeneracy_order(G)[0]


def opposite_face(G: PlanarGraph, v: int, f: Face) -> Face | None:
    """The 5-face meeting ``f`` only in ``v``, for a degree-4 vertex ``v``.

    Returns ``None`` when the face across ``v`` is not a 5-face.
    """
    if G.degree(v) != 4:
        raise ValueError(f"vertex {v} has degree {G.degree(v)}, expected 4")
    if f.length != 5:
        raise ValueError("opposite faces are defined for 5-faces only")
    around = G.faces_at(v)
    if f not in around:
        raise ValueError(f"face {f.key} is not incident with vertex {v}")
    for g in around:
        if g != f and g.length == 5 and (g.vertices & f.vertices) == {v}:
            return g
    return None


# -- text format --------------------------------------------------------------

def _tokens(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def parse_graph(text: str, embed: bool = True) -> PlanarGraph:
    """Parse the embedded-graph text format.

    Header ``n m``, then ``m`` edge lines ``u v``, then optional rotation
    lines ``rot u: w1 w2 ...``.  Vertex ids may be 0- or 1-based (or any
    integers); they are remapped to ``0..n-1`` and the originals are kept in
    ``labels``.  Without rotation lines an embedding is computed when
    ``embed`` is true.
    """
    lines = list(_tokens(text))
    if not lines:
        raise GraphFormatError("empty input")
    head = lines[0][1].split()
    if len(head) != 2 or not all(t.lstrip("-").isdigit() for t in head):
        raise GraphFormatError(f"line {lines[0][0]}: expected header 'n m'")
    n, m = int(head[0]), int(head[1])
    if n < 0 or m < 0:
        raise GraphFormatError("negative counts in header")
    body = lines[1:]
    edge_lines = [(no, ln) for no, ln in body if not ln.startswith("rot")]
    rot_lines = [(no, ln) for no, ln in body if ln.startswith("rot")]
    if len(edge_lines) != m:
        raise GraphFormatError(f"header declares {m} edges, found {len(edge_lines)}")

    raw_edges = []
    for no, ln in edge_lines:
        parts = ln.split()
        if len(parts) != 2:
            raise GraphFormatError(f"line {no}: malformed edge line {ln!r}")
        try:
            raw_edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise GraphFormatError(f"line {no}: malformed edge line {ln!r}") from None

    raw_rot: dict[int, list[int]] = {}
    for no, ln in rot_lines:
        try:
            left, right = ln[3:].split(":", 1)
            u = int(left)
            raw_rot[u] = [int(t) for t in right.split()]
        except ValueError:
            raise GraphFormatError(f"line {no}: malformed rotation line {ln!r}") from None

    ids = {x for e in raw_edges for x in e} | set(raw_rot)
    if ids and min(ids) >= 0 and max(ids) < n:
        mapping = {i: i for i in range(n)}
    elif ids and min(ids) >= 1 and max(ids) <= n:
        mapping = {i: i - 1 for i in range(1, n + 1)}
    else:
        if len(ids) > n:
            raise GraphFormatError(f"{len(ids)} distinct vertex ids but n = {n}")
        mapping = {x: i for i, x in enumerate(sorted(ids))}
    labels = {i: str(x) for x, i in mapping.items()}
    for i in range(n):
        labels.setdefault(i, str(i))

    adj: dict[int, set[int]] = {i: set() for i in range(n)}
    for u, v in raw_edges:
        a, b = mapping[u], mapping[v]
        if a == b:
            raise GraphFormatError(f"loop at vertex {u}")
        if b in adj[a]:
            raise GraphFormatError(f"duplicate edge {u} {v}")
        adj[a].add(b)
        adj[b].add(a)

    rotation = None
    if raw_rot:
        rotation = {i: () for i in range(n)}
        for u, ws in raw_rot.items():
            if u not in mapping or any(w not in mapping for w in ws):
                raise GraphFormatError(f"rotation at {u} names an unknown vertex")
            rotation[mapping[u]] = tuple(mapping[w] for w in ws)
    G = PlanarGraph(adj, rotation, labels)
    if rotation is not None:
        if not G.euler_ok():
            raise NonPlanarError("rotation system does not describe a plane embedding")
    elif embed:
        G = G.embedded()
    return G


def format_graph(G: PlanarGraph, comment: str | None = None) -> str:
    """Serialise to the embedded-graph text format (0-based ids)."""
    verts = G.vertices
    index = {v: i for i, v in enumerate(verts)}
    out = []
    if comment:
        out.extend(f"# {line}" for line in comment.splitlines())
    out.append(f"{G.n} {G.m}")
    out.extend(f"{index[u]} {index[v]}" for u, v in G.edges())
    if G.rotation is not None:
        for v in verts:
            out.append(f"rot {index[v]}: " + " ".join(str(index[w]) for w in G.rotation[v]))
    return "\n".join(out) + "\n"

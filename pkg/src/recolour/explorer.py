"""Exhaustive exploration of the recolouring graph on small instances.

Colourings are stored as rows of a ``(N, n)`` colour matrix and as
fixed-radix integer codes, vertex 0 being the most significant digit, so
sorted codes are lexicographic colour tuples.  Two colourings are adjacent
iff they agree after blanking out one vertex; grouping codes by that blanked
key gives every adjacency class at once.
"""

from __future__ import annotations

import sys
from collections import deque
from dataclasses import dataclass, field
from typing import Iterator, Mapping

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components, shortest_path

from .colouring import Palette, Schedule, available, colours_for
from .planar import PlanarGraph

DEFAULT_MAX_STATES = 10**8
EXACT_DIAMETER_LIMIT = 4000


class StateSpaceTooLarge(RuntimeError):
    pass


def _bfs_order(G: PlanarGraph) -> list[int]:
    """Vertices in BFS order per component; keeps partial enumerations small."""
    seen: set[int] = set()
    order: list[int] = []
    for s in G.vertices:
        if s in seen:
            continue
        seen.add(s)
        q = deque([s])
        while q:
            x = q.popleft()
            order.append(x)
            for y in sorted(G.neighbours(x)):
                if y not in seen:
                    seen.add(y)
                    q.append(y)
    return order


def colouring_matrix(G: PlanarGraph, palette: Palette, max_states: int = DEFAULT_MAX_STATES) -> np.ndarray:
    """All proper colourings as an ``(N, n)`` matrix, columns in
    ``G.vertices`` order, rows in lexicographic order."""
    verts = list(G.vertices)
    col = {v: i for i, v in enumerate(verts)}
    n = len(verts)
    if n == 0:
        return np.zeros((1, 0), dtype=np.int16)
    order = _bfs_order(G)
    rows = np.zeros((1, n), dtype=np.int16)
    placed: set[int] = set()
    for v in order:
        earlier = [col[w] for w in G.neighbours(v) if w in placed]
        parts = []
        for c in colours_for(palette, v):
            ok = np.ones(len(rows), dtype=bool)
            for j in earlier:
                ok &= rows[:, j] != c
            sub = rows[ok]
            if len(sub):
                sub = sub.copy()
                sub[:, col[v]] = c
                parts.append(sub)
        rows = np.concatenate(parts) if parts else np.zeros((0, n), dtype=np.int16)
        if len(rows) > max_states:
            raise StateSpaceTooLarge(
                f"more than {max_states} partial colourings after placing {len(placed) + 1} vertices"
            )
        placed.add(v)
    idx = np.lexsort(rows.T[::-1])
    return rows[idx]


def enumerate_colourings(
    G: PlanarGraph, palette: Palette, max_states: int = DEFAULT_MAX_STATES
) -> Iterator[dict[int, int]]:
    """Every proper (list-)colouring exactly once, in lexicographic order."""
    verts = G.vertices
    for row in colouring_matrix(G, palette, max_states):
        yield {v: int(c) for v, c in zip(verts, row)}


@dataclass
class ComponentInfo:
    size: int
    diameter: int
    exact: bool
    representative: tuple[int, ...]

    def to_dict(self) -> dict:
        return {
            "size": self.size,
            "diameter": self.diameter,
            "diameter_exact": self.exact,
            "representative": list(self.representative),
        }


@dataclass
class ExplorationResult:
    vertices: tuple[int, ...]
    n_colourings: int
    components: list[ComponentInfo]
    isolated: list[tuple[int, ...]] = field(default_factory=list)
    path: Schedule | None = None

    @property
    def n_components(self) -> int:
        return len(self.components)

    @property
    def connected(self) -> bool:
        return self.n_components <= 1

    def to_dict(self) -> dict:
        out = {
            "vertices": list(self.vertices),
            "colourings": self.n_colourings,
            "components": self.n_components,
            "connected": self.connected,
            "component_details": [c.to_dict() for c in self.components],
            "isolated": [list(t) for t in self.isolated],
        }
        if self.path is not None:
            out["path"] = self.path.to_json(self.vertices)
        return out


class RecolouringGraph:
    """The recolouring graph of ``G`` under ``palette``, held implicitly."""

    def __init__(self, G: PlanarGraph, palette: Palette, max_states: int = DEFAULT_MAX_STATES):
        self.G = G
        self.palette = palette
        self.vertices = G.vertices
        self.col = {v: i for i, v in enumerate(self.vertices)}
        self.rows = colouring_matrix(G, palette, max_states)
        n = len(self.vertices)
        top = max((max(colours_for(palette, v)) for v in self.vertices), default=1)
        self.radix = int(top) + 1
        if n and self.radix ** n >= 2**63:
            raise StateSpaceTooLarge("colouring codes do not fit in 64 bits")
        self.weights = np.array([self.radix ** (n - 1 - i) for i in range(n)], dtype=np.int64)
        self.codes = self.rows.astype(np.int64) @ self.weights if n else np.zeros(1, dtype=np.int64)
        self._groups: list[np.ndarray] | None = None
        self._labels: np.ndarray | None = None

    def __len__(self) -> int:
        return len(self.codes)

    # -- indexing -----------------------------------------------------------
    def code_of(self, sigma: Mapping[int, int]) -> int:
        return int(sum(int(sigma[v]) * int(w) for v, w in zip(self.vertices, self.weights)))

    def index_of(self, sigma: Mapping[int, int]) -> int:
        """Row index of ``sigma``; ``KeyError`` if it is not a proper colouring."""
        code = self.code_of(sigma)
        i = int(np.searchsorted(self.codes, code))
        if i >= len(self.codes) or self.codes[i] != code:
            raise KeyError("not a proper colouring of this graph")
        return i

    def colouring(self, i: int) -> dict[int, int]:
        return {v: int(c) for v, c in zip(self.vertices, self.rows[i])}

    # -- adjacency ----------------------------------------------------------
    def groups(self) -> list[np.ndarray]:
        """Per vertex: a group id per state; equal ids differ only there."""
        if self._groups is None:
            self._groups = []
            for i in range(len(self.vertices)):
                key = self.codes - self.rows[:, i].astype(np.int64) * self.weights[i]
                _, gid = np.unique(key, return_inverse=True)
                self._groups.append(gid.ravel())
        return self._groups

    def labels(self) -> np.ndarray:
        if self._labels is None:
            N = len(self.codes)
            src, dst = [], []
            for gid in self.groups():
                order = np.argsort(gid, kind="stable")
                same = gid[order[1:]] == gid[order[:-1]]
                src.append(order[:-1][same])
                dst.append(order[1:][same])
            if src:
                s = np.concatenate(src)
                d = np.concatenate(dst)
            else:
                s = d = np.zeros(0, dtype=np.int64)
            A = coo_matrix((np.ones(len(s), dtype=np.int8), (s, d)), shape=(N, N))
            _, self._labels = connected_components(A, directed=False)
        return self._labels

    def bfs(self, source: int) -> np.ndarray:
        """Distances from ``source``; -1 where unreachable."""
        N = len(self.codes)
        dist = np.full(N, -1, dtype=np.int64)
        dist[source] = 0
        frontier = np.zeros(N, dtype=bool)
        frontier[source] = True
        level = 0
        groups = self.groups()
        while frontier.any():
            nxt = np.zeros(N, dtype=bool)
            for gid in groups:
                hit = np.zeros(int(gid.max()) + 1, dtype=bool)
                hit[gid[frontier]] = True
                nxt |= hit[gid]
            nxt &= dist < 0
            level += 1
            dist[nxt] = level
            frontier = nxt
        return dist

    def _edges_within(self, members: np.ndarray):
        """All adjacent pairs among ``members`` (local indices)."""
        src, dst = [], []
        for gid in self.groups():
            g = gid[members]
            order = np.argsort(g, kind="stable")
            gs = g[order]
            for off in range(1, len(order)):
                same = gs[off:] == gs[:-off]
                if not same.any():
                    break
                src.append(order[:-off][same])
                dst.append(order[off:][same])
        if not src:
            return np.zeros(0, dtype=np.int64), np.zeros(0, dtype=np.int64)
        return np.concatenate(src), np.concatenate(dst)

    def diameter(self, members: np.ndarray, exact_limit: int = EXACT_DIAMETER_LIMIT) -> tuple[int, bool]:
        size = len(members)
        if size == 1:
            return 0, True
        if size <= exact_limit:
            s, d = self._edges_within(members)
            A = coo_matrix((np.ones(len(s)), (s, d)), shape=(size, size)).tocsr()
            best = 0
            for start in range(0, size, 512):
                D = shortest_path(A, directed=False, unweighted=True, indices=np.arange(start, min(size, start + 512)))
                best = max(best, int(D.max()))
            return best, True
        # double sweep: a lower bound only
        d0 = self.bfs(int(members[0]))
        far = int(np.argmax(d0))
        d1 = self.bfs(far)
        return int(d1.max()), False


def explore(
    G: PlanarGraph,
    palette: Palette,
    max_states: int = DEFAULT_MAX_STATES,
    exact_limit: int = EXACT_DIAMETER_LIMIT,
    alpha: Mapping[int, int] | None = None,
    beta: Mapping[int, int] | None = None,
) -> ExplorationResult:
    R = RecolouringGraph(G, palette, max_states)
    labels = R.labels()
    comps: list[ComponentInfo] = []
    isolated: list[tuple[int, ...]] = []
    order = np.argsort(labels, kind="stable")
    bounds = np.flatnonzero(np.diff(labels[order])) + 1
    for members in np.split(order, bounds) if len(R) else []:
        rep = tuple(int(c) for c in R.rows[members[0]])
        diam, exact = R.diameter(members, exact_limit)
        comps.append(ComponentInfo(len(members), diam, exact, rep))
        if len(members) == 1:
            isolated.append(rep)
    comps.sort(key=lambda c: c.representative)
    isolated.sort()
    result = ExplorationResult(G.vertices, len(R), comps, isolated)
    if alpha is not None and beta is not None:
        result.path = _path(R, alpha, beta)
    return result


def _path(R: RecolouringGraph, alpha: Mapping[int, int], beta: Mapping[int, int]) -> Schedule | None:
    a = R.index_of(alpha)
    b = R.index_of(beta)
    dist = R.bfs(b)
    if dist[a] < 0:
        return None
    cur = R.colouring(a)
    steps: list[tuple[int, int]] = []
    d = int(dist[a])
    while d > 0:
        for v in R.vertices:
            moved = False
            for c in available(R.G, cur, R.palette, v):
                nxt = dict(cur)
                nxt[v] = c
                j = R.index_of(nxt)
                if dist[j] == d - 1:
                    steps.append((v, c))
                    cur = nxt
                    d -= 1
                    moved = True
                    break
            if moved:
                break
        else:
            raise AssertionError("BFS distances inconsistent")
    return Schedule(dict(alpha), steps)


def find_path(
    G: PlanarGraph,
    palette: Palette,
    alpha: Mapping[int, int],
    beta: Mapping[int, int],
    max_states: int = DEFAULT_MAX_STATES,
) -> Schedule | None:
    """A shortest schedule from ``alpha`` to ``beta``, ties broken by the
    smallest ``(vertex, colour)`` step; ``None`` if they are not connected."""
    return _path(RecolouringGraph(G, palette, max_states), alpha, beta)


def component_of(
    G: PlanarGraph, palette: Palette, sigma: Mapping[int, int], max_states: int = DEFAULT_MAX_STATES
) -> list[dict[int, int]]:
    """Explicit BFS over the component of ``sigma`` without enumerating
    the whole state space."""
    verts = G.vertices
    start = tuple(sigma[v] for v in verts)
    seen = {start}
    q = deque([start])
    while q:
        t = q.popleft()
        cur = dict(zip(verts, t))
        for i, v in enumerate(verts):
            for c in available(G, cur, palette, v):
                u = t[:i] + (c,) + t[i + 1:]
                if u not in seen:
                    seen.add(u)
                    if len(seen) > max_states:
                        raise StateSpaceTooLarge(f"component exceeds {max_states} colourings")
                    q.append(u)
    return [dict(zip(verts, t)) for t in sorted(seen)]


def frozen_vertices(
    G: PlanarGraph, palette: Palette, sigma: Mapping[int, int], max_states: int = DEFAULT_MAX_STATES
) -> set[int]:
    comp = component_of(G, palette, sigma, max_states)
    return {v for v in G.vertices if all(g[v] == sigma[v] for g in comp)}


def is_frozen(
    G: PlanarGraph, palette: Palette, sigma: Mapping[int, int], v: int, max_states: int = DEFAULT_MAX_STATES
) -> bool:
    """No colouring reachable from ``sigma`` changes the colour of ``v``."""
    return v in frozen_vertices(G, palette, sigma, max_states)


def three_colouring(G: PlanarGraph) -> dict[int, int]:
    """A proper 3-colouring of a triangle-free graph by DSATUR backtracking."""
    for u, w in G.edges():
        if G.neighbours(u) & G.neighbours(w):
            raise ValueError(f"graph has a triangle on edge {u}-{w}")
    sigma: dict[int, int] = {}
    verts = list(G.vertices)

    def pick():
        best = None
        for v in verts:
            if v in sigma:
                continue
            sat = len({sigma[w] for w in G.neighbours(v) if w in sigma})
            key = (-sat, -G.degree(v), v)
            if best is None or key < best[0]:
                best = (key, v)
        return best[1]

    def solve() -> bool:
        if len(sigma) == len(verts):
            return True
        v = pick()
        used = {sigma[w] for w in G.neighbours(v) if w in sigma}
        for c in (1, 2, 3):
            if c not in used:
                sigma[v] = c
                if solve():
                    return True
                del sigma[v]
        return False

    old = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old, 4 * len(verts) + 100))
    try:
        if not solve():
            raise RuntimeError("no 3-colouring found")
    finally:
        sys.setrecursionlimit(old)
    return {v: sigma[v] for v in verts}

"""Finders for reducible and unavoidable structures: low-degree vertices,
light triangles, 2-degenerate 1-islands, bad pairs and the two forbidden
girth-5 configurations."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .planar import Face, PlanarGraph, opposite_face

MAX_ISLAND = 12


# -- light triangles and the list-11 reductions --------------------------------

def _embedded(G: PlanarGraph) -> PlanarGraph:
    return G if G.is_embedded else G.embedded()


def find_borodin_triangle(G: PlanarGraph) -> tuple[int, int, int] | None:
    """A 3-face whose degree sum is at most 17, first by face key."""
    G = _embedded(G)
    for f in G.faces:
        if f.length == 3 and len(f.vertices) == 3:
            if sum(G.degree(x) for x in f.walk) <= 17:
                return tuple(f.walk)
    return None


@dataclass(frozen=True)
class Reduction:
    """Vertices to delete, and the order in which to lift them back.

    ``bounds`` gives the per-vertex lift bound, aligned with ``lift_order``.
    """

    kind: str  # "deg4" | "edge55" | "triangle566"
    vertices: tuple[int, ...]
    lift_order: tuple[int, ...]
    bounds: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "vertices": list(self.vertices),
            "lift_order": list(self.lift_order),
            "bounds": list(self.bounds),
        }


def find_reduction_list11(G: PlanarGraph) -> Reduction:
    """First applicable case among: a vertex of degree at most 4, an edge
    joining two 5-vertices, a 5-6-6 triangle."""
    if G.n == 0:
        raise ValueError("empty graph has no reduction")
    for v in G.vertices:
        if G.degree(v) <= 4:
            return Reduction("deg4", (v,), (v,), (68,))
    for a, b in G.edges():
        if G.degree(a) == 5 and G.degree(b) == 5:
            # b is lifted first inside G - a, where it has degree 4
            return Reduction("edge55", (a, b), (b, a), (68, 95))
    tri = find_borodin_triangle(G)
    if tri is None:
        raise AssertionError("minimum degree 5 but no light triangle: input is not planar")
    degs = sorted((G.degree(x), x) for x in tri)
    if [d for d, _ in degs] != [5, 6, 6]:
        raise AssertionError(f"light triangle with degrees {[d for d, _ in degs]}, expected 5, 6, 6")
    v1, v2, v3 = degs[0][1], degs[1][1], degs[2][1]
    return Reduction("triangle566", (v1, v2, v3), (v3, v2, v1), (68, 95, 96))


# -- islands -------------------------------------------------------------------

@dataclass(frozen=True)
class IslandOrder:
    """``order[0]`` is the unconstrained first vertex; every later vertex
    has at most two neighbours among the outside and the earlier ones."""

    order: tuple[int, ...]

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self.order)

    def __len__(self) -> int:
        return len(self.order)

    def verify(self, G: PlanarGraph, max_size: int | None = MAX_ISLAND) -> bool:
        H = self.vertices
        if len(H) != len(self.order) or not H or not all(v in G for v in H):
            return False
        if max_size is not None and len(H) > max_size:
            return False
        for v in H:
            if len(G.neighbours(v) - H) > 1:
                return False
        earlier: set[int] = set()
        for i, v in enumerate(self.order):
            if i > 0:
                prior = sum(1 for w in G.neighbours(v) if w not in H or w in earlier)
                if prior > 2:
                    return False
            earlier.add(v)
        return True

    def to_json(self, G: PlanarGraph | None = None) -> dict:
        out = {"order": list(self.order), "size": len(self.order)}
        if G is not None:
            H = self.vertices
            earlier: set[int] = set()
            cert = []
            for v in self.order:
                cert.append({
                    "v": v,
                    "outside": sorted(G.neighbours(v) - H),
                    "earlier": sorted(G.neighbours(v) & earlier),
                })
                earlier.add(v)
            out["certificate"] = cert
        return out


@dataclass(frozen=True)
class Refutation:
    reason: str
    vertex: int | None = None
    stuck: frozenset[int] = field(default_factory=frozenset)

    def __bool__(self) -> bool:
        return False


def is_island(G: PlanarGraph, H: Iterable[int]) -> IslandOrder | Refutation:
    """Certificate that ``G[H]`` is a 2-degenerate 1-island, or a refutation.

    The order is built back to front: repeatedly delete a vertex of ``H``
    with at most two neighbours left in the graph, so that the last
    survivor becomes the first vertex.  Deleting only lowers degrees, so
    this greedy never misses an order that exists.
    """
    H = frozenset(H)
    if not H:
        return Refutation("empty vertex set")
    for v in sorted(H):
        if v not in G:
            return Refutation("vertex not in graph", v)
        if len(G.neighbours(v) - H) > 1:
            return Refutation("more than one neighbour outside", v)
    alive = set(G.vertices)
    remaining = set(H)
    back: list[int] = []
    while len(remaining) > 1:
        pick = next(
            (x for x in sorted(remaining) if sum(1 for w in G.neighbours(x) if w in alive) <= 2),
            None,
        )
        if pick is None:
            return Refutation("no vertex of degree at most 2 left", stuck=frozenset(remaining))
        back.append(pick)
        remaining.discard(pick)
        alive.discard(pick)
    return IslandOrder(tuple(remaining) + tuple(reversed(back)))


def _a1_paths(G: PlanarGraph, max_size: int):
    """Paths of at most ``max_size`` vertices of degree at most 3 whose ends
    have degree 2."""
    for s in G.vertices:
        if G.degree(s) != 2:
            continue
        stack = [(s, (s,))]
        while stack:
            x, path = stack.pop()
            for y in sorted(G.neighbours(x), reverse=True):
                if y in path or G.degree(y) > 3:
                    continue
                p = path + (y,)
                if G.degree(y) == 2:
                    yield p
                elif len(p) < max_size:
                    stack.append((y, p))


def _a2_cycles(G: PlanarGraph, max_size: int):
    """Cycles of at most ``max_size`` vertices of degree at most 3 through a
    degree-2 vertex."""
    for s in G.vertices:
        if G.degree(s) != 2:
            continue
        stack = [(s, (s,))]
        while stack:
            x, path = stack.pop()
            for y in sorted(G.neighbours(x), reverse=True):
                if y == s and len(path) >= 3:
                    yield path
                if y in path or G.degree(y) > 3 or len(path) >= max_size:
                    continue
                stack.append((y, path + (y,)))


def _closure_search(G: PlanarGraph, seed: int, max_size: int, seen: set, budget: list[int]):
    stack = [frozenset([seed])]
    while stack:
        S = stack.pop()
        if S in seen or len(S) > max_size:
            continue
        seen.add(S)
        budget[0] -= 1
        if budget[0] < 0:
            return None
        heavy = next((x for x in sorted(S) if len(G.neighbours(x) - S) > 1), None)
        if heavy is not None:
            out = sorted(G.neighbours(heavy) - S)
            branches = [S | set(out)] + [S | (set(out) - {w}) for w in out]
            stack.extend(b for b in reversed(branches) if len(b) <= max_size)
            continue
        cert = is_island(G, S)
        if cert:
            return cert
        if len(S) < max_size:
            border = sorted(set().union(*(G.neighbours(x) for x in S)) - S, reverse=True)
            stack.extend(S | {y} for y in border)
    return None


def find_island(G: PlanarGraph, max_size: int = MAX_ISLAND, max_subsets: int = 2_000_000) -> IslandOrder | None:
    """A 2-degenerate 1-island on at most ``max_size`` vertices.

    Fast paths first (a vertex of degree at most 1, then short paths and
    cycles of low-degree vertices); then a complete search over connected
    vertex sets grown from each seed, where a vertex with two or more
    outside neighbours forces all but one of them in.  Every candidate is
    checked with :func:`is_island`.
    """
    for v in G.vertices:
        if G.degree(v) <= 1:
            return is_island(G, {v}) or None
    for p in _a1_paths(G, max_size):
        cert = is_island(G, p)
        if cert:
            return cert
    for c in _a2_cycles(G, max_size):
        cert = is_island(G, c)
        if cert:
            return cert
    seen: set = set()
    budget = [max_subsets]
    for s in sorted(G.vertices, key=lambda x: (G.degree(x), x)):
        cert = _closure_search(G, s, max_size, seen, budget)
        if cert:
            return cert
        if budget[0] < 0:
            break
    return None


# -- bad pairs and configurations ----------------------------------------------

@dataclass
class BadPairSet:
    """Least fixpoint of the bad-pair rules; ranks give induction depth."""

    ranks: dict[tuple[int, str], int]
    faces: dict[str, Face]
    cites: dict[tuple[int, str], str] = field(default_factory=dict)

    def is_bad(self, v: int, f: Face | str) -> bool:
        key = f if isinstance(f, str) else f.key
        return (v, key) in self.ranks

    def others_bad(self, f: Face, v: int) -> bool:
        """Every vertex of ``f`` except ``v`` is bad for ``f``."""
        return all(self.is_bad(x, f) for x in f.vertices if x != v)

    def all_bad(self, f: Face) -> bool:
        return f.length == 5 and all(self.is_bad(x, f) for x in f.vertices)

    def faces_bad_for(self, v: int) -> list[str]:
        return sorted(k for (x, k) in self.ranks if x == v)

    def __len__(self) -> int:
        return len(self.ranks)

    def __contains__(self, pair) -> bool:
        v, f = pair
        return self.is_bad(v, f)

    def to_json(self) -> dict:
        return {
            "pairs": [
                {"v": v, "face": k, "rank": r, **({"via": self.cites[(v, k)]} if (v, k) in self.cites else {})}
                for (v, k), r in sorted(self.ranks.items())
            ]
        }


def bad_pairs(G: PlanarGraph) -> BadPairSet:
    G = _embedded(G)
    five = {f.key: f for f in G.faces if f.length == 5}
    ranks: dict[tuple[int, str], int] = {}
    cites: dict[tuple[int, str], str] = {}
    for f in five.values():
        for u in f.vertices:
            if G.degree(u) == 3:
                ranks[(u, f.key)] = 0
    candidates = []
    for f in five.values():
        for u in sorted(f.vertices):
            if G.degree(u) == 4:
                g = opposite_face(G, u, f)
                if g is not None:
                    candidates.append((u, f, g))
    changed = True
    while changed:
        changed = False
        snapshot = dict(ranks)
        for u, f, g in candidates:
            if (u, f.key) in ranks:
                continue
            others = [(x, g.key) for x in g.vertices if x != u]
            if all(p in snapshot for p in others):
                ranks[(u, f.key)] = 1 + max(snapshot[p] for p in others)
                cites[(u, f.key)] = g.key
                changed = True
    return BadPairSet(ranks, five, cites)


@dataclass
class ConfigWitness:
    kind: str  # "LowDegree" | "Config1" | "Config2"
    vertex: int | None = None
    faces: tuple[str, ...] = ()
    citations: list[tuple[int, str, int]] = field(default_factory=list)

    def verify(self, G: PlanarGraph, B: BadPairSet | None = None) -> bool:
        G = _embedded(G)
        if self.kind == "LowDegree":
            return self.vertex in G and G.degree(self.vertex) <= 2
        B = B if B is not None else bad_pairs(G)
        for v, k, _ in self.citations:
            if not B.is_bad(v, k):
                return False
        if self.kind == "Config1":
            if len(self.faces) != 1 or self.faces[0] not in B.faces:
                return False
            return B.all_bad(B.faces[self.faces[0]])
        if self.kind == "Config2":
            v = self.vertex
            if v not in G or G.degree(v) != 5 or len(set(self.faces)) != 4:
                return False
            at = {f.key for f in G.faces_at(v)}
            for k in self.faces:
                if k not in B.faces or k not in at or not B.others_bad(B.faces[k], v):
                    return False
            return True
        return False

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "vertex": self.vertex,
            "faces": list(self.faces),
            "certificate": [{"v": v, "face": k, "rank": r} for v, k, r in self.citations],
        }


def find_unavoidable_config(G: PlanarGraph, B: BadPairSet | None = None) -> ConfigWitness:
    """A vertex of degree at most 2, an all-bad 5-face, or a 5-vertex with
    four incident 5-faces whose other vertices are all bad for them."""
    G = _embedded(G)
    for v in G.vertices:
        if G.degree(v) <= 2:
            return ConfigWitness("LowDegree", vertex=v)
    B = B if B is not None else bad_pairs(G)
    for k in sorted(B.faces):
        f = B.faces[k]
        if B.all_bad(f):
            cites = [(x, k, B.ranks[(x, k)]) for x in sorted(f.vertices)]
            return ConfigWitness("Config1", faces=(k,), citations=cites)
    for v in G.vertices:
        if G.degree(v) != 5:
            continue
        good = sorted({f.key for f in G.faces_at(v) if f.length == 5 and B.others_bad(f, v)})
        if len(good) >= 4:
            chosen = tuple(good[:4])
            cites = [
                (x, k, B.ranks[(x, k)]) for k in chosen for x in sorted(B.faces[k].vertices) if x != v
            ]
            return ConfigWitness("Config2", vertex=v, faces=chosen, citations=cites)
    raise RuntimeError("no unavoidable configuration found: input violates girth 5 or planarity")

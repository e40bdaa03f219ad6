import itertools

import networkx as nx
import pytest

from recolour import generators as gen
from recolour.planar import PlanarGraph


def brute_girth(G: PlanarGraph) -> float:
    """Shortest cycle from networkx's simple-cycle enumeration."""
    return min((len(c) for c in nx.simple_cycles(G.to_networkx())), default=float("inf"))


def brute_degeneracy(G: PlanarGraph) -> int:
    """Max over vertex subsets of the minimum degree of the induced subgraph."""
    verts = G.vertices
    best = 0
    for r in range(1, len(verts) + 1):
        for S in itertools.combinations(verts, r):
            keep = set(S)
            best = max(best, min(len(G.neighbours(v) & keep) for v in S))
    return best


def count_colourings(G: PlanarGraph, k: int) -> int:
    """Chromatic polynomial by deletion-contraction on networkx graphs."""
    return _chromatic(G.to_networkx(), k)


def _chromatic(g: nx.Graph, k: int) -> int:
    if g.number_of_edges() == 0:
        return k ** g.number_of_nodes()
    u, v = next(iter(g.edges()))
    deleted = g.copy()
    deleted.remove_edge(u, v)
    contracted = nx.contracted_nodes(deleted, u, v, self_loops=False)
    contracted = nx.Graph(contracted)
    return _chromatic(deleted, k) - _chromatic(contracted, k)


def subdivide_edge(G: PlanarGraph, a: int, b: int) -> PlanarGraph:
    """Insert a new vertex on edge ``ab``, keeping the embedding."""
    x = max(G.vertices) + 1
    rot = {v: tuple(x if (v, w) in ((a, b), (b, a)) else w for w in r) for v, r in G.rotation.items()}
    rot[x] = (a, b)
    return PlanarGraph({v: set(r) for v, r in rot.items()}, rot)


def bowtie(extra_on_b: int = 0) -> tuple[PlanarGraph, int]:
    """Two pentagons sharing only vertex 0; every other pentagon vertex gets
    one pendant, and ``extra_on_b`` more pendants go on vertex 5.  All
    pendants sit in the outer face."""
    cyc = {1: (0, 2), 2: (1, 3), 3: (2, 4), 4: (3, 0), 5: (0, 6), 6: (5, 7), 7: (6, 8), 8: (7, 0)}
    rot = {0: (1, 8, 5, 4)}
    for v, (a, b) in cyc.items():
        rot[v] = (a, b, v + 8)
        rot[v + 8] = (v,)
    nxt = 17
    for _ in range(extra_on_b):
        rot[5] = rot[5] + (nxt,)
        rot[nxt] = (5,)
        nxt += 1
    return PlanarGraph({v: set(r) for v, r in rot.items()}, rot), 0


@pytest.fixture
def cube():
    return gen.cube()


@pytest.fixture
def dodecahedron():
    return gen.dodecahedron()

import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from recolour import generators as gen
from recolour.planar import (
    GraphFormatError,
    NonPlanarError,
    PlanarGraph,
    degeneracy_order,
    format_graph,
    girth,
    opposite_face,
    parse_graph,
    trace_faces,
)

from conftest import brute_degeneracy, brute_girth, subdivide_edge

C5_TEXT = """5 5
0 1
1 2
2 3
3 4
4 0
"""

# standard cube drawing: outer square 0-1-2-3, inner square 4-5-6-7
CUBE_TEXT = """8 12
0 1
1 2
2 3
3 0
4 5
5 6
6 7
7 4
0 4
1 5
2 6
3 7
rot 0: 1 4 3
rot 1: 2 5 0
rot 2: 3 6 1
rot 3: 0 7 2
rot 4: 0 5 7
rot 5: 1 6 4
rot 6: 2 7 5
rot 7: 3 4 6
"""


def test_parse_cycle():
    G = parse_graph(C5_TEXT)
    assert (G.n, G.m) == (5, 5)
    assert G.is_embedded


def test_parse_cube_faces_hand_traced():
    G = parse_graph(CUBE_TEXT)
    faces = sorted(f.walk for f in G.faces)
    assert len(faces) == 6 and all(len(w) == 4 for w in faces)
    # inner square and outer square each appear as a face
    assert {frozenset(w) for w in faces} >= {frozenset({0, 1, 2, 3}), frozenset({4, 5, 6, 7})}


def test_parse_one_based_ids_are_remapped():
    G = parse_graph("3 3\n1 2\n2 3\n3 1\n")
    assert G.vertices == (0, 1, 2)
    assert G.labels == {0: "1", 1: "2", 2: "3"}


@pytest.mark.parametrize(
    "text",
    [
        "2 1\n1 1\n",
        "3 2\n0 1\n0 1\n",
        "3 3\n0 1\n1 2\n",
        "x y\n",
        "",
        "3 2\n0 1\n1 2\nrot 1: 0\n",
    ],
)
def test_parse_errors(text):
    with pytest.raises(GraphFormatError):
        parse_graph(text)


def test_bad_rotation_is_rejected():
    # K4 with a rotation at vertex 0 that makes the system non-planar
    text = "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n" + "".join(
        f"rot {v}: {' '.join(map(str, r))}\n"
        for v, r in {0: (1, 2, 3), 1: (0, 2, 3), 2: (0, 1, 3), 3: (0, 1, 2)}.items()
    )
    with pytest.raises(NonPlanarError):
        parse_graph(text)


def test_format_round_trip(dodecahedron):
    H = parse_graph(format_graph(dodecahedron, comment="dodecahedron\nsecond line"))
    assert H.rotation == dodecahedron.rotation
    assert sorted(f.key for f in H.faces) == sorted(f.key for f in dodecahedron.faces)


def test_cycle_has_two_faces():
    faces = trace_faces(gen.cycle(5))
    assert [f.length for f in faces] == [5, 5]


def test_dodecahedron_faces(dodecahedron):
    assert len(dodecahedron.faces) == 12
    assert all(f.length == 5 for f in dodecahedron.faces)


def test_cube_faces(cube):
    assert sorted(f.length for f in cube.faces) == [4] * 6


def test_face_key_is_min_rotation():
    f = gen.cycle(5).faces[0]
    assert f.walk[0] == min(f.walk)
    assert f.key == "-".join(map(str, f.walk))


@pytest.mark.parametrize(
    "G, g",
    [
        (gen.cycle(5), 5),
        (gen.dodecahedron(), 5),
        (gen.hex_patch(2), 6),
        (gen.cube(), 4),
        (gen.path(4), math.inf),
    ],
)
def test_girth(G, g):
    assert girth(G) == g


@pytest.mark.parametrize(
    "G, d",
    [
        (gen.path(6), 1),
        (gen.dodecahedron(), 3),
        (gen.hex_patch(2), 2),
        (gen.icosahedron(), 5),
    ],
)
def test_degeneracy(G, d):
    dd, order = degeneracy_order(G)
    assert dd == d
    assert sorted(order) == list(G.vertices)


def test_degeneracy_order_is_valid_elimination(dodecahedron):
    d, order = degeneracy_order(dodecahedron)
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        assert sum(1 for w in dodecahedron.neighbours(v) if pos[w] > pos[v]) <= d


def _degree4_vertex_with_four_5faces():
    G = gen.double_flower(4)
    for v in G.vertices:
        if G.degree(v) == 4 and all(f.length == 5 for f in G.faces_at(v)):
            return G, v
    raise AssertionError("double flower should contain such a vertex")


def test_opposite_face_pairs_across_the_vertex():
    G, v = _degree4_vertex_with_four_5faces()
    around = G.faces_at(v)
    for i, f in enumerate(around):
        assert opposite_face(G, v, f) == around[(i + 2) % 4]


def test_opposite_face_none_when_not_a_5face():
    G, v = _degree4_vertex_with_four_5faces()
    f = G.faces_at(v)[0]
    g = opposite_face(G, v, f)
    a, b = next((a, b) for a, b in g.darts() if v not in (a, b))
    H = subdivide_edge(G, a, b)
    f2 = next(h for h in H.faces_at(v) if h.key == f.key)
    assert opposite_face(H, v, f2) is None
    assert any(h.length == 6 for h in H.faces_at(v))


def test_opposite_face_rejects_non_incident_face():
    G, v = _degree4_vertex_with_four_5faces()
    far = next(f for f in G.faces if v not in f.vertices and f.length == 5)
    with pytest.raises(ValueError):
        opposite_face(G, v, far)


def test_generators_basic():
    assert gen.generate("cycle", 6).m == 6
    Q = gen.cube()
    assert Q.n == 8 and all(Q.degree(v) == 3 for v in Q.vertices) and girth(Q) == 4
    I = gen.icosahedron()
    assert I.n == 12 and all(I.degree(v) == 5 for v in I.vertices)
    assert all(f.length == 3 for f in I.faces)


def test_generate_subdivided():
    G = gen.generate("subdivided", "icosahedron")
    assert girth(G) == 6
    assert G.n == 12 + 30


ALL_GENERATED = [
    gen.cycle(7),
    gen.cube(),
    gen.dodecahedron(),
    gen.icosahedron(),
    gen.octahedron(),
    gen.tetrahedron(),
    gen.hex_patch(3),
    gen.subdivide(gen.cube()),
    gen.stellate(gen.cube()),
    gen.pentakis_dodecahedron(),
    gen.star_subdivision(7),
    gen.pentagon_fan(4),
    gen.pentagon_fan(5, closed=True),
    gen.double_flower(4),
    gen.double_flower(5),
    gen.locked_face_gadget(4),
    gen.delaunay(25, 3),
    gen.random_girth_planar(30, 6, 2),
]


@pytest.mark.parametrize("G", ALL_GENERATED, ids=lambda G: repr(G))
def test_euler_and_handshake(G):
    assert G.is_connected()
    assert G.n - G.m + len(G.faces) == 2
    assert sum(f.length for f in G.faces) == 2 * G.m


def test_planarity_required_for_embedding():
    K5 = gen.complete(5)
    assert not K5.is_embedded


# -- brute-force cross-checks on small graphs -----------------------------------

@st.composite
def small_graphs(draw, max_n=9):
    n = draw(st.integers(1, max_n))
    seed = draw(st.integers(0, 10**6))
    p = draw(st.floats(0.1, 0.6))
    rng = random.Random(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return PlanarGraph.from_edges(n, edges)


@settings(max_examples=60, deadline=None)
@given(small_graphs())
def test_girth_matches_brute_force(G):
    assert girth(G) == brute_girth(G)


@settings(max_examples=60, deadline=None)
@given(small_graphs(max_n=10))
def test_degeneracy_matches_brute_force(G):
    assert degeneracy_order(G)[0] == brute_degeneracy(G)


@settings(max_examples=40, deadline=None)
@given(st.integers(4, 40), st.integers(0, 1000))
def test_delaunay_is_plane_triangulation(n, seed):
    G = gen.delaunay(n, seed)
    assert G.n - G.m + len(G.faces) == 2
    assert G.m <= 3 * G.n - 6


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6))
def test_relabel_preserves_faces(seed):
    G = gen.dodecahedron()
    perm = list(G.vertices)
    random.Random(seed).shuffle(perm)
    mapping = dict(zip(G.vertices, perm))
    H = G.relabel(mapping)
    assert sorted(f.length for f in H.faces) == sorted(f.length for f in G.faces)
    assert {frozenset(mapping[x] for x in f.vertices) for f in G.faces} == {f.vertices for f in H.faces}

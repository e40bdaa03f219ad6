import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from recolour import generators as gen
from recolour.corpus import standard_corpus
from recolour.planar import PlanarGraph, girth, opposite_face
from conftest import bowtie
from recolour.structure import (
    ConfigWitness,
    IslandOrder,
    Refutation,
    bad_pairs,
    find_borodin_triangle,
    find_island,
    find_reduction_list11,
    find_unavoidable_config,
    is_island,
)


def brute_is_island(G, H):
    """Definition checked directly: at most one outside neighbour each, and
    some order where every vertex has at most two earlier-or-outside
    neighbours."""
    H = set(H)
    if any(len(G.neighbours(v) - H) > 1 for v in H):
        return False
    for order in itertools.permutations(sorted(H)):
        seen = set()
        ok = True
        for v in order:
            if len(G.neighbours(v) & seen) + len(G.neighbours(v) - H) > 2:
                ok = False
                break
            seen.add(v)
        if ok:
            return True
    return False


# -- triangles and list-11 reductions ----------------------------------------------

def test_borodin_triangle_icosahedron():
    G = gen.icosahedron()
    tri = find_borodin_triangle(G)
    assert tri is not None and sum(G.degree(x) for x in tri) == 15


def test_borodin_triangle_absent_without_triangles():
    assert find_borodin_triangle(gen.hex_patch(2)) is None


def test_borodin_triangle_with_degree4_vertex():
    G = gen.octahedron()
    tri = find_borodin_triangle(G)
    assert tri is not None and sum(G.degree(x) for x in tri) == 12


def test_reduction_deg4_on_any_light_vertex():
    G = gen.stellate(gen.cube())
    red = find_reduction_list11(G)
    assert red.kind == "deg4" and G.degree(red.vertices[0]) <= 4


def test_reduction_triangle566_on_pentakis():
    G = gen.pentakis_dodecahedron()
    assert G.min_degree() == 5
    assert not any(G.degree(a) == 5 and G.degree(b) == 5 for a, b in G.edges())
    red = find_reduction_list11(G)
    assert red.kind == "triangle566"
    assert sorted(G.degree(x) for x in red.vertices) == [5, 6, 6]
    assert red.lift_order[-1] == red.vertices[0]


# -- islands ------------------------------------------------------------------------

def test_pendant_is_singleton_island():
    G = gen.path(3)
    isl = find_island(G)
    assert len(isl) == 1 and G.degree(isl.order[0]) == 1
    assert is_island(G, {0}).order == (0,)


def test_c6_is_its_own_island():
    G = gen.cycle(6)
    whole = is_island(G, G.vertices)
    assert whole and whole.vertices == frozenset(G.vertices) and whole.verify(G)
    assert find_island(G).verify(G)


def test_hex_patch_island():
    G = gen.hex_patch(3)
    isl = find_island(G)
    assert isl is not None and len(isl) <= 12 and isl.verify(G)
    assert brute_is_island(G, isl.vertices) if len(isl) <= 8 else True


def test_c4_with_two_outside_neighbours_refuted():
    edges = [(0, 1), (1, 2), (2, 3), (3, 0)]
    nxt = 4
    for v in range(4):
        edges += [(v, nxt), (v, nxt + 1)]
        nxt += 2
    G = PlanarGraph.from_edges(nxt, edges)
    ref = is_island(G, range(4))
    assert isinstance(ref, Refutation) and not ref
    assert "outside" in ref.reason


def test_refutation_when_no_low_vertex_left():
    G = gen.cube()
    ref = is_island(G, G.vertices)
    assert not ref and ref.stuck


def test_island_json_carries_certificate():
    G = gen.cycle(6)
    data = find_island(G).to_json(G)
    assert data["order"] and "certificate" in data


@st.composite
def girth6_graphs(draw):
    n = draw(st.integers(6, 40))
    seed = draw(st.integers(0, 10**4))
    return gen.random_girth_planar(n, 6, seed)


@settings(max_examples=40, deadline=None)
@given(girth6_graphs())
def test_island_round_trip(G):
    isl = find_island(G)
    assert isl is not None and len(isl) <= 12
    again = is_island(G, isl.vertices)
    assert again and again.verify(G)
    if len(isl) <= 7:
        assert brute_is_island(G, isl.vertices)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6))
def test_is_island_matches_definition(seed):
    rng = random.Random(seed)
    G = gen.random_girth_planar(rng.randint(6, 16), rng.choice([4, 5, 6]), seed % 1000)
    H = set(rng.sample(G.vertices, rng.randint(1, min(7, G.n))))
    assert bool(is_island(G, H)) == brute_is_island(G, H)


def test_island_order_verify_rejects_bad_order():
    G = gen.cycle(6)
    assert IslandOrder(tuple(range(6))).verify(G)
    Q = gen.cube()
    assert not IslandOrder(Q.vertices).verify(Q)
    # too large for the size cap
    C13 = gen.cycle(13)
    assert not IslandOrder(tuple(range(13))).verify(C13)


# -- bad pairs ------------------------------------------------------------------------

def test_dodecahedron_all_pairs_bad_rank0(dodecahedron):
    B = bad_pairs(dodecahedron)
    assert len(B) == 60
    assert set(B.ranks.values()) == {0}


def test_bowtie_degree4_vertex_bad_for_both_rank1():
    G, u = bowtie()
    B = bad_pairs(G)
    fives = [f for f in G.faces_at(u) if f.length == 5]
    assert len(fives) == 2
    for f in fives:
        assert B.ranks[(u, f.key)] == 1
        assert B.cites[(u, f.key)] == opposite_face(G, u, f).key


def test_degree5_vertex_on_opposite_face_blocks_badness():
    G, u = bowtie(extra_on_b=2)
    assert G.degree(5) == 5
    B = bad_pairs(G)
    f_a = next(f for f in G.faces_at(u) if f.length == 5 and 1 in f.vertices)
    f_b = next(f for f in G.faces_at(u) if f.length == 5 and 5 in f.vertices)
    assert not B.is_bad(u, f_a)
    assert B.is_bad(u, f_b)


def test_fixpoint_stable_under_recomputation():
    G = gen.double_flower(4)
    assert bad_pairs(G).ranks == bad_pairs(G).ranks


def _two_bad_faces_force_config(G):
    B = bad_pairs(G)
    if any(B.all_bad(f) for f in B.faces.values()):
        return True
    for v in G.vertices:
        if G.degree(v) != 4:
            continue
        around = G.faces_at(v)
        for i in range(4):
            f, g = around[i], around[(i + 2) % 4]
            if f.length == 5 and g.length == 5 and B.is_bad(v, f) and B.is_bad(v, g):
                return False
        if len(B.faces_bad_for(v)) > 2:
            return False
    return True


@pytest.mark.parametrize("entry", [e for e in standard_corpus() if girth(e.graph) >= 5], ids=lambda e: e.name)
def test_two_bad_faces_consequence_on_corpus(entry):
    assert _two_bad_faces_force_config(entry.graph)


@settings(max_examples=30, deadline=None)
@given(st.integers(10, 40), st.integers(0, 10**4))
def test_two_bad_faces_consequence_random(n, seed):
    assert _two_bad_faces_force_config(gen.random_girth_planar(n, 5, seed))


def test_adding_non_facial_structure_keeps_bad_pairs_monotone():
    # extra pendants change degrees only off the 5-faces' vertex sets
    G1, _ = bowtie()
    rot = dict(G1.rotation)
    rot[9], rot[17] = rot[9] + (17,), (9,)
    G2 = PlanarGraph({v: set(r) for v, r in rot.items()}, rot)
    assert set(bad_pairs(G2).ranks) == set(bad_pairs(G1).ranks)


# -- configurations ------------------------------------------------------------------

def test_config_lowdegree_on_c5():
    w = find_unavoidable_config(gen.cycle(5))
    assert w.kind == "LowDegree" and w.verify(gen.cycle(5))


def test_config1_on_dodecahedron(dodecahedron):
    w = find_unavoidable_config(dodecahedron)
    assert w.kind == "Config1" and w.verify(dodecahedron)
    assert len(w.citations) == 5


@pytest.mark.parametrize("d", [4, 5])
def test_split_dodecahedron_witness_verifies(d):
    G = gen.double_flower(d)
    assert girth(G) == 5 and G.min_degree() >= 3
    w = find_unavoidable_config(G)
    assert w.verify(G)


def test_config2_witness_certificate_checks():
    G = gen.double_flower(5)
    B = bad_pairs(G)
    hub = next(v for v in G.vertices if G.degree(v) == 5)
    faces = tuple(sorted(f.key for f in G.faces_at(hub))[:4])
    w = ConfigWitness("Config2", vertex=hub, faces=faces)
    assert w.verify(G, B) == all(B.others_bad(B.faces[k], hub) for k in faces)


def test_forged_witness_rejected(dodecahedron):
    w = find_unavoidable_config(dodecahedron)
    forged = ConfigWitness("Config1", faces=("0-1-2",), citations=w.citations)
    assert not forged.verify(dodecahedron)
    assert not ConfigWitness("LowDegree", vertex=0).verify(dodecahedron)


@settings(max_examples=30, deadline=None)
@given(st.integers(5, 40), st.integers(0, 10**4))
def test_config_never_exhausts_on_girth5(n, seed):
    G = gen.random_girth_planar(n, 5, seed)
    w = find_unavoidable_config(G)
    assert w.verify(G)


def _invalidate(B, broken):
    """Drop ``broken`` and, transitively, every pair citing a face that
    relies on a dropped pair."""
    alive = dict(B.ranks)
    dead = {broken}
    alive.pop(broken, None)
    changed = True
    while changed:
        changed = False
        for pair, face in list(B.cites.items()):
            if pair in alive and any(p[1] == face and p[0] != pair[0] for p in dead):
                del alive[pair]
                dead.add(pair)
                changed = True
    return set(alive)


def test_breaking_a_rank0_pair_matches_incremental_invalidation():
    G1, u = bowtie()
    B1 = bad_pairs(G1)
    face_b = next(f for f in G1.faces_at(u) if f.length == 5 and 6 in f.vertices)
    # raise vertex 6 (on face B) to degree 4 with a second pendant in the outer face
    rot = dict(G1.rotation)
    rot[6], rot[17] = rot[6] + (17,), (6,)
    G2 = PlanarGraph({v: set(r) for v, r in rot.items()}, rot)
    B2 = bad_pairs(G2)
    assert not B2.is_bad(6, face_b.key)
    assert set(B2.ranks) == _invalidate(B1, (6, face_b.key))
    assert not B2.is_bad(u, next(f for f in G1.faces_at(u) if f.length == 5 and 1 in f.vertices))

import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from recolour import generators as gen
from recolour.colouring import (
    ListAssignment,
    Schedule,
    adjacent,
    available,
    free,
    is_proper,
    locked,
    new_colours,
    validate_schedule,
)
from recolour.explorer import enumerate_colourings
from recolour.gadgets import cube_witness
from recolour.planar import PlanarGraph

C5 = gen.cycle(5)


def col(*cs):
    return dict(enumerate(cs))


def test_is_proper_examples():
    assert is_proper(C5, col(1, 2, 1, 2, 3))
    assert not is_proper(C5, col(1, 1, 2, 3, 2))


def test_is_proper_cube_antipodal():
    Q = gen.cube()
    sigma = cube_witness()
    assert is_proper(Q, sigma, 4)
    # every face shows all four colours
    assert all({sigma[v] for v in f.walk} == {1, 2, 3, 4} for f in Q.faces)


def test_is_proper_respects_lists():
    L = ListAssignment({0: frozenset({1, 2}), 1: frozenset({2, 3})})
    P2 = gen.path(2)
    assert is_proper(P2, {0: 1, 1: 2}, L)
    assert not is_proper(P2, {0: 3, 1: 2}, L)


def test_is_proper_rejects_partial():
    with pytest.raises(ValueError):
        is_proper(C5, col(1, 2, 1))


def test_adjacent_examples():
    a = col(1, 2, 1, 2, 3)
    assert not adjacent(a, a)
    assert adjacent(a, {**a, 0: 4})
    assert not adjacent(a, {**a, 0: 4, 1: 3})


def test_degree2_vertex_always_free_at_k4():
    for sigma in enumerate_colourings(C5, 4):
        assert all(free(C5, sigma, 4, v) for v in C5.vertices)


def test_locked_figure3_centre():
    G = gen.locked_face_gadget(4)
    # v = 0 has colour 4; u1, u4 are 1 and the hub pendants carry 2 and 3
    sigma = {0: 4, 1: 1, 4: 1, 9: 2, 10: 3}
    nb = {w: sigma.get(w) for w in G.neighbours(0)}
    assert set(nb) == {1, 4, 9, 10}
    full = _extend(G, sigma)
    assert locked(G, full, 4, 0)


def _extend(G, partial):
    for sigma in enumerate_colourings(G, 4):
        if all(sigma[v] == c for v, c in partial.items()):
            return sigma
    raise AssertionError("no extension")


def test_c6_cyclic_colouring_locked():
    C6 = gen.cycle(6)
    sigma = col(1, 2, 3, 1, 2, 3)
    assert all(locked(C6, sigma, 3, v) for v in C6.vertices)


def test_validate_empty_schedule():
    s = Schedule(col(1, 2, 1, 2, 3))
    rep = validate_schedule(C5, s, 4)
    assert rep.valid and rep.final == s.start and rep.max_ledger == 0


def test_validate_budget_violation_names_vertex():
    P2 = gen.path(2)
    steps = [(0, 3 if i % 2 == 0 else 1) for i in range(6144)]
    s = Schedule({0: 1, 1: 2}, steps)
    rep = validate_schedule(P2, s, 3, budget=6143)
    assert not rep.valid
    assert rep.vertex == 0 and "budget 6143" in rep.violation
    assert validate_schedule(P2, Schedule({0: 1, 1: 2}, steps[:-1]), 3, budget=6143).valid


@pytest.mark.parametrize(
    "steps, fragment",
    [
        ([(0, 1)], "no-op"),
        ([(0, 2)], "monochromatic"),
        ([(0, 5)], "inadmissible"),
        ([(9, 1)], "unknown vertex"),
    ],
)
def test_validate_rejects(steps, fragment):
    rep = validate_schedule(C5, Schedule(col(1, 2, 1, 2, 3), steps), 4)
    assert not rep.valid and fragment in rep.violation


def test_validate_expected_final():
    s = Schedule(col(1, 2, 1, 2, 3), [(0, 4)])
    assert validate_schedule(C5, s, 4, expected_final=col(4, 2, 1, 2, 3)).valid
    assert not validate_schedule(C5, s, 4, expected_final=col(1, 2, 1, 2, 3)).valid


def test_new_colours_examples():
    s = Schedule(col(1, 2, 1, 2, 3), [(0, 4)])
    assert new_colours({2, 3}, s) == []
    s = Schedule(col(1, 2, 1, 2, 4), [(2, 3)])
    assert new_colours({2}, s) == [3]


def test_new_colours_five_steps_on_neighbourhood():
    # v = 0 on C5; its neighbours 1 and 4 move five times in total
    start = col(1, 2, 3, 1, 3)
    steps = [(1, 4), (4, 2), (1, 2), (4, 4), (1, 4)]
    s = Schedule(start, steps)
    assert validate_schedule(C5, s, 4).valid
    assert new_colours(C5.neighbours(0), s) == [4, 2, 2, 4, 4]


def test_schedule_json_round_trip():
    s = Schedule(col(1, 2, 1, 2, 3), [(0, 4), (2, 3)])
    data = s.to_json([0, 1, 2, 3, 4])
    assert data["expected_final"] == [4, 2, 3, 2, 3]
    t = Schedule.from_json(data)
    assert t == s


def test_then_requires_matching_endpoints():
    a = Schedule(col(1, 2, 1, 2, 3), [(0, 4)])
    with pytest.raises(ValueError):
        a.then(Schedule(col(1, 2, 1, 2, 3), []))


# -- properties -----------------------------------------------------------------

colourings5 = st.lists(st.integers(1, 4), min_size=5, max_size=5).map(lambda cs: dict(enumerate(cs)))


@given(colourings5, colourings5)
def test_adjacent_symmetric_and_irreflexive(a, b):
    assert adjacent(a, b) == adjacent(b, a)
    assert not adjacent(a, a)


@st.composite
def schedules_on_c5(draw):
    start = dict(enumerate(draw(st.sampled_from([(1, 2, 1, 2, 3), (1, 2, 3, 1, 2), (2, 3, 4, 1, 3)]))))
    steps = draw(st.lists(st.tuples(st.integers(0, 4), st.integers(1, 4)), max_size=12))
    return Schedule(start, steps)


def _prefixes_proper(G, s):
    cur = dict(s.start)
    for v, c in s.steps:
        if cur[v] == c:
            return False
        cur[v] = c
        if not is_proper(G, cur, 4):
            return False
    return True


@settings(max_examples=300)
@given(schedules_on_c5())
def test_validate_iff_every_prefix_proper(s):
    assert validate_schedule(C5, s, 4).valid == _prefixes_proper(C5, s)


SMALL = [gen.path(3), gen.cycle(4), gen.cycle(5), gen.complete(4), gen.cube()]


@pytest.mark.parametrize("G", SMALL, ids=repr)
@pytest.mark.parametrize("k", [3, 4])
def test_locked_iff_no_single_recolouring(G, k):
    # exhaustive on graphs with at most 8 vertices
    for sigma in enumerate_colourings(G, k):
        for v in G.vertices:
            moves = available(G, sigma, k, v)
            assert locked(G, sigma, k, v) == (not moves)
            for c in moves:
                assert validate_schedule(G, Schedule(sigma, [(v, c)]), k).valid


@settings(max_examples=100, deadline=None)
@given(schedules_on_c5(), st.integers(0, 10**6))
def test_ledger_additivity(s, seed):
    if not validate_schedule(C5, s, 4).valid:
        return
    rng = random.Random(seed)
    cur = s.final()
    steps = []
    for _ in range(8):
        v = rng.choice(C5.vertices)
        opts = available(C5, cur, 4, v)
        if opts:
            c = rng.choice(opts)
            cur[v] = c
            steps.append((v, c))
    t = Schedule(s.final(), steps)
    both = s.then(t)
    assert both.ledger == s.ledger + t.ledger
    assert validate_schedule(C5, both, 4).valid


def test_list_assignment_uniform():
    L = ListAssignment.uniform(range(3), range(1, 12))
    assert L.min_size() == 11 and L[2] == frozenset(range(1, 12))


def test_colour_permutation_preserves_properness():
    for perm in itertools.permutations(range(1, 5)):
        pi = dict(zip(range(1, 5), perm))
        sigma = {v: pi[c] for v, c in cube_witness().items()}
        assert is_proper(gen.cube(), sigma, 4)


def test_arbitrary_graph_without_rotation():
    G = PlanarGraph.from_edges(3, [(0, 1), (1, 2)])
    assert is_proper(G, {0: 1, 1: 2, 2: 1})

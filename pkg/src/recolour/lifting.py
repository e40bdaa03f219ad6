"""Constructive recolouring: lifting a schedule through one vertex, the
degeneracy and island reductions, and the two end-to-end pipelines."""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from typing import Mapping

from .colouring import ListAssignment, Palette, Schedule, colours_for, validate_schedule
from .planar import PlanarGraph, degeneracy_order, girth
from .structure import IslandOrder, find_island, find_reduction_list11

GIRTH6_BUDGET = 6143
LIST11_BUDGET = 100
OUTSIDE_BUDGET = 6143


class BudgetError(AssertionError):
    pass


@dataclass
class BudgetLedger:
    """Recolour counts against declared per-vertex bounds."""

    bounds: dict[int, int] = field(default_factory=dict)
    counts: Counter = field(default_factory=Counter)

    def declare(self, v: int, bound: int) -> None:
        self.bounds[v] = bound

    def record(self, s: Schedule) -> None:
        self.counts = s.ledger

    def violations(self) -> list[tuple[int, int, int]]:
        return [
            (v, self.counts[v], b) for v, b in sorted(self.bounds.items()) if self.counts[v] > b
        ]

    def check(self) -> None:
        bad = self.violations()
        if bad:
            v, c, b = bad[0]
            raise BudgetError(f"vertex {v} recoloured {c} times, bound {b}")

    def max_count(self) -> int:
        return max(self.counts.values(), default=0)


def lift_bound(palette_size: int, degree: int, C: int) -> int:
    """Recolourings of the lifted vertex: ceil(C / t) + 1 with
    t = palette_size - degree - 1."""
    t = palette_size - degree - 1
    if t < 1:
        raise ValueError(f"palette of size {palette_size} too small for degree {degree}")
    return -(-C // t) + 1


def c_schedule(n: int = 12, first: int = 2049, outside: int = OUTSIDE_BUDGET) -> list[int]:
    cs = [first]
    while len(cs) < n:
        cs.append(-(-(outside + cs[-1]) // 2) + 1)
    return cs


def lift_through_vertex(
    G: PlanarGraph,
    v: int,
    palette: Palette,
    s: Schedule,
    alpha_v: int,
    beta_v: int,
) -> Schedule:
    """Extend a schedule on ``G - v`` to ``G``.

    Neighbour recolourings are taken in blocks of ``t``; before each block,
    ``v`` moves to the smallest colour missing from both the current
    neighbourhood and the block, unless it already is such a colour.  It
    ends on ``beta_v``.
    """
    cols = colours_for(palette, v)
    d = G.degree(v)
    t = len(cols) - d - 1
    if t < 1:
        raise ValueError(f"vertex {v}: {len(cols)} colours but degree {d}")
    if alpha_v not in cols or beta_v not in cols:
        raise ValueError(f"vertex {v}: endpoint colour outside its palette")
    nbrs = G.neighbours(v)
    cur = dict(s.start)
    if any(cur[w] == alpha_v for w in nbrs):
        raise ValueError(f"vertex {v}: start colour {alpha_v} clashes with a neighbour")
    fin = s.final()
    if any(fin[w] == beta_v for w in nbrs):
        raise ValueError(f"vertex {v}: target colour {beta_v} clashes with a neighbour")

    hits = [i for i, (w, _) in enumerate(s.steps) if w in nbrs]
    block_at = {hits[j]: [s.steps[h][1] for h in hits[j: j + t]] for j in range(0, len(hits), t)}
    out: list[tuple[int, int]] = []
    col_v = alpha_v
    for i, (w, c) in enumerate(s.steps):
        if i in block_at:
            forbidden = {cur[x] for x in nbrs} | set(block_at[i])
            if col_v in forbidden:
                choice = next(x for x in cols if x not in forbidden)
                out.append((v, choice))
                col_v = choice
        out.append((w, c))
        cur[w] = c
    if col_v != beta_v:
        out.append((v, beta_v))
    start = dict(s.start)
    start[v] = alpha_v
    return Schedule(start, out)


def _check_lift(lifted: Schedule, v: int, bound: int) -> None:
    if lifted.ledger[v] > bound:
        raise BudgetError(f"vertex {v} recoloured {lifted.ledger[v]} times, bound {bound}")


def neighbour_recolourings(G: PlanarGraph, v: int, s: Schedule) -> int:
    nb = G.neighbours(v)
    return sum(1 for w, _ in s.steps if w in nb)


def _lift_checked(G, v, palette, s, alpha, beta, bound=None) -> Schedule:
    C = neighbour_recolourings(G, v, s)
    lifted = lift_through_vertex(G, v, palette, s, alpha[v], beta[v])
    _check_lift(lifted, v, lift_bound(len(colours_for(palette, v)), G.degree(v), C))
    if bound is not None:
        _check_lift(lifted, v, bound)
    return lifted


def degenerate_reconfigure(
    G: PlanarGraph, palette: Palette, alpha: Mapping[int, int], beta: Mapping[int, int]
) -> Schedule:
    """Schedule from ``alpha`` to ``beta`` by peeling a minimum-degree vertex
    and lifting it back, assuming every palette exceeds the degeneracy by 2."""
    d, order = degeneracy_order(G)
    smallest = min((len(colours_for(palette, v)) for v in G.vertices), default=d + 2)
    if smallest < d + 2:
        raise ValueError(f"degeneracy {d} needs at least {d + 2} colours, got {smallest}")
    s = Schedule({}, [])
    kept: list[int] = []
    for v in reversed(order):
        kept.append(v)
        H = G.induced(kept)
        s = _lift_checked(H, v, palette, s, alpha, beta)
    return s


def lift_through_island(
    G: PlanarGraph,
    island: IslandOrder,
    s: Schedule,
    alpha: Mapping[int, int],
    beta: Mapping[int, int],
    k: int = 5,
    outside_budget: int = OUTSIDE_BUDGET,
) -> Schedule:
    """Lift a schedule on ``G - H`` through the island ``H`` in its order,
    asserting the i-th vertex is recoloured at most ``c_i`` times."""
    if not island.verify(G):
        raise ValueError("not a 2-degenerate 1-island of at most 12 vertices")
    worst = s.max_ledger()
    if worst > outside_budget:
        raise BudgetError(f"outside schedule recolours a vertex {worst} times, over {outside_budget}")
    cs = c_schedule(len(island), outside=outside_budget)
    H = island.vertices
    kept = [x for x in G.vertices if x not in H]
    for i, v in enumerate(island.order):
        kept.append(v)
        sub = G.induced(kept)
        s = _lift_checked(sub, v, k, s, alpha, beta, cs[i])
    return s


def reduce_girth6(
    G: PlanarGraph,
    alpha: Mapping[int, int],
    beta: Mapping[int, int],
    check_girth: bool = True,
) -> Schedule:
    """5-recolouring schedule on a planar graph of girth at least 6 with
    every vertex recoloured at most 6143 times."""
    if check_girth and girth(G) < 6:
        raise ValueError("graph has girth below 6")
    plan: list[tuple[frozenset[int], IslandOrder]] = []
    rest = G
    while rest.n:
        island = find_island(rest)
        if island is None:
            raise AssertionError("no island found in a girth-6 planar graph")
        plan.append((frozenset(rest.vertices), island))
        rest = rest.remove(island.vertices)
    s = Schedule({}, [])
    for verts, island in reversed(plan):
        s = lift_through_island(G.induced(verts), island, s, alpha, beta)
    rep = validate_schedule(G, s, 5, GIRTH6_BUDGET, expected_final=dict(beta))
    if not rep.valid:
        raise AssertionError(f"girth-6 pipeline produced an invalid schedule: {rep.violation}")
    return s


def reduce_list11(
    G: PlanarGraph,
    L: ListAssignment,
    alpha: Mapping[int, int],
    beta: Mapping[int, int],
) -> Schedule:
    """List-recolouring schedule on a planar graph with lists of size at
    least 11, every vertex recoloured at most 100 times."""
    if L.min_size() < 11 and G.n:
        raise ValueError("every list needs at least 11 colours")
    G = G if G.is_embedded else G.embedded()
    plan = []
    rest = G
    while rest.n:
        red = find_reduction_list11(rest)
        plan.append((frozenset(rest.vertices), red))
        rest = rest.remove(red.vertices)
    s = Schedule({}, [])
    for verts, red in reversed(plan):
        removed = set(red.vertices)
        kept = [x for x in verts if x not in removed]
        for v, bound in zip(red.lift_order, red.bounds):
            kept.append(v)
            s = _lift_checked(G.induced(kept), v, L, s, alpha, beta, bound)
    rep = validate_schedule(G, s, L, LIST11_BUDGET, expected_final=dict(beta))
    if not rep.valid:
        raise AssertionError(f"list-11 pipeline produced an invalid schedule: {rep.violation}")
    return s


def random_colouring(G: PlanarGraph, palette: Palette, seed: int | random.Random = 0) -> dict[int, int]:
    """A uniformly chosen admissible colour per vertex along a reversed
    degeneracy order; always succeeds when palettes exceed the degeneracy."""
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    _, order = degeneracy_order(G)
    sigma: dict[int, int] = {}
    for v in reversed(order):
        used = {sigma[w] for w in G.neighbours(v) if w in sigma}
        options = [c for c in colours_for(palette, v) if c not in used]
        if not options:
            raise ValueError(f"greedy colouring stuck at vertex {v}")
        sigma[v] = rng.choice(options)
    return {v: sigma[v] for v in G.vertices}


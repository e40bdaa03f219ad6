"""Concrete gadgets: the locked 5-face, the two figure recolouring
sequences, frozen-colouring witnesses and the frozen-propagation
predicates, each checked by brute force."""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from typing import Mapping

import numpy as np

from . import generators as gen
from .colouring import Schedule, available, is_proper, locked, validate_schedule
from .explorer import RecolouringGraph, colouring_matrix, explore, frozen_vertices
from .planar import PlanarGraph

FACE = (0, 1, 2, 3, 4)


def canonical(colours: tuple[int, ...]) -> tuple[int, ...]:
    """Relabel colours by first appearance, giving one tuple per orbit of
    the colour-permutation action."""
    seen: dict[int, int] = {}
    return tuple(seen.setdefault(c, len(seen) + 1) for c in colours)


# -- locked 5-face -------------------------------------------------------------

# v, u1..u4, pendants of u1..u4, then the pendants of v as a set
FIGURE3 = {"face": (4, 1, 2, 3, 1), "pendants": (3, 4, 4, 2), "hub_pendants": frozenset({2, 3})}


def _figure3_colourings() -> list[tuple[int, ...]]:
    base = FIGURE3["face"] + FIGURE3["pendants"]
    return [base + p for p in itertools.permutations(sorted(FIGURE3["hub_pendants"]))]


@dataclass
class UniquenessReport:
    hub_degree: int
    colourings: int
    locked: list[tuple[int, ...]]
    orbits: list[tuple[int, ...]]
    matches_figure: bool

    def to_json(self) -> dict:
        return {
            "hub_degree": self.hub_degree,
            "colourings": self.colourings,
            "all_locked": len(self.locked),
            "orbits": [list(o) for o in self.orbits],
            "orbit_count": len(self.orbits),
            "matches_figure": self.matches_figure,
        }


def locked_face_colourings(hub_degree: int, k: int = 4) -> UniquenessReport:
    G = gen.locked_face_gadget(hub_degree)
    rows = colouring_matrix(G, k)
    verts = G.vertices
    hits = []
    for row in rows:
        sigma = dict(zip(verts, (int(c) for c in row)))
        if all(locked(G, sigma, k, v) for v in FACE):
            hits.append(tuple(int(c) for c in row))
    orbits = sorted({canonical(t) for t in hits})
    fig = sorted({canonical(t) for t in _figure3_colourings()}) if hub_degree == 4 else []
    return UniquenessReport(hub_degree, len(rows), hits, orbits, orbits == fig)


def frozen_5face_uniqueness() -> dict:
    """All-locked 4-colourings of the 5-face gadget for hub degree 3 and 4."""
    r3 = locked_face_colourings(3)
    r4 = locked_face_colourings(4)
    drops = {}
    for i in range(1, 5):
        G = gen.locked_face_gadget(4, drop_pendant=i)
        never = all(
            not locked(G, dict(zip(G.vertices, (int(c) for c in row))), 4, i)
            for row in colouring_matrix(G, 4)
        )
        drops[i] = never
    return {
        "degree3": r3.to_json(),
        "degree4": r4.to_json(),
        "degree3_none": len(r3.locked) == 0,
        "degree4_only_figure": r4.matches_figure and len(r4.locked) > 0,
        "hub_pendant_orders": len(FIGURE3["hub_pendants"]),
        "dropped_pendant_never_locked": drops,
        "ok": len(r3.locked) == 0 and r4.matches_figure and len(r4.locked) > 0 and all(drops.values()),
    }


# -- figure replays ------------------------------------------------------------

# names per figure, in gadget order v, u1..u4 / pendants 5..8 / hub pendants 9, 10
FIG1 = {
    "names": ("w", "u2", "u3", "u4", "u5"),
    "start": {"w": 1, "u2": 2, "u3": 4, "u4": 1, "u5": 3},
    "pendants": {"u2": 3, "u3": 3, "u4": 2, "u5": 4},
    "hub_pendants": (3, 4),
    "steps": [("u5", 2), ("u4", 3), ("u3", 1), ("u2", 4), ("u3", 2), ("u4", 1), ("u5", 3), ("w", 2)],
    "final": {"w": 2, "u2": 4, "u3": 2, "u4": 1, "u5": 3},
}
FIG2 = {
    "names": ("z", "u2", "u3", "u4", "u5"),
    "start": {"z": 1, "u2": 2, "u3": 3, "u4": 4, "u5": 2},
    "pendants": {"u2": 4, "u3": 1, "u4": 1, "u5": 3},
    "hub_pendants": (2, 3),
    "steps": [("z", 4), ("u5", 1), ("u4", 2), ("u3", 4), ("u2", 3), ("u4", 3), ("u5", 2), ("z", 1)],
    "final": {"z": 1, "u2": 3, "u3": 4, "u4": 3, "u5": 2},
}


def figure_gadget(fig: dict) -> tuple[PlanarGraph, Schedule, dict[int, int]]:
    G = gen.locked_face_gadget(4)
    idx = {name: i for i, name in enumerate(fig["names"])}
    start = {idx[n]: c for n, c in fig["start"].items()}
    for n, c in fig["pendants"].items():
        start[4 + idx[n]] = c
    start[9], start[10] = fig["hub_pendants"]
    steps = [(idx[n], c) for n, c in fig["steps"]]
    final = dict(start)
    final.update({idx[n]: c for n, c in fig["final"].items()})
    return G, Schedule(start, steps), final


def replay_figures(prefix: int | None = None) -> dict:
    out = {}
    for label, fig in (("figure1", FIG1), ("figure2", FIG2)):
        G, s, final = figure_gadget(fig)
        if prefix is not None:
            s = Schedule(s.start, s.steps[:prefix])
            final = None
        rep = validate_schedule(G, s, 4, budget=None, expected_final=final)
        every_prefix = all(is_proper(G, st, 4) for st in s.states())
        names = fig["names"]
        got = rep.final
        out[label] = {
            "valid": rep.valid,
            "violation": rep.violation,
            "steps": len(s),
            "every_prefix_proper": every_prefix,
            "final_face": {names[i]: got[i] for i in range(5)},
            "one_step_per_listed_move": all(
                rep.ledger.get(v, 0) == sum(1 for x, _ in s.steps if x == v) for v in G.vertices
            ),
        }
    out["ok"] = all(out[k]["valid"] and out[k]["every_prefix_proper"] for k in ("figure1", "figure2"))
    return out


# -- frozen witnesses ----------------------------------------------------------

@dataclass
class Witness:
    name: str
    graph: PlanarGraph
    colouring: dict[int, int]
    k: int
    claim: str
    isolated: bool = False
    isolated_count: int = 0
    colourings: int = 0

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "k": self.k,
            "claim": self.claim,
            "colouring": [self.colouring[v] for v in self.graph.vertices],
            "isolated": self.isolated,
            "isolated_count": self.isolated_count,
            "colourings": self.colourings,
        }


def cube_witness() -> dict[int, int]:
    """Antipodal vertices share a colour; every face shows all four."""
    return {0: 1, 1: 2, 3: 3, 2: 4, 4: 3, 5: 4, 7: 1, 6: 2}


def frozen_witnesses() -> list[Witness]:
    cases = [
        ("cube", gen.cube(), cube_witness(), 4, "all colours on every face: isolated"),
        ("C6", gen.cycle(6), {i: i % 3 + 1 for i in range(6)}, 3, "cyclic colouring: isolated"),
        ("C9", gen.cycle(9), {i: i % 3 + 1 for i in range(9)}, 3, "cyclic colouring: isolated"),
        ("K3", gen.complete(3), {0: 1, 1: 2, 2: 3}, 3, "every colouring isolated"),
        ("K4", gen.complete(4), {0: 1, 1: 2, 2: 3, 3: 4}, 4, "every colouring isolated"),
    ]
    out = []
    for name, G, sigma, k, claim in cases:
        res = explore(G, k, exact_limit=0)
        row = tuple(sigma[v] for v in G.vertices)
        out.append(Witness(name, G, sigma, k, claim, row in set(res.isolated), len(res.isolated), res.n_colourings))
    return out


# -- frozen propagation ----------------------------------------------------------

@dataclass
class PropagationReport:
    checked: dict[str, int] = field(default_factory=lambda: {"frozen3": 0, "frozen4": 0, "unfreeze": 0, "extra": 0})
    violations: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def merge(self, other: "PropagationReport") -> None:
        for k, c in other.checked.items():
            self.checked[k] += c
        self.violations.extend(other.violations)

    def to_json(self) -> dict:
        return {"ok": self.ok, "checked": dict(self.checked), "violations": self.violations}


def frozen_masks(R: RecolouringGraph) -> tuple[np.ndarray, np.ndarray]:
    """Component label per state and, per component, which vertices keep a
    constant colour across it."""
    labels = R.labels()
    ncomp = int(labels.max()) + 1 if len(labels) else 0
    n = len(R.vertices)
    lo = np.full((ncomp, n), np.iinfo(np.int16).max, dtype=np.int16)
    hi = np.full((ncomp, n), -1, dtype=np.int16)
    np.minimum.at(lo, labels, R.rows)
    np.maximum.at(hi, labels, R.rows)
    return labels, lo == hi


def _unlock_within_path(G: PlanarGraph, sigma: Mapping[int, int], k: int, path: tuple[int, ...]) -> bool:
    """BFS over recolourings of path vertices only, looking for one where
    the last path vertex is free."""
    target = path[-1]
    start = tuple(sigma[v] for v in path)
    seen = {start}
    q = deque([start])
    while q:
        t = q.popleft()
        cur = dict(sigma)
        cur.update(zip(path, t))
        if not locked(G, cur, k, target):
            return True
        for i, v in enumerate(path):
            for c in available(G, cur, k, v):
                u = t[:i] + (c,) + t[i + 1:]
                if u not in seen:
                    seen.add(u)
                    q.append(u)
    return False


def _extra_paths(G: PlanarGraph, sigma: Mapping[int, int], k: int, max_len: int):
    lock = {v: locked(G, sigma, k, v) for v in G.vertices}
    for s in G.vertices:
        if lock[s]:
            continue
        stack = [(s,)]
        while stack:
            p = stack.pop()
            for y in sorted(G.neighbours(p[-1])):
                if y in p or not lock[y] or G.degree(y) != 3:
                    continue
                q = p + (y,)
                yield q
                if len(q) < max_len:
                    stack.append(q)


def frozen_propagation_check(
    G: PlanarGraph,
    sigma: Mapping[int, int],
    k: int = 4,
    frozen: set[int] | None = None,
    max_path: int = 6,
    max_states: int = 10**6,
) -> PropagationReport:
    """Check the four propagation predicates on one colouring.

    ``frozen`` may be supplied from a precomputed component analysis;
    otherwise it is found by explicit search from ``sigma``.
    """
    rep = PropagationReport()
    if frozen is None:
        frozen = frozen_vertices(G, k, sigma, max_states)
    for v in G.vertices:
        d = G.degree(v)
        if v in frozen and d == 3:
            rep.checked["frozen3"] += 1
            if not G.neighbours(v) <= frozen:
                rep.violations.append({"predicate": "frozen3", "vertex": v})
        if v in frozen and d == 4:
            fn = [w for w in G.neighbours(v) if w in frozen]
            if len({sigma[w] for w in fn}) < len(fn):
                rep.checked["frozen4"] += 1
                if not G.neighbours(v) <= frozen:
                    rep.violations.append({"predicate": "frozen4", "vertex": v})
        if d == 3 and locked(G, sigma, k, v):
            for w in sorted(G.neighbours(v)):
                for c in available(G, sigma, k, w):
                    rep.checked["unfreeze"] += 1
                    nxt = dict(sigma)
                    nxt[w] = c
                    if locked(G, nxt, k, v):
                        rep.violations.append({"predicate": "unfreeze", "vertex": v, "neighbour": w, "colour": c})
    for p in _extra_paths(G, sigma, k, max_path):
        rep.checked["extra"] += 1
        if not _unlock_within_path(G, sigma, k, p):
            rep.violations.append({"predicate": "extra", "path": list(p)})
    return rep


def propagation_sweep(
    G: PlanarGraph,
    k: int = 4,
    samples: int = 20,
    seed: int = 0,
    max_states: int = 10**6,
    max_path: int = 6,
    max_components: int = 500,
) -> PropagationReport:
    """Run :func:`frozen_propagation_check` on one colouring from each of
    the ``max_components`` smallest components plus ``samples`` seeded
    colourings, using the explorer for frozen sets."""
    R = RecolouringGraph(G, k, max_states)
    labels, masks = frozen_masks(R)
    verts = R.vertices
    rng = np.random.default_rng(seed)
    picks = set()
    order = np.argsort(labels, kind="stable")
    starts = np.r_[0, np.flatnonzero(np.diff(labels[order])) + 1]
    sizes = np.diff(np.r_[starts, len(order)])
    smallest = np.argsort(sizes, kind="stable")[:max_components]
    picks.update(int(order[starts[j]]) for j in smallest)
    picks.update(int(i) for i in rng.choice(len(R), size=min(samples, len(R)), replace=False))
    total = PropagationReport()
    for i in sorted(picks):
        sigma = R.colouring(i)
        frozen = {v for v, m in zip(verts, masks[labels[i]]) if m}
        total.merge(frozen_propagation_check(G, sigma, k, frozen, max_path))
    return total

"""Colourings, single-step adjacency, recolouring schedules and the local
locked/free status of a vertex."""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Sequence, Union

from .planar import PlanarGraph

Colouring = dict[int, int]


@dataclass(frozen=True)
class ListAssignment:
    """Admissible colours per vertex."""

    lists: Mapping[int, frozenset[int]]

    def __post_init__(self):
        for v, L in self.lists.items():
            if not L:
                raise ValueError(f"empty list at vertex {v}")

    @classmethod
    def uniform(cls, vertices: Iterable[int], colours: Iterable[int]) -> "ListAssignment":
        cs = frozenset(colours)
        return cls({v: cs for v in vertices})

    def __getitem__(self, v: int) -> frozenset[int]:
        return self.lists[v]

    def min_size(self) -> int:
        return min((len(L) for L in self.lists.values()), default=0)


Palette = Union[int, ListAssignment]


def colours_for(palette: Palette, v: int) -> tuple[int, ...]:
    """Sorted admissible colours of ``v`` under a colour count or a list
    assignment."""
    if isinstance(palette, int):
        return tuple(range(1, palette + 1))
    return tuple(sorted(palette[v]))


def _check_total(G: PlanarGraph, sigma: Mapping[int, int]) -> None:
    missing = [v for v in G.vertices if v not in sigma]
    if missing:
        raise ValueError(f"colouring is partial: no colour for vertices {missing[:5]}")


def is_proper(G: PlanarGraph, sigma: Mapping[int, int], palette: Palette | None = None) -> bool:
    _check_total(G, sigma)
    for u, w in G.edges():
        if sigma[u] == sigma[w]:
            return False
    if palette is not None:
        for v in G.vertices:
            if sigma[v] not in colours_for(palette, v):
                return False
    return True


def adjacent(sigma: Mapping[int, int], tau: Mapping[int, int]) -> bool:
    """True iff the colourings differ on exactly one vertex."""
    if sigma.keys() != tau.keys():
        return False
    return sum(1 for v in sigma if sigma[v] != tau[v]) == 1


def locked(G: PlanarGraph, sigma: Mapping[int, int], k: int, v: int) -> bool:
    """All ``k`` colours appear on the closed neighbourhood of ``v``."""
    seen = {sigma[v]} | {sigma[w] for w in G.neighbours(v)}
    return len(seen & set(range(1, k + 1))) == k


def free(G: PlanarGraph, sigma: Mapping[int, int], k: int, v: int) -> bool:
    return not locked(G, sigma, k, v)


def available(G: PlanarGraph, sigma: Mapping[int, int], palette: Palette, v: int) -> list[int]:
    """Colours ``v`` could be recoloured to in one step."""
    used = {sigma[w] for w in G.neighbours(v) if w in sigma}
    return [c for c in colours_for(palette, v) if c != sigma[v] and c not in used]


@dataclass
class Schedule:
    """A start colouring and an ordered list of ``(vertex, new colour)``
    steps.  ``start`` may cover a subset of a graph's vertices (schedules on
    ``G - v`` are used when lifting)."""

    start: dict[int, int]
    steps: list[tuple[int, int]] = field(default_factory=list)

    @property
    def ledger(self) -> Counter:
        return Counter(v for v, _ in self.steps)

    def max_ledger(self) -> int:
        return max(self.ledger.values(), default=0)

    def __len__(self) -> int:
        return len(self.steps)

    def states(self) -> Iterator[dict[int, int]]:
        """The start colouring followed by the colouring after each step."""
        cur = dict(self.start)
        yield dict(cur)
        for v, c in self.steps:
            cur[v] = c
            yield dict(cur)

    def final(self) -> dict[int, int]:
        cur = dict(self.start)
        for v, c in self.steps:
            cur[v] = c
        return cur

    def restrict(self, vertices: Iterable[int]) -> "Schedule":
        keep = set(vertices)
        return Schedule(
            {v: c for v, c in self.start.items() if v in keep},
            [(v, c) for v, c in self.steps if v in keep],
        )

    def then(self, other: "Schedule") -> "Schedule":
        """Concatenate; ``other`` must start where ``self`` ends."""
        if other.start != self.final():
            raise ValueError("schedules do not compose: end and start differ")
        return Schedule(dict(self.start), self.steps + other.steps)

    # -- JSON ---------------------------------------------------------------
    def to_json(self, vertices: Sequence[int] | None = None, expected_final: bool = True) -> dict:
        verts = list(vertices) if vertices is not None else sorted(self.start)
        index = {v: i for i, v in enumerate(verts)}
        out = {
            "start": [self.start.get(v) for v in verts],
            "steps": [{"v": index[v], "c": c} for v, c in self.steps],
        }
        if expected_final:
            fin = self.final()
            out["expected_final"] = [fin.get(v) for v in verts]
        return out

    @classmethod
    def from_json(cls, data: dict | str) -> "Schedule":
        if isinstance(data, str):
            data = json.loads(data)
        start = {i: int(c) for i, c in enumerate(data["start"]) if c is not None}
        steps = [(int(s["v"]), int(s["c"])) for s in data.get("steps", [])]
        return cls(start, steps)


@dataclass
class ScheduleReport:
    valid: bool
    final: dict[int, int]
    max_ledger: int
    ledger: dict[int, int]
    violation: str | None = None
    step: int | None = None
    vertex: int | None = None

    def to_json(self) -> dict:
        return {
            "valid": self.valid,
            "violation": self.violation,
            "step": self.step,
            "vertex": self.vertex,
            "max_ledger": self.max_ledger,
            "final": [self.final[v] for v in sorted(self.final)],
        }


def validate_schedule(
    G: PlanarGraph,
    s: Schedule,
    palette: Palette | None = None,
    budget: int | Mapping[int, int] | None = None,
    expected_final: Mapping[int, int] | None = None,
) -> ScheduleReport:
    """Replay ``s`` on ``G`` and report the first violation, if any.

    Violations: partial or improper start, step on an unknown vertex, no-op
    step, improper or inadmissible step, per-vertex budget overflow, final
    colouring differing from ``expected_final``.
    """
    cur = dict(s.start)
    counts: Counter = Counter()

    def report(msg=None, step=None, vertex=None):
        return ScheduleReport(
            valid=msg is None,
            final=cur,
            max_ledger=max(counts.values(), default=0),
            ledger=dict(counts),
            violation=msg,
            step=step,
            vertex=vertex,
        )

    if set(cur) != set(G.vertices):
        return report("start colouring does not cover exactly the graph's vertices")
    for u, w in G.edges():
        if cur[u] == cur[w]:
            return report(f"start colouring is improper on edge {u}-{w}", vertex=u)
    if palette is not None:
        for v in G.vertices:
            if cur[v] not in colours_for(palette, v):
                return report(f"start colour {cur[v]} inadmissible at {v}", vertex=v)

    for i, (v, c) in enumerate(s.steps):
        if v not in cur:
            return report(f"step {i} recolours unknown vertex {v}", i, v)
        if cur[v] == c:
            return report(f"step {i} is a no-op on vertex {v}", i, v)
        if palette is not None and c not in colours_for(palette, v):
            return report(f"step {i} gives {v} inadmissible colour {c}", i, v)
        clash = [w for w in G.neighbours(v) if cur[w] == c]
        if clash:
            return report(f"step {i} makes edge {v}-{clash[0]} monochromatic", i, v)
        cur[v] = c
        counts[v] += 1
        if budget is not None:
            cap = budget if isinstance(budget, int) else budget.get(v)
            if cap is not None and counts[v] > cap:
                return report(f"vertex {v} recoloured {counts[v]} times, budget {cap}", i, v)
    if expected_final is not None and dict(expected_final) != cur:
        return report("final colouring differs from the expected one")
    return report()


def new_colours(H: Iterable[int], s: Schedule) -> list[int]:
    """Colours given to vertices of ``H``, in step order.

    Every valid step changes its vertex's colour, so this is one entry per
    step on ``H``; returning to an earlier colour counts too, as the lifting
    strategy has to dodge it like any other.
    """
    H = set(H)
    return [c for v, c in s.steps if v in H]

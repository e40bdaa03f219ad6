"""Per-class property checks over corpus entries."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .colouring import ListAssignment, validate_schedule
from .corpus import CorpusEntry
from .discharging import girth5_audit, girth5_discharge, island_audit, island_discharge
from .explorer import StateSpaceTooLarge, explore
from .lifting import GIRTH6_BUDGET, LIST11_BUDGET, random_colouring, reduce_girth6, reduce_list11
from .structure import find_island, find_unavoidable_config

EXHAUSTIVE_LIMIT = 12


@dataclass
class CheckResult:
    graph: str
    check: str
    passed: bool
    detail: str = ""

    def to_json(self) -> dict:
        return {"graph": self.graph, "check": self.check, "passed": self.passed, "detail": self.detail}


def check_connectivity4(entry: CorpusEntry, max_states: int = 10**8) -> CheckResult | None:
    G = entry.graph
    if G.n > EXHAUSTIVE_LIMIT:
        return None
    try:
        res = explore(G, 4, max_states=max_states, exact_limit=0)
    except StateSpaceTooLarge as exc:
        return CheckResult(entry.name, "connected-k4", False, str(exc))
    return CheckResult(
        entry.name, "connected-k4", res.n_components == 1,
        f"{res.n_colourings} colourings, {res.n_components} components",
    )


def check_config(entry: CorpusEntry) -> CheckResult:
    try:
        w = find_unavoidable_config(entry.graph)
    except RuntimeError as exc:
        return CheckResult(entry.name, "unavoidable-config", False, str(exc))
    return CheckResult(entry.name, "unavoidable-config", w.verify(entry.graph), w.kind)


def check_girth5_discharge(entry: CorpusEntry) -> CheckResult:
    G = entry.graph
    led = girth5_discharge(G, check=False)
    total_ok = led.total_initial() == led.total_final()
    if G.is_connected():
        total_ok = total_ok and led.total_final() == -12
    audit = girth5_audit(led)
    implied = True
    if audit.negatives and entry.girth >= 5:
        try:
            implied = find_unavoidable_config(G).verify(G)
        except RuntimeError:
            implied = False
    return CheckResult(
        entry.name, "girth5-discharge", total_ok and implied,
        f"total {led.total_final()}, {len(audit.negatives)} negative",
    )


def check_island_discharge(entry: CorpusEntry) -> CheckResult:
    G = entry.graph
    led = island_discharge(G, check=False)
    total_ok = led.total_initial() == led.total_final()
    if G.is_connected():
        total_ok = total_ok and led.total_final() == -12
    implied = True
    if entry.girth >= 6:
        audit = island_audit(led, G)
        if audit.negatives or audit.violations:
            island = find_island(G)
            implied = island is not None and island.verify(G)
    return CheckResult(entry.name, "island-discharge", total_ok and implied, f"total {led.total_final()}")


def check_island(entry: CorpusEntry) -> CheckResult:
    island = find_island(entry.graph)
    ok = island is not None and len(island) <= 12 and island.verify(entry.graph)
    return CheckResult(entry.name, "island", ok, f"size {len(island) if island else None}")


def check_girth6_pipeline(entry: CorpusEntry, seed: int = 0) -> CheckResult:
    G = entry.graph
    rng = random.Random(f"{entry.name}:{seed}")
    a = random_colouring(G, 5, rng)
    b = random_colouring(G, 5, rng)
    s = reduce_girth6(G, a, b)
    rep = validate_schedule(G, s, 5, GIRTH6_BUDGET, expected_final=b)
    return CheckResult(entry.name, "reduce-girth6", rep.valid, f"{len(s)} steps, max {rep.max_ledger}")


def check_list11_pipeline(entry: CorpusEntry, seed: int = 0) -> CheckResult:
    G = entry.graph
    L = ListAssignment.uniform(G.vertices, range(1, 12))
    rng = random.Random(f"{entry.name}:{seed}")
    a = random_colouring(G, L, rng)
    b = random_colouring(G, L, rng)
    s = reduce_list11(G, L, a, b)
    rep = validate_schedule(G, s, L, LIST11_BUDGET, expected_final=b)
    return CheckResult(entry.name, "reduce-list11", rep.valid, f"{len(s)} steps, max {rep.max_ledger}")


def run_checks(entry: CorpusEntry, seed: int = 0) -> list[CheckResult]:
    out: list[CheckResult] = []
    if entry.cls == "girth5":
        r = check_connectivity4(entry)
        if r is not None:
            out.append(r)
        out.append(check_config(entry))
    if entry.cls == "girth6":
        out.append(check_island(entry))
        out.append(check_girth6_pipeline(entry, seed))
    if entry.cls == "list11":
        out.append(check_list11_pipeline(entry, seed))
    out.append(check_girth5_discharge(entry))
    out.append(check_island_discharge(entry))
    return out

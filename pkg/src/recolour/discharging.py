"""Executable charge ledgers for the girth-5 and island discharging rules.

Elements are keyed ``("v", id)`` for vertices and ``("f", face key)`` for
faces.  All amounts are exact fractions.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction

from .planar import Face, PlanarGraph, girth, opposite_face
from .structure import BadPairSet, bad_pairs

HALF = Fraction(1, 2)
ONE = Fraction(1)

Element = tuple[str, object]


def V(v: int) -> Element:
    return ("v", v)


def F(f: Face) -> Element:
    return ("f", f.key)


def _name(e: Element) -> str:
    return f"{e[0]}:{e[1]}"


@dataclass(frozen=True)
class Transfer:
    source: Element
    target: Element
    amount: Fraction
    rule: str
    via: tuple = ()

    def to_json(self) -> dict:
        return {
            "from": _name(self.source),
            "to": _name(self.target),
            "amount": str(self.amount),
            "rule": self.rule,
            "via": [str(x) for x in self.via],
        }


@dataclass
class ChargeLedger:
    initial: dict[Element, Fraction]
    transfers: list[Transfer] = field(default_factory=list)

    def give(self, source: Element, target: Element, amount: Fraction, rule: str, via: tuple = ()) -> None:
        self.transfers.append(Transfer(source, target, Fraction(amount), rule, via))

    @property
    def final(self) -> dict[Element, Fraction]:
        out = dict(self.initial)
        for t in self.transfers:
            out[t.source] -= t.amount
            out[t.target] += t.amount
        return out

    def total_initial(self) -> Fraction:
        return sum(self.initial.values(), Fraction(0))

    def total_final(self) -> Fraction:
        return sum(self.final.values(), Fraction(0))

    def sent(self, e: Element) -> Fraction:
        return sum((t.amount for t in self.transfers if t.source == e and t.target != e), Fraction(0))

    def received(self, e: Element) -> Fraction:
        return sum((t.amount for t in self.transfers if t.target == e and t.source != e), Fraction(0))

    def negatives(self) -> list[tuple[Element, Fraction]]:
        return sorted(((e, c) for e, c in self.final.items() if c < 0), key=lambda x: (x[0][0], str(x[0][1])))

    def to_json(self) -> dict:
        fin = self.final
        return {
            "total_initial": str(self.total_initial()),
            "total_final": str(self.total_final()),
            "initial": {_name(e): str(c) for e, c in sorted(self.initial.items(), key=lambda x: (x[0][0], str(x[0][1])))},
            "final": {_name(e): str(c) for e, c in sorted(fin.items(), key=lambda x: (x[0][0], str(x[0][1])))},
            "transfers": [t.to_json() for t in self.transfers],
        }


def initial_charges(G: PlanarGraph) -> dict[Element, Fraction]:
    ch: dict[Element, Fraction] = {V(v): Fraction(2 * G.degree(v) - 6) for v in G.vertices}
    for f in G.faces:
        ch[F(f)] = Fraction(f.length - 6)
    return ch


def _embedded(G: PlanarGraph) -> PlanarGraph:
    return G if G.is_embedded else G.embedded()


# -- girth 5 -------------------------------------------------------------------

def girth5_discharge(G: PlanarGraph, B: BadPairSet | None = None, check: bool = True) -> ChargeLedger:
    """Apply the three vertex-to-face rules once, corner by corner."""
    G = _embedded(G)
    if check:
        if girth(G) < 5:
            raise ValueError("girth below 5")
        if G.n and G.min_degree() < 3:
            raise ValueError("minimum degree below 3")
    B = B if B is not None else bad_pairs(G)
    led = ChargeLedger(initial_charges(G))
    for v in G.vertices:
        corners = G.faces_at(v)
        d = G.degree(v)
        if d == 4:
            bad_for = [f for f in corners if f.length == 5 and B.is_bad(v, f)]
            if len(bad_for) >= 2:
                for f in bad_for:
                    g = opposite_face(G, v, f)
                    if g is not None:
                        led.give(V(v), F(g), ONE, "R1", (f.key,))
                continue
            if len(bad_for) == 1:
                f = bad_for[0]
                g = opposite_face(G, v, f)
                spent = Fraction(0)
                if g is not None:
                    led.give(V(v), F(g), ONE, "R2", (f.key,))
                    spent = ONE
                i = corners.index(f)
                sides = [corners[(i + 1) % 4], corners[(i + 3) % 4]]
                sides = [s for s in sides if s.length == 5]
                rest = Fraction(2) - spent
                for s in sides:
                    led.give(V(v), F(s), rest / len(sides), "R2", (f.key,))
                continue
        if d >= 4:
            for f in corners:
                if f.length != 5:
                    continue
                if B.others_bad(f, v):
                    led.give(V(v), F(f), ONE, "R3", ("all other vertices bad",))
                else:
                    led.give(V(v), F(f), HALF, "R3", ())
    return led


@dataclass
class AuditReport:
    negatives: list[tuple[str, str]]
    violations: list[dict] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def clean(self) -> bool:
        return not self.negatives and not self.violations

    def to_json(self) -> dict:
        return {
            "clean": self.clean,
            "negatives": [{"element": e, "charge": c} for e, c in self.negatives],
            "violations": self.violations,
            "notes": self.notes,
        }


def girth5_audit(ledger: ChargeLedger) -> AuditReport:
    """Elements ending negative; the rules guarantee none unless a
    LowDegree, Config1 or Config2 structure is present."""
    negs = [(_name(e), str(c)) for e, c in ledger.negatives()]
    rep = AuditReport(negs)
    if ledger.total_initial() != ledger.total_final():
        rep.violations.append({"case": "conservation", "detail": "totals differ"})
    return rep


# -- islands -------------------------------------------------------------------

def _walk(G: PlanarGraph, f: Face, pos: int, step: int) -> tuple[int, int]:
    """From position ``pos`` of ``f``'s boundary walk, move in direction
    ``step`` through degree-3 vertices; return (inner count, end position).
    Capped at one lap."""
    L = f.length
    inner = 0
    p = pos
    for _ in range(L):
        p = (p + step) % L
        if p == pos or G.degree(f.walk[p]) != 3:
            return inner, p
        inner += 1
    return inner, p


def island_discharge(G: PlanarGraph, check: bool = True) -> ChargeLedger:
    """Every degree-2 vertex draws ½ through each of its four facial walks
    (two corners, two directions): from the face when the walk has at least
    five inner vertices, otherwise from the far end."""
    G = _embedded(G)
    if check and girth(G) < 6:
        raise ValueError("girth below 6")
    led = ChargeLedger(initial_charges(G))
    for f in G.faces:
        L = f.length
        for pos, v in enumerate(f.walk):
            if G.degree(v) != 2:
                continue
            for step, tag in ((1, "+"), (-1, "-")):
                inner, end = _walk(G, f, pos, step)
                u = f.walk[end]
                if inner >= 5:
                    led.give(F(f), V(v), HALF, "face", (f.key, pos, tag, inner))
                else:
                    led.give(V(u), V(v), HALF, "end", (f.key, pos, tag, inner))
    return led


def island_audit(ledger: ChargeLedger, G: PlanarGraph) -> AuditReport:
    """Check each vertex/face case of the island argument on ``G``."""
    G = _embedded(G)
    fin = ledger.final
    negs = [(_name(e), str(c)) for e, c in ledger.negatives()]
    rep = AuditReport(negs)
    if ledger.total_initial() != ledger.total_final():
        rep.violations.append({"case": "conservation", "detail": "totals differ"})
    recv = defaultdict(Fraction)
    sent = defaultdict(Fraction)
    for t in ledger.transfers:
        recv[t.target] += t.amount
        sent[t.source] += t.amount
    for v in G.vertices:
        d = G.degree(v)
        e = V(v)
        if d == 2 and recv[e] != 2:
            rep.violations.append({"case": "degree 2", "element": _name(e), "detail": f"received {recv[e]}"})
        if d == 3 and fin[e] != 0:
            rep.violations.append({"case": "degree 3", "element": _name(e), "detail": f"final {fin[e]}"})
        if d >= 4 and fin[e] < d - 6:
            rep.violations.append({"case": "degree >= 4", "element": _name(e), "detail": f"final {fin[e]} < {d - 6}"})
        if d in (4, 5) and fin[e] < 0:
            rep.violations.append({"case": f"degree {d}", "element": _name(e), "detail": f"final {fin[e]}"})
    for f in G.faces:
        e = F(f)
        out = sent[e]
        if f.length <= 5:
            rep.notes.append(f"face {f.key} has length {f.length}: outside the girth-6 setting")
            continue
        if f.length == 6 and out != 0:
            rep.violations.append({"case": "6-face", "element": _name(e), "detail": f"sent {out}"})
        if f.length >= 7:
            cap = Fraction(f.length // 6)
            if out > cap:
                rep.violations.append({"case": "7+-face", "element": _name(e), "detail": f"sent {out} > {cap}"})
            if not _runs_disjoint(G, f, ledger):
                rep.violations.append({"case": "7+-face runs", "element": _name(e), "detail": "overlapping degree-3 runs"})
    return rep


def _runs_disjoint(G: PlanarGraph, f: Face, ledger: ChargeLedger) -> bool:
    """The five degree-3 positions after each face-paid walk are pairwise
    disjoint across all such walks of ``f``."""
    L = f.length
    used: set[int] = set()
    for t in ledger.transfers:
        if t.rule != "face" or t.source != F(f):
            continue
        _, pos, tag, _ = t.via
        step = 1 if tag == "+" else -1
        run = {(pos + step * i) % L for i in range(1, 6)}
        if used & run:
            return False
        used |= run
    return True

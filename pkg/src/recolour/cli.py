"""Command-line entry point.

Graphs are read from a file argument or stdin in the embedded-graph text
format; reports are JSON on stdout (or ``--out``).  Exit codes: 0 success,
1 verified negative, 2 input error, 3 internal assertion.
"""

from __future__ import annotations

import argparse
import json
import logging
import math
import random
import sys
from pathlib import Path

from . import corpus as corpus_mod
from . import generators as gen
from .colouring import ListAssignment, Schedule, validate_schedule
from .discharging import girth5_audit, girth5_discharge, island_audit, island_discharge
from .explorer import DEFAULT_MAX_STATES, EXACT_DIAMETER_LIMIT, StateSpaceTooLarge, explore, find_path, three_colouring
from .gadgets import frozen_5face_uniqueness, frozen_propagation_check, frozen_witnesses, replay_figures
from .lifting import (
    BudgetError,
    BudgetLedger,
    lift_bound,
    lift_through_vertex,
    random_colouring,
    reduce_girth6,
    reduce_list11,
)
from .planar import GraphFormatError, PlanarGraph, degeneracy_order, format_graph, girth, parse_graph
from .structure import bad_pairs, find_island, find_unavoidable_config

SCHEMA = "recolour-report/1"
log = logging.getLogger("recolour")


class InputError(Exception):
    pass


class Negative(Exception):
    """A verified negative result; carries the report to print."""

    def __init__(self, report: dict):
        super().__init__("negative")
        self.report = report


# -- helpers ---------------------------------------------------------------------

def _read_graph(args) -> PlanarGraph:
    src = getattr(args, "graph", None)
    text = Path(src).read_text() if src and src != "-" else sys.stdin.read()
    return parse_graph(text)


def _json_arg(value: str):
    """Inline JSON, or a path to a JSON file."""
    p = Path(value)
    if p.exists():
        return json.loads(p.read_text())
    try:
        return json.loads(value)
    except json.JSONDecodeError as exc:
        raise InputError(f"not a JSON value or file: {value!r}") from exc


def _colouring(G: PlanarGraph, value) -> dict[int, int]:
    data = _json_arg(value) if isinstance(value, str) else value
    if isinstance(data, dict):
        data = data.get("colouring", data.get("start"))
    if not isinstance(data, list) or len(data) != G.n:
        raise InputError(f"colouring must be an array of {G.n} colours")
    return {v: int(c) for v, c in zip(G.vertices, data)}


def _palette(G: PlanarGraph, args, default_k: int | None = None):
    lists = getattr(args, "lists", None)
    if lists:
        data = _json_arg(lists)
        if len(data) != G.n:
            raise InputError(f"lists must have one entry per vertex ({G.n})")
        return ListAssignment({v: frozenset(int(c) for c in L) for v, L in zip(G.vertices, data)})
    k = getattr(args, "k", None) or default_k
    if k is None:
        raise InputError("need -k or --lists")
    return k


def _row(G: PlanarGraph, sigma: dict[int, int]) -> list[int]:
    return [sigma[v] for v in G.vertices]


def _budget_check(s: Schedule, bound: int | None, G: PlanarGraph) -> dict:
    led = BudgetLedger()
    if bound is not None:
        for v in G.vertices:
            led.declare(v, bound)
    led.record(s)
    if bound is not None:
        led.check()
    return {"max_ledger": led.max_count(), "budget": bound}


# -- verbs -----------------------------------------------------------------------

def cmd_parse(args):
    G = _read_graph(args)
    return {"n": G.n, "m": G.m, "embedded": G.is_embedded, "euler": G.euler_ok(), "text": format_graph(G)}


def cmd_faces(args):
    G = _read_graph(args)
    return {"faces": [{"key": f.key, "walk": list(f.walk), "length": f.length} for f in G.faces]}


def cmd_girth(args):
    G = _read_graph(args)
    g = girth(G)
    d, order = degeneracy_order(G)
    return {"girth": None if math.isinf(g) else int(g), "degeneracy": d, "degeneracy_order": order}


def cmd_explore(args):
    G = _read_graph(args)
    pal = _palette(G, args)
    alpha = _colouring(G, args.alpha) if args.alpha else None
    beta = _colouring(G, args.beta) if args.beta else None
    res = explore(G, pal, max_states=args.max_states, exact_limit=args.exact_limit, alpha=alpha, beta=beta)
    rep = res.to_dict()
    if not res.connected:
        raise Negative(rep)
    return rep


def cmd_path(args):
    G = _read_graph(args)
    pal = _palette(G, args)
    a, b = _colouring(G, args.alpha), _colouring(G, args.beta)
    s = find_path(G, pal, a, b, max_states=args.max_states)
    if s is None:
        raise Negative({"path": None, "reason": "different components"})
    return {"path": s.to_json(G.vertices), "length": len(s)}


def cmd_lift(args):
    G = _read_graph(args)
    pal = _palette(G, args)
    data = _json_arg(args.schedule)
    start = data["start"]
    if len(start) != G.n:
        raise InputError("schedule start must list every vertex, with null at the lifted vertex")
    verts = G.vertices
    v = args.vertex
    if v not in G:
        raise InputError(f"no vertex {v}")
    inner = {verts[i]: int(c) for i, c in enumerate(start) if c is not None and verts[i] != v}
    steps = [(verts[int(st["v"])], int(st["c"])) for st in data.get("steps", [])]
    s = Schedule(inner, steps)
    H = G.remove([v])
    rep = validate_schedule(H, s, pal)
    if not rep.valid:
        raise InputError(f"schedule invalid on G - v: {rep.violation}")
    lifted = lift_through_vertex(G, v, pal, s, args.alpha_v, args.beta_v)
    C = sum(1 for w, _ in s.steps if w in G.neighbours(v))
    size = pal if isinstance(pal, int) else len(pal[v])
    bound = lift_bound(size, G.degree(v), C)
    out = {"schedule": lifted.to_json(verts), "recolourings_of_v": lifted.ledger[v], "C": C, "bound": bound}
    out.update(_budget_check(lifted, args.assert_budget, G))
    return out


def _endpoints(G, args, palette, default_beta=None):
    rng = random.Random(args.seed)
    a = _colouring(G, args.alpha) if args.alpha else random_colouring(G, palette, rng)
    if args.beta:
        b = _colouring(G, args.beta)
    elif default_beta is not None:
        b = default_beta()
    else:
        b = random_colouring(G, palette, rng)
    return a, b


def cmd_reduce_girth6(args):
    G = _read_graph(args)
    if girth(G) < 6:
        raise InputError("graph has girth below 6")

    def target():
        try:
            return three_colouring(G)
        except (RuntimeError, ValueError):
            raise InputError("no 3-colouring target found; pass --beta")

    a, b = _endpoints(G, args, 5, target if args.alpha and not args.beta else None)
    s = reduce_girth6(G, a, b)
    out = {"schedule": s.to_json(G.vertices), "steps": len(s)}
    out.update(_budget_check(s, args.assert_budget, G))
    return out


def cmd_reduce_list11(args):
    G = _read_graph(args)
    L = _palette(G, args, default_k=None) if args.lists else ListAssignment.uniform(G.vertices, range(1, 12))
    a, b = _endpoints(G, args, L)
    s = reduce_list11(G, L, a, b)
    out = {"schedule": s.to_json(G.vertices), "steps": len(s)}
    out.update(_budget_check(s, args.assert_budget, G))
    return out


def cmd_find_island(args):
    G = _read_graph(args)
    isl = find_island(G, max_size=args.max_size)
    if isl is None:
        raise Negative({"island": None})
    return {"island": isl.to_json(G), "verified": isl.verify(G, args.max_size)}


def cmd_find_config(args):
    G = _read_graph(args)
    if girth(G) < 5:
        raise InputError("graph has girth below 5")
    w = find_unavoidable_config(G)
    if not w.verify(G):
        raise AssertionError("witness failed its own certificate")
    return {"witness": w.to_json(), "verified": True}


def cmd_bad_pairs(args):
    G = _read_graph(args)
    return bad_pairs(G).to_json()


def cmd_discharge(args):
    G = _read_graph(args)
    check = not args.force
    try:
        if args.rules == "girth5":
            led = girth5_discharge(G, check=check)
            audit = girth5_audit(led) if args.audit else None
        else:
            led = island_discharge(G, check=check)
            audit = island_audit(led, G) if args.audit else None
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    out = {"rules": args.rules, "ledger": led.to_json()}
    if audit is not None:
        out["audit"] = audit.to_json()
    return out


def cmd_gadgets(args):
    rows = []
    extra = {}
    which = args.run
    if which in ("all", "uniqueness"):
        r = frozen_5face_uniqueness()
        rows.append(("locked 5-face, hub degree 3: none", r["degree3_none"]))
        rows.append(("locked 5-face, hub degree 4: figure orbit only", r["degree4_only_figure"]))
        rows.append(("dropped pendant: its vertex never locked", all(r["dropped_pendant_never_locked"].values())))
    if which in ("all", "figures"):
        r = replay_figures()
        rows.append(("figure 1 replay", r["figure1"]["valid"]))
        rows.append(("figure 2 replay", r["figure2"]["valid"]))
    if which in ("all", "witnesses"):
        ws = frozen_witnesses()
        for w in ws:
            rows.append((f"witness {w.name} (k={w.k}) isolated", w.isolated))
        extra["witnesses"] = [w.to_json() for w in ws]
    if which in ("all", "propagation"):
        for w in frozen_witnesses():
            rep = frozen_propagation_check(w.graph, w.colouring, w.k)
            rows.append((f"propagation on {w.name}", rep.ok))
    width = max(len(n) for n, _ in rows)
    for name, ok in rows:
        print(f"{name:<{width}}  {'PASS' if ok else 'FAIL'}", file=sys.stderr)
    out = {"results": [{"check": n, "passed": ok} for n, ok in rows], "ok": all(ok for _, ok in rows), **extra}
    if not out["ok"]:
        raise AssertionError(json.dumps(out))
    return out


def cmd_gen(args):
    params = [int(a) if a.lstrip("-").isdigit() else a for a in args.params]
    G = gen.generate(args.name, *params)
    return format_graph(G, comment=f"{args.name} {' '.join(args.params)}".strip())


def cmd_verify_schedule(args):
    G = _read_graph(args)
    pal = _palette(G, args)
    data = _json_arg(args.schedule)
    verts = G.vertices
    if len(data["start"]) != G.n:
        raise InputError("schedule start must list every vertex")
    start = {verts[i]: int(c) for i, c in enumerate(data["start"])}
    steps = [(verts[int(st["v"])], int(st["c"])) for st in data.get("steps", [])]
    exp = data.get("expected_final")
    expected = {verts[i]: int(c) for i, c in enumerate(exp)} if exp is not None else None
    rep = validate_schedule(G, Schedule(start, steps), pal, args.budget, expected)
    out = rep.to_json()
    out["final"] = _row(G, rep.final) if set(rep.final) == set(verts) else out["final"]
    if not rep.valid:
        raise Negative(out)
    return out


def cmd_corpus(args):
    directory = Path(args.dir)
    if args.action == "init":
        paths = corpus_mod.write_corpus(directory)
        return {"written": [p.name for p in paths]}
    if args.action == "add":
        if not args.name or not args.cls:
            raise InputError("corpus add needs --name and --class")
        G = _read_graph(args)
        p = corpus_mod.add_entry(directory, G, args.name, args.cls)
        return {"written": p.name}
    try:
        entries = corpus_mod.load_corpus(directory)
    except corpus_mod.CorpusError as exc:
        raise InputError(f"metadata mismatch: {exc}") from exc
    if args.action == "list":
        return {"entries": [e.metadata() for e in entries]}
    from .suites import run_checks

    if not entries:
        log.warning("corpus %s is empty; nothing to check", directory)
    results = []
    for e in entries:
        results.extend(r.to_json() for r in run_checks(e, args.seed))
    out = {"checked": len(entries), "results": results, "ok": all(r["passed"] for r in results)}
    if not out["ok"]:
        raise AssertionError(json.dumps([r for r in results if not r["passed"]]))
    return out


# -- parser ----------------------------------------------------------------------

GLOBAL_DEFAULTS = {"out": None, "seed": 0, "max_states": DEFAULT_MAX_STATES, "assert_budget": None, "verbose": False}


def build_parser() -> argparse.ArgumentParser:
    # global flags are accepted before or after the verb
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", default=argparse.SUPPRESS, help="write the report here instead of stdout")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    common.add_argument("--max-states", type=int, default=argparse.SUPPRESS)
    common.add_argument("--assert-budget", type=int, default=argparse.SUPPRESS,
                        help="fail with exit 3 if any vertex is recoloured more often")
    common.add_argument("-v", "--verbose", action="store_true", default=argparse.SUPPRESS)
    p = argparse.ArgumentParser(
        prog="recolour", description="Recolouring experiments on embedded planar graphs.", parents=[common]
    )
    sub = p.add_subparsers(dest="verb", required=True)

    def verb(name, fn, graph=True, help=None):
        sp = sub.add_parser(name, help=help, parents=[common])
        if graph:
            sp.add_argument("graph", nargs="?", default="-", help="graph file (default stdin)")
        sp.set_defaults(fn=fn)
        return sp

    def palette_flags(sp):
        sp.add_argument("-k", type=int)
        sp.add_argument("--lists", help="JSON array of per-vertex colour lists, inline or a file")

    verb("parse", cmd_parse, help="parse and echo a graph")
    verb("faces", cmd_faces, help="list faces of the embedding")
    verb("girth", cmd_girth, help="girth and degeneracy")

    sp = verb("explore", cmd_explore, help="exhaustive recolouring graph")
    palette_flags(sp)
    sp.add_argument("--alpha")
    sp.add_argument("--beta")
    sp.add_argument("--exact-limit", type=int, default=EXACT_DIAMETER_LIMIT)

    sp = verb("path", cmd_path, help="shortest recolouring path")
    palette_flags(sp)
    sp.add_argument("--alpha", required=True)
    sp.add_argument("--beta", required=True)

    sp = verb("lift", cmd_lift, help="lift a schedule on G - v through v")
    palette_flags(sp)
    sp.add_argument("--vertex", type=int, required=True)
    sp.add_argument("--schedule", required=True)
    sp.add_argument("--alpha-v", type=int, required=True)
    sp.add_argument("--beta-v", type=int, required=True)

    for name, fn in (("reduce-girth6", cmd_reduce_girth6), ("reduce-list11", cmd_reduce_list11)):
        sp = verb(name, fn)
        sp.add_argument("--alpha")
        sp.add_argument("--beta")
        if name == "reduce-list11":
            sp.add_argument("--lists")

    sp = verb("find-island", cmd_find_island)
    sp.add_argument("--max-size", type=int, default=12)
    verb("find-config", cmd_find_config)
    verb("bad-pairs", cmd_bad_pairs)

    sp = verb("discharge", cmd_discharge)
    sp.add_argument("--rules", choices=("girth5", "island"), required=True)
    sp.add_argument("--audit", action="store_true")
    sp.add_argument("--force", action="store_true", help="skip precondition checks")

    sp = verb("gadgets", cmd_gadgets, graph=False)
    sp.add_argument("--run", choices=("all", "uniqueness", "figures", "witnesses", "propagation"), default="all")

    sp = verb("gen", cmd_gen, graph=False)
    sp.add_argument("name")
    sp.add_argument("params", nargs="*")

    sp = verb("verify-schedule", cmd_verify_schedule)
    palette_flags(sp)
    sp.add_argument("--schedule", required=True)
    sp.add_argument("--budget", type=int)

    sp = verb("corpus", cmd_corpus, graph=False)
    sp.add_argument("action", choices=("list", "add", "check", "init"))
    sp.add_argument("graph", nargs="?", default="-", help="graph file for add (default stdin)")
    sp.add_argument("--dir", default="corpus")
    sp.add_argument("--name")
    sp.add_argument("--class", dest="cls", choices=corpus_mod.CLASSES)
    return p


def _emit(report, args) -> None:
    if isinstance(report, str):
        text = report
    else:
        text = json.dumps({"schema": SCHEMA, "verb": args.verb, **report}, indent=2) + "\n"
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for name, default in GLOBAL_DEFAULTS.items():
        if not hasattr(args, name):
            setattr(args, name, default)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        report = args.fn(args)
    except Negative as neg:
        _emit(neg.report, args)
        return 1
    except (InputError, GraphFormatError, corpus_mod.CorpusError, FileNotFoundError, json.JSONDecodeError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except StateSpaceTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (AssertionError, BudgetError) as exc:
        print(f"assertion failed: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit(report, args)
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())

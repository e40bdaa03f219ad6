"""Exhaustive k-recolouring graphs for the small corpus graphs: colouring
counts, component counts and exact diameters, as CSV."""

import argparse
import csv
import sys
from dataclasses import dataclass

from recolour.corpus import standard_corpus
from recolour.explorer import StateSpaceTooLarge, explore


@dataclass
class Config:
    k: int = 4
    max_n: int = 12
    max_states: int = 10**6
    exact_limit: int = 4000


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("-k", type=int, default=Config.k)
    ap.add_argument("--max-n", type=int, default=Config.max_n)
    ap.add_argument("--max-states", type=int, default=Config.max_states)
    ap.add_argument("--exact-limit", type=int, default=Config.exact_limit)
    cfg = Config(**vars(ap.parse_args()))
    w = csv.writer(sys.stdout)
    w.writerow(["graph", "class", "n", "colourings", "components", "isolated", "largest", "diameter", "exact"])
    for e in standard_corpus():
        if e.graph.n > cfg.max_n:
            continue
        try:
            res = explore(e.graph, cfg.k, max_states=cfg.max_states, exact_limit=cfg.exact_limit)
        except StateSpaceTooLarge:
            w.writerow([e.name, e.cls, e.graph.n, "cap", "", "", "", "", ""])
            continue
        big = max(res.components, key=lambda c: c.size, default=None)
        w.writerow([
            e.name, e.cls, e.graph.n, res.n_colourings, res.n_components, len(res.isolated),
            big.size if big else 0, big.diameter if big else "", big.exact if big else "",
        ])


if __name__ == "__main__":
    main()

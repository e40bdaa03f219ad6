"""Check the frozen-propagation predicates on every corpus graph whose
4-colourings fit under the cap."""

import argparse
import json
import time
from dataclasses import dataclass

from recolour.corpus import standard_corpus
from recolour.explorer import StateSpaceTooLarge
from recolour.gadgets import propagation_sweep


@dataclass
class Config:
    k: int = 4
    samples: int = 200
    seed: int = 0
    max_states: int = 10**6


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("-k", type=int, default=Config.k)
    ap.add_argument("--samples", type=int, default=Config.samples)
    ap.add_argument("--seed", type=int, default=Config.seed)
    ap.add_argument("--max-states", type=int, default=Config.max_states)
    cfg = Config(**vars(ap.parse_args()))
    bad = 0
    for e in standard_corpus():
        t0 = time.perf_counter()
        try:
            rep = propagation_sweep(e.graph, cfg.k, cfg.samples, cfg.seed, cfg.max_states)
        except StateSpaceTooLarge:
            print(f"{e.name:<28} skipped (over cap)")
            continue
        bad += len(rep.violations)
        print(f"{e.name:<28} {'ok ' if rep.ok else 'BAD'} {json.dumps(rep.checked)} {time.perf_counter() - t0:.2f}s")
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())

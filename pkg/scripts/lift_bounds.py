"""Tabulate the single-vertex lifting bound over palette size, degree and
neighbour-move count, alongside the island schedule c_1..c_12."""

import argparse
from dataclasses import dataclass

from recolour.lifting import c_schedule, lift_bound


@dataclass
class Config:
    k: int = 11
    max_degree: int = 5
    moves: tuple = (100, 200, 400, 463, 468, 1000)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("-k", type=int, default=Config.k)
    ap.add_argument("--max-degree", type=int, default=Config.max_degree)
    ap.add_argument("--moves", type=int, nargs="+", default=list(Config.moves))
    cfg = Config(**vars(ap.parse_args()))
    print("d \\ C " + "".join(f"{c:>7}" for c in cfg.moves))
    for d in range(1, min(cfg.max_degree, cfg.k - 2) + 1):
        print(f"{d:<6}" + "".join(f"{lift_bound(cfg.k, d, c):>7}" for c in cfg.moves))
    print()
    print("island schedule:", ", ".join(str(c) for c in c_schedule()))


if __name__ == "__main__":
    main()

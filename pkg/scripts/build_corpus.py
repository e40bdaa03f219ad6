"""Write the standard corpus to a directory, one ``.graph`` file each."""

import argparse
from dataclasses import dataclass
from pathlib import Path

from recolour.corpus import load_corpus, write_corpus


@dataclass
class Config:
    out: Path = Path("corpus")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", type=Path, default=Config.out)
    cfg = Config(**vars(ap.parse_args()))
    paths = write_corpus(cfg.out)
    entries = load_corpus(cfg.out)
    print(f"wrote {len(paths)} graphs to {cfg.out}")
    for e in entries:
        m = e.metadata()
        print(f"  {m['name']:<28} {m['class']:<7} n={m['n']:<3} girth={m['girth']:<4} degeneracy={m['degeneracy']}")


if __name__ == "__main__":
    main()

"""The graph corpus: named embedded graphs in three classes with checked
metadata, stored one file per graph in the text format."""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path

from . import generators as gen
from .planar import PlanarGraph, degeneracy, format_graph, girth, parse_graph

CLASSES = ("girth5", "girth6", "list11")
MIN_GIRTH = {"girth5": 5, "girth6": 6, "list11": 3}


class CorpusError(ValueError):
    pass


@dataclass
class CorpusEntry:
    name: str
    cls: str
    graph: PlanarGraph

    @property
    def girth(self) -> float:
        return girth(self.graph)

    @property
    def degeneracy(self) -> int:
        return degeneracy(self.graph)

    def metadata(self) -> dict[str, str]:
        g = self.girth
        return {
            "name": self.name,
            "class": self.cls,
            "girth": "inf" if math.isinf(g) else str(int(g)),
            "degeneracy": str(self.degeneracy),
            "n": str(self.graph.n),
        }

    def to_text(self) -> str:
        head = "\n".join(f"@{k} {v}" for k, v in self.metadata().items())
        return format_graph(self.graph, comment=head)


def _theta(a: int, b: int, c: int) -> PlanarGraph:
    """Two poles joined by internally disjoint paths with a, b, c inner vertices."""
    edges = []
    nxt = 2
    for L in (a, b, c):
        prev = 0
        for _ in range(L):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, 1))
    return PlanarGraph.from_edges(nxt, edges).embedded()


def _pentagon_chain(k: int) -> PlanarGraph:
    """``k`` pentagons, consecutive ones sharing an edge."""
    edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]
    a, b = 2, 3
    nxt = 5
    for _ in range(k - 1):
        x, y, z = nxt, nxt + 1, nxt + 2
        nxt += 3
        edges += [(b, x), (x, y), (y, z), (z, a)]
        a, b = y, z
    return PlanarGraph.from_edges(nxt, edges).embedded()


def _random(cls: str, n: int, g: int, seed: int) -> CorpusEntry:
    G = gen.random_girth_planar(n, g, seed)
    return CorpusEntry(f"random-girth{g}-{G.n}-s{seed}", cls, G)


def standard_corpus() -> list[CorpusEntry]:
    e = CorpusEntry
    out = [
        # small girth-5 graphs for exhaustive connectivity
        e("C5", "girth5", gen.cycle(5)),
        e("C7", "girth5", gen.cycle(7)),
        e("C10", "girth5", gen.cycle(10)),
        e("P6", "girth5", gen.path(6)),
        e("theta-1-2-3", "girth5", _theta(1, 2, 3)),
        e("theta-2-2-2", "girth5", _theta(2, 2, 2)),
        e("theta-3-3-3", "girth5", _theta(3, 3, 3)),
        e("pentagon-pair", "girth5", _pentagon_chain(2)),
        e("pentagon-chain-3", "girth5", _pentagon_chain(3)),
        e("pentagon-fan-2", "girth5", gen.pentagon_fan(2)),
        e("pentagon-fan-3", "girth5", gen.pentagon_fan(3)),
        e("locked-face", "girth5", gen.locked_face_gadget(4)),
        _random("girth5", 11, 5, 1),
        _random("girth5", 12, 5, 2),
        # larger girth-5 graphs for the configurations and discharging
        e("dodecahedron", "girth5", gen.dodecahedron()),
        e("double-flower-4", "girth5", gen.double_flower(4)),
        e("double-flower-5", "girth5", gen.double_flower(5)),
        e("pentagon-fan-4", "girth5", gen.pentagon_fan(4)),
        e("pentagon-fan-closed-5", "girth5", gen.pentagon_fan(5, closed=True)),
        _random("girth5", 24, 5, 0),
        _random("girth5", 30, 5, 3),
        # girth 6
        e("C6", "girth6", gen.cycle(6)),
        e("C9", "girth6", gen.cycle(9)),
        e("hex-1", "girth6", gen.hex_patch(1)),
        e("hex-2", "girth6", gen.hex_patch(2)),
        e("hex-3", "girth6", gen.hex_patch(3)),
        e("subdivided-K4", "girth6", gen.subdivide(gen.complete(4))),
        e("subdivided-octahedron", "girth6", gen.subdivide(gen.octahedron())),
        e("subdivided-cube", "girth6", gen.subdivide(gen.cube())),
        e("subdivided-icosahedron", "girth6", gen.subdivide(gen.icosahedron())),
        e("subdivided-dodecahedron", "girth6", gen.subdivide(gen.dodecahedron())),
        e("star-subdivision-7", "girth6", gen.star_subdivision(7)),
        _random("girth6", 30, 6, 0),
        _random("girth6", 45, 6, 1),
        # planar graphs with 11-lists
        e("K4", "list11", gen.complete(4)),
        e("cube", "list11", gen.cube()),
        e("octahedron", "list11", gen.octahedron()),
        e("icosahedron", "list11", gen.icosahedron()),
        e("pentakis-dodecahedron", "list11", gen.pentakis_dodecahedron()),
        e("stellated-cube", "list11", gen.stellate(gen.cube())),
        e("delaunay-20-s0", "list11", gen.delaunay(20, 0)),
        e("delaunay-30-s1", "list11", gen.delaunay(30, 1)),
        e("delaunay-40-s2", "list11", gen.delaunay(40, 2)),
    ]
    return out


def check_metadata(entry: CorpusEntry, meta: dict[str, str]) -> None:
    """Raise ``CorpusError`` if recorded metadata disagrees with the graph."""
    if meta.get("class") not in CLASSES:
        raise CorpusError(f"{entry.name}: unknown class {meta.get('class')!r}")
    actual = entry.metadata()
    for key in ("girth", "degeneracy", "n"):
        if key in meta and meta[key] != actual[key]:
            raise CorpusError(f"{entry.name}: metadata {key}={meta[key]} but graph has {actual[key]}")
    if entry.girth < MIN_GIRTH[entry.cls]:
        raise CorpusError(f"{entry.name}: class {entry.cls} needs girth >= {MIN_GIRTH[entry.cls]}, graph has {actual['girth']}")
    if not entry.graph.euler_ok():
        raise CorpusError(f"{entry.name}: rotation system is not a plane embedding")


def parse_metadata(text: str) -> dict[str, str]:
    meta = {}
    for line in text.splitlines():
        line = line.strip()
        if line.startswith("#"):
            body = line[1:].strip()
            if body.startswith("@"):
                key, _, val = body[1:].partition(" ")
                meta[key] = val.strip()
    return meta


def load_entry(path: Path) -> CorpusEntry:
    text = Path(path).read_text()
    meta = parse_metadata(text)
    G = parse_graph(text)
    entry = CorpusEntry(meta.get("name", Path(path).stem), meta.get("class", ""), G)
    check_metadata(entry, meta)
    return entry


def load_corpus(directory: Path) -> list[CorpusEntry]:
    directory = Path(directory)
    if not directory.exists():
        return []
    return sorted((load_entry(p) for p in directory.glob("*.graph")), key=lambda e: e.name)


def write_corpus(directory: Path, entries: list[CorpusEntry] | None = None) -> list[Path]:
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    paths = []
    for entry in entries if entries is not None else standard_corpus():
        p = directory / f"{entry.name}.graph"
        p.write_text(entry.to_text())
        paths.append(p)
    return paths


def add_entry(directory: Path, G: PlanarGraph, name: str, cls: str) -> Path:
    if cls not in CLASSES:
        raise CorpusError(f"unknown class {cls!r}")
    entry = CorpusEntry(name, cls, G)
    check_metadata(entry, entry.metadata())
    return write_corpus(directory, [entry])[0]

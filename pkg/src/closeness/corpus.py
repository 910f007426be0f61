"""Corpus specification and construction.

Graph ids encode provenance and can be turned back into graphs with
:func:`graph_from_id`:

* ``family:path:7``, ``family:bipartite:3,4``
* ``rand:n20:p0.3:s42``  (connected G(n, p) with that seed)
* ``tree:n10:s7``        (random Pruefer tree)
* ``selfcomp:9``
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from pathlib import Path

from .bounds import TAG_SELF_COMPLEMENTARY
from .generators import (
    FamilySpec,
    make_family,
    random_connected_gnp,
    random_tree,
    self_complementary,
)
from .graph import Graph, GraphInputError, read_edgelist
from .rng import SplitMix64

DEFAULT_FAMILY_GRID: dict[str, tuple[int, int]] = {
    "complete": (2, 16),
    "cycle": (3, 64),
    "wheel": (4, 32),
    "star": (1, 32),
    "near_complete": (3, 16),
    "cocktail": (2, 16),
    "crown": (3, 16),
    "path": (2, 64),
    "ladder": (2, 32),
    "circular_ladder": (3, 32),
    "hypercube": (1, 8),
}
DEFAULT_BIPARTITE_MAX = 6
DEFAULT_ASYMPTOTIC_SIZES = (2, 3, 4, 5, 10, 100, 1000, 10_000, 100_000, 1_000_000)


def default_families() -> list[str]:
    specs = [f"{kind}:{n}" for kind, (lo, hi) in DEFAULT_FAMILY_GRID.items() for n in range(lo, hi + 1)]
    specs += [
        f"bipartite:{m},{k}"
        for m in range(1, DEFAULT_BIPARTITE_MAX + 1)
        for k in range(1, DEFAULT_BIPARTITE_MAX + 1)
    ]
    return specs


@dataclass
class RandomGraphSpec:
    count: int = 30
    n_min: int = 5
    n_max: int = 40
    p_min: float = 0.2
    p_max: float = 0.5
    seed: int = 42


@dataclass
class RandomTreeSpec:
    count: int = 30
    n_min: int = 3
    n_max: int = 40
    seed: int = 7


@dataclass
class CorpusSpec:
    families: list[str] = field(default_factory=default_families)
    random_graphs: RandomGraphSpec | None = field(default_factory=RandomGraphSpec)
    random_trees: RandomTreeSpec | None = field(default_factory=RandomTreeSpec)
    self_complementary: list[int] = field(default_factory=lambda: [4, 5, 8, 9, 12, 13, 16, 17, 20, 21])
    spectral_limit: int = 128
    alpha_limit: int = 64
    asymptotic_sizes: list[int] = field(default_factory=lambda: list(DEFAULT_ASYMPTOTIC_SIZES))

    @classmethod
    def empty(cls) -> CorpusSpec:
        return cls(families=[], random_graphs=None, random_trees=None, self_complementary=[], asymptotic_sizes=[])

    @classmethod
    def from_dict(cls, data: dict) -> CorpusSpec:
        known = {
            "families", "random_graphs", "random_trees", "self_complementary",
            "spectral_limit", "alpha_limit", "asymptotic_sizes",
        }
        unknown = set(data) - known
        if unknown:
            raise GraphInputError(f"unknown corpus keys: {', '.join(sorted(unknown))}")
        spec = cls.empty()
        spec.families = list(data.get("families", []))
        for key in ("random_graphs", "random_trees"):
            if data.get(key) and "seed" not in data[key]:
                raise GraphInputError(f"{key}: a seed is required")
        try:
            if data.get("random_graphs"):
                spec.random_graphs = RandomGraphSpec(**data["random_graphs"])
            if data.get("random_trees"):
                spec.random_trees = RandomTreeSpec(**data["random_trees"])
        except TypeError as exc:
            raise GraphInputError(f"bad corpus entry: {exc}") from None
        spec.self_complementary = [int(n) for n in data.get("self_complementary", [])]
        spec.spectral_limit = int(data.get("spectral_limit", spec.spectral_limit))
        spec.alpha_limit = int(data.get("alpha_limit", spec.alpha_limit))
        spec.asymptotic_sizes = [int(n) for n in data.get("asymptotic_sizes", [])]
        if any(n < 2 for n in spec.asymptotic_sizes):
            raise GraphInputError("asymptotic_sizes must all be >= 2")
        return spec

    @classmethod
    def load(cls, path: str | Path) -> CorpusSpec:
        try:
            data = json.loads(Path(path).read_text())
        except json.JSONDecodeError as exc:
            raise GraphInputError(f"{path}: invalid JSON ({exc})") from None
        return cls.from_dict(data)

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class CorpusEntry:
    graph_id: str
    graph: Graph
    tags: frozenset[str]
    family: FamilySpec | None = None


def random_graph_ids(spec: RandomGraphSpec) -> list[str]:
    """Draw per-instance (n, p, seed) from the spec's master seed."""
    if spec.n_min < 1 or spec.n_max < spec.n_min:
        raise GraphInputError(f"random_graphs: bad n range [{spec.n_min}, {spec.n_max}]")
    if not 0 < spec.p_min <= spec.p_max <= 1:
        raise GraphInputError(f"random_graphs: bad p range [{spec.p_min}, {spec.p_max}]")
    rng = SplitMix64(spec.seed)
    ids = []
    for _ in range(spec.count):
        n = spec.n_min + rng.below(spec.n_max - spec.n_min + 1)
        # p on a 0.01 grid keeps ids short and exactly reproducible
        lo, hi = round(spec.p_min * 100), round(spec.p_max * 100)
        p = (lo + rng.below(hi - lo + 1)) / 100
        seed = rng.next_u64()
        ids.append(f"rand:n{n}:p{p!r}:s{seed}")
    return ids


def random_tree_ids(spec: RandomTreeSpec) -> list[str]:
    if spec.n_min < 1 or spec.n_max < spec.n_min:
        raise GraphInputError(f"random_trees: bad n range [{spec.n_min}, {spec.n_max}]")
    rng = SplitMix64(spec.seed)
    ids = []
    for _ in range(spec.count):
        n = spec.n_min + rng.below(spec.n_max - spec.n_min + 1)
        ids.append(f"tree:n{n}:s{rng.next_u64()}")
    return ids


def _field(part: str, prefix: str, text: str) -> str:
    if not part.startswith(prefix):
        raise GraphInputError(f"malformed graph id {text!r}")
    return part[len(prefix):]


def entry_from_id(graph_id: str) -> CorpusEntry:
    """Rebuild a corpus entry from its provenance id."""
    head, _, rest = graph_id.partition(":")
    try:
        if head == "family":
            spec = FamilySpec.parse(rest)
            return CorpusEntry(f"family:{spec}", make_family(spec), frozenset(), spec)
        if head == "rand":
            n, p, s = rest.split(":")
            g = random_connected_gnp(int(_field(n, "n", graph_id)), float(_field(p, "p", graph_id)), int(_field(s, "s", graph_id)))
            return CorpusEntry(graph_id, g, frozenset())
        if head == "tree":
            n, s = rest.split(":")
            g = random_tree(int(_field(n, "n", graph_id)), int(_field(s, "s", graph_id)))
            return CorpusEntry(graph_id, g, frozenset())
        if head == "selfcomp":
            return CorpusEntry(graph_id, self_complementary(int(rest)), frozenset({TAG_SELF_COMPLEMENTARY}))
    except ValueError as exc:
        if isinstance(exc, GraphInputError):
            raise
        raise GraphInputError(f"malformed graph id {graph_id!r}: {exc}") from None
    raise GraphInputError(f"unknown graph id {graph_id!r}")


def graph_from_id(graph_id: str) -> Graph:
    return entry_from_id(graph_id).graph


def load_input(text: str) -> CorpusEntry:
    """A CLI graph argument: a provenance id, a bare family spec, or an edge-list file."""
    if text.split(":", 1)[0] in ("family", "rand", "tree", "selfcomp"):
        return entry_from_id(text)
    path = Path(text)
    if path.exists():
        return CorpusEntry(f"file:{path.name}", read_edgelist(path), frozenset())
    if ":" in text:
        return entry_from_id(f"family:{text}")
    raise GraphInputError(f"no such file and not a graph id: {text!r}")


def corpus_ids(spec: CorpusSpec) -> list[str]:
    ids = []
    for fam in spec.families:
        try:
            ids.append(f"family:{FamilySpec.parse(fam)}")
        except GraphInputError as exc:
            raise GraphInputError(f"corpus family entry {fam!r}: {exc}") from None
    if spec.random_graphs:
        ids += random_graph_ids(spec.random_graphs)
    if spec.random_trees:
        ids += random_tree_ids(spec.random_trees)
    for n in spec.self_complementary:
        if n < 1 or n % 4 not in (0, 1):
            raise GraphInputError(f"self_complementary entry {n}: needs n ≡ 0 or 1 (mod 4)")
        ids.append(f"selfcomp:{n}")
    return sorted(set(ids))


def build_corpus(spec: CorpusSpec) -> list[CorpusEntry]:
    return [entry_from_id(gid) for gid in corpus_ids(spec)]

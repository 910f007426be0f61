"""Slow reference computations used to cross-check the fast paths.

Nothing here shares code with BFS or the dependency accumulation: shortest
paths are found by enumerating simple paths of increasing length.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from .graph import Graph


def _paths_of_length(g: Graph, s: int, t: int, length: int) -> list[tuple[int, ...]]:
    found = []
    path = [s]
    on_path = {s}

    def extend(v: int, left: int) -> None:
        if left == 0:
            if v == t:
                found.append(tuple(path))
            return
        for w in g.adjacency[v]:
            if w in on_path or (w == t and left > 1):
                continue
            path.append(w)
            on_path.add(w)
            extend(w, left - 1)
            on_path.discard(w)
            path.pop()

    extend(s, length)
    return found


def shortest_paths(g: Graph, s: int, t: int) -> list[tuple[int, ...]]:
    """Every shortest s-t path, by iterative deepening over simple paths."""
    if s == t:
        return [(s,)]
    for length in range(1, g.n):
        paths = _paths_of_length(g, s, t, length)
        if paths:
            return paths
    return []


def distance(g: Graph, s: int, t: int) -> int | None:
    paths = shortest_paths(g, s, t)
    return len(paths[0]) - 1 if paths else None


def naive_betweenness(g: Graph) -> list[Fraction]:
    """Betweenness over unordered pairs by explicit shortest-path enumeration."""
    score = [Fraction(0)] * g.n
    for s, t in combinations(range(g.n), 2):
        paths = shortest_paths(g, s, t)
        if not paths:
            continue
        share = Fraction(1, len(paths))
        for p in paths:
            for v in p[1:-1]:
                score[v] += share
    return score

"""Graph representation and shortest-path machinery.

Vertices are dense indices ``0..n-1``.  Graphs are immutable once built;
adjacency lists are kept sorted so every traversal is deterministic.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

UNREACHABLE = -1


class GraphInputError(ValueError):
    """Raised for malformed graph input (bad indices, self-loops, bad files)."""


class DisconnectedGraphError(ValueError):
    """Raised when a metric is requested on a disconnected graph."""

    def __init__(self, msg: str = "metrics require connectivity"):
        super().__init__(msg)


@dataclass(frozen=True)
class Graph:
    n: int
    adjacency: tuple[tuple[int, ...], ...]
    m: int

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and v in self.adjacency[u]

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` pairs with ``u < v``, in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    def to_edgelist(self) -> str:
        lines = [f"{self.n} {self.m}"]
        lines += [f"{u} {v}" for u, v in self.edges()]
        return "\n".join(lines) + "\n"


def from_edge_list(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a canonical simple graph; repeated or reversed pairs collapse."""
    if n < 0:
        raise GraphInputError(f"vertex count must be non-negative, got {n}")
    adj: list[set[int]] = [set() for _ in range(n)]
    for pair in edges:
        u, v = int(pair[0]), int(pair[1])
        if not (0 <= u < n and 0 <= v < n):
            raise GraphInputError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise GraphInputError(f"self-loop at vertex {u}")
        adj[u].add(v)
        adj[v].add(u)
    adjacency = tuple(tuple(sorted(s)) for s in adj)
    m = sum(len(a) for a in adjacency) // 2
    return Graph(n, adjacency, m)


def parse_edgelist(text: str) -> Graph:
    """Parse the ``n m`` header + ``u v`` lines format (``#`` starts a comment line)."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphInputError(f"line {lineno}: expected two integers, got {raw!r}")
        try:
            rows.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise GraphInputError(f"line {lineno}: expected two integers, got {raw!r}") from None
    if not rows:
        raise GraphInputError("empty edge list: missing 'n m' header")
    (n, m), body = rows[0], rows[1:]
    if len(body) != m:
        raise GraphInputError(f"header declares {m} edges but {len(body)} follow")
    return from_edge_list(n, body)


def read_edgelist(path: str | Path) -> Graph:
    return parse_edgelist(Path(path).read_text())


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Hop distances from ``source``; unreachable vertices get ``UNREACHABLE``."""
    if not 0 <= source < g.n:
        raise GraphInputError(f"source {source} out of range for n={g.n}")
    dist = [UNREACHABLE] * g.n
    dist[source] = 0
    queue = deque([source])
    adj = g.adjacency
    while queue:
        v = queue.popleft()
        dv = dist[v] + 1
        for w in adj[v]:
            if dist[w] == UNREACHABLE:
                dist[w] = dv
                queue.append(w)
    return dist


@dataclass(frozen=True)
class DistanceMatrix:
    n: int
    d: tuple[tuple[int, ...], ...]
    connected: bool

    def row_sums(self) -> list[int]:
        return [sum(row) for row in self.d]

    def require_connected(self) -> None:
        if not self.connected:
            raise DisconnectedGraphError()


def distance_matrix(g: Graph) -> DistanceMatrix:
    rows = tuple(tuple(bfs_distances(g, v)) for v in range(g.n))
    connected = all(UNREACHABLE not in row for row in rows)
    return DistanceMatrix(g.n, rows, connected)


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return False
    return UNREACHABLE not in bfs_distances(g, 0)


@dataclass(frozen=True)
class StructuralSummary:
    min_degree: int
    max_degree: int
    radius: int
    diameter: int
    eccentricities: tuple[int, ...]
    # distance_histogram[v][i-1] = number of vertices at distance i from v
    distance_histogram: tuple[tuple[int, ...], ...]


def structural_summary(g: Graph, dm: DistanceMatrix) -> StructuralSummary:
    dm.require_connected()
    degrees = [g.degree(v) for v in range(g.n)]
    ecc = tuple(max(row) for row in dm.d)
    hist = []
    for v, row in enumerate(dm.d):
        counts = [0] * ecc[v]
        for dist in row:
            if dist:
                counts[dist - 1] += 1
        hist.append(tuple(counts))
    return StructuralSummary(
        min_degree=min(degrees),
        max_degree=max(degrees),
        radius=min(ecc),
        diameter=max(ecc),
        eccentricities=ecc,
        distance_histogram=tuple(hist),
    )


def delete_edge(g: Graph, u: int, v: int) -> Graph:
    if not g.has_edge(u, v):
        raise GraphInputError(f"({u}, {v}) is not an edge")
    adjacency = list(g.adjacency)
    adjacency[u] = tuple(w for w in adjacency[u] if w != v)
    adjacency[v] = tuple(w for w in adjacency[v] if w != u)
    return Graph(g.n, tuple(adjacency), g.m - 1)


def bridges(g: Graph) -> list[tuple[int, int]]:
    """All bridges ``(u, v)`` with ``u < v``, sorted (iterative low-link DFS)."""
    disc = [-1] * g.n
    low = [0] * g.n
    found = []
    timer = 0
    for root in range(g.n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        # frames: (vertex, parent, next neighbour index)
        stack = [(root, -1, 0)]
        while stack:
            v, parent, i = stack[-1]
            nbrs = g.adjacency[v]
            if i < len(nbrs):
                stack[-1] = (v, parent, i + 1)
                w = nbrs[i]
                if w == parent:
                    continue
                if disc[w] == -1:
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, v, 0))
                else:
                    low[v] = min(low[v], disc[w])
            else:
                stack.pop()
                if parent != -1:
                    low[parent] = min(low[parent], low[v])
                    if low[v] > disc[parent]:
                        found.append((min(v, parent), max(v, parent)))
    return sorted(found)


def is_tree(g: Graph) -> bool:
    return g.m == g.n - 1 and is_connected(g)

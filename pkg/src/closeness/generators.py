"""Constructors for the twelve named graph families and the random corpora.

Vertex numbering is part of the contract, since closed-form closeness values
are matched vertex by vertex:

=================  =====================================================
complete:n         0..n-1
cycle:n            0..n-1 around the cycle
wheel:n            hub 0, rim 1..n-1 (n vertices in total)
star:n             centre 0, leaves 1..n (n+1 vertices in total)
near_complete:n    K_n with edge (0, 1) removed
cocktail:n         K_2n minus the matching (2i, 2i+1)
bipartite:m,k      side of size m is 0..m-1, side of size k is m..m+k-1
crown:n            u_i = i, v_i = n+i; K_{n,n} minus the edges u_i v_i
path:n             v_0..v_{n-1} in order
ladder:n           rail u_k = k, rail v_k = n+k, rungs u_k v_k
circular_ladder:n  outer cycle 0..n-1, inner cycle n..2n-1, rungs i, n+i
hypercube:k        binary words, adjacent when they differ in one bit
=================  =====================================================

The wheel and star conventions follow the closed-form closeness
expressions (rim transmission 2n-5, centre closeness exactly 1), not the
way they are usually drawn.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .graph import Graph, GraphInputError, from_edge_list, is_connected
from .rng import SplitMix64

# kind -> (parameter count, minimum value of each parameter)
FAMILY_KINDS: dict[str, tuple[int, int]] = {
    "complete": (1, 1),
    "cycle": (1, 3),
    "wheel": (1, 4),
    "star": (1, 1),
    "near_complete": (1, 3),
    "cocktail": (1, 2),
    "bipartite": (2, 1),
    "crown": (1, 3),
    "path": (1, 1),
    "ladder": (1, 2),
    "circular_ladder": (1, 3),
    "hypercube": (1, 1),
}

MAX_REJECTIONS = 10_000


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: tuple[int, ...]

    def __post_init__(self):
        if self.kind not in FAMILY_KINDS:
            raise GraphInputError(
                f"unknown family {self.kind!r}; expected one of {', '.join(FAMILY_KINDS)}"
            )
        arity, floor = FAMILY_KINDS[self.kind]
        if len(self.params) != arity:
            raise GraphInputError(f"{self.kind} takes {arity} parameter(s), got {len(self.params)}")
        for p in self.params:
            if p < floor:
                raise GraphInputError(f"{self.kind} requires parameters >= {floor}, got {p}")

    @classmethod
    def parse(cls, text: str) -> FamilySpec:
        """Parse ``kind:p1[,p2]``, e.g. ``bipartite:3,4``."""
        kind, sep, rest = text.strip().partition(":")
        if not sep or not rest:
            raise GraphInputError(f"family spec must look like 'kind:params', got {text!r}")
        try:
            params = tuple(int(p) for p in rest.split(","))
        except ValueError:
            raise GraphInputError(f"non-integer parameter in {text!r}") from None
        return cls(kind, params)

    def __str__(self) -> str:
        return f"{self.kind}:{','.join(map(str, self.params))}"


def make_family(spec: FamilySpec) -> Graph:
    kind, p = spec.kind, spec.params
    n = p[0]
    if kind == "complete":
        return from_edge_list(n, [(u, v) for u in range(n) for v in range(u + 1, n)])
    if kind == "cycle":
        return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])
    if kind == "wheel":
        rim = n - 1
        edges = [(0, i) for i in range(1, n)]
        edges += [(1 + i, 1 + (i + 1) % rim) for i in range(rim)]
        return from_edge_list(n, edges)
    if kind == "star":
        return from_edge_list(n + 1, [(0, i) for i in range(1, n + 1)])
    if kind == "near_complete":
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) != (0, 1)]
        return from_edge_list(n, edges)
    if kind == "cocktail":
        size = 2 * n
        edges = [(u, v) for u in range(size) for v in range(u + 1, size) if u // 2 != v // 2]
        return from_edge_list(size, edges)
    if kind == "bipartite":
        m, k = p
        return from_edge_list(m + k, [(u, m + j) for u in range(m) for j in range(k)])
    if kind == "crown":
        return from_edge_list(2 * n, [(i, n + j) for i in range(n) for j in range(n) if i != j])
    if kind == "path":
        return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])
    if kind == "ladder":
        edges = [(k, n + k) for k in range(n)]
        edges += [(k, k + 1) for k in range(n - 1)]
        edges += [(n + k, n + k + 1) for k in range(n - 1)]
        return from_edge_list(2 * n, edges)
    if kind == "circular_ladder":
        edges = [(i, n + i) for i in range(n)]
        edges += [(i, (i + 1) % n) for i in range(n)]
        edges += [(n + i, n + (i + 1) % n) for i in range(n)]
        return from_edge_list(2 * n, edges)
    if kind == "hypercube":
        size = 1 << n
        edges = [(v, v ^ (1 << b)) for v in range(size) for b in range(n) if v < v ^ (1 << b)]
        return from_edge_list(size, edges)
    raise AssertionError(kind)  # unreachable: FamilySpec validates kind


def random_gnp(n: int, p: float, rng: SplitMix64) -> Graph:
    """One Erdos-Renyi draw; pairs (u, v), u < v, consume draws in lexicographic order."""
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.next_float() < p]
    return from_edge_list(n, edges)


def random_connected_gnp(n: int, p: float, seed: int) -> Graph:
    if n < 1:
        raise GraphInputError("n must be >= 1")
    if not 0 < p <= 1:
        raise GraphInputError(f"p must lie in (0, 1], got {p}")
    rng = SplitMix64(seed)
    for _ in range(MAX_REJECTIONS):
        g = random_gnp(n, p, rng)
        if is_connected(g):
            return g
    raise RuntimeError(
        f"no connected G({n}, {p}) after {MAX_REJECTIONS} draws; use a larger p"
    )


def prufer_decode(seq: list[int], n: int) -> Graph:
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    if n >= 2:
        edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return from_edge_list(n, edges)


def random_tree(n: int, seed: int) -> Graph:
    """Uniform labelled tree via a random Pruefer sequence."""
    if n < 1:
        raise GraphInputError("n must be >= 1")
    rng = SplitMix64(seed)
    seq = [rng.below(n) for _ in range(max(n - 2, 0))]
    return prufer_decode(seq, n)


def self_complementary(n: int) -> Graph:
    """Self-complementary graph on n vertices, grown four vertices at a time.

    Starting from K_1 or P_4, each step appends a path a-b-c-d and joins
    both ends a, d to every existing vertex.
    """
    if n < 1 or n % 4 not in (0, 1):
        raise GraphInputError(f"self-complementary graphs need n ≡ 0 or 1 (mod 4), got n={n}")
    if n % 4 == 1:
        size, edges = 1, []
    else:
        size, edges = 4, [(0, 1), (1, 2), (2, 3)]
    while size < n:
        a, b, c, d = size, size + 1, size + 2, size + 3
        edges += [(a, b), (b, c), (c, d)]
        edges += [(x, v) for v in range(size) for x in (a, d)]
        size += 4
    g = from_edge_list(n, edges)
    degrees = sorted(g.degree(v) for v in range(n))
    assert 4 * g.m == n * (n - 1)
    assert degrees == sorted(n - 1 - d for d in degrees)
    return g

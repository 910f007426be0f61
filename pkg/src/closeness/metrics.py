"""Exact closeness, mean distance and betweenness.

Every quantity here is a :class:`fractions.Fraction`.  Betweenness is
summed over *unordered* pairs {s, t} with s, t != v; with that convention
the mean betweenness satisfies the identity
``mean_betweenness == (n - 1) * (mean_distance - 1) / 2`` exactly.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .graph import DisconnectedGraphError, DistanceMatrix, Graph, GraphInputError


@dataclass(frozen=True)
class CentralityProfile:
    transmission: tuple[int, ...]
    closeness: tuple[Fraction, ...]
    graph_closeness: Fraction
    mean_distance: Fraction
    transmission_regular: bool
    betweenness: tuple[Fraction, ...] | None = None
    graph_betweenness: Fraction | None = None

    @property
    def n(self) -> int:
        return len(self.transmission)


def _check(dm: DistanceMatrix) -> None:
    if not dm.connected:
        raise DisconnectedGraphError()
    if dm.n < 2:
        raise GraphInputError("closeness undefined for a single vertex")


def mean_distance(dm: DistanceMatrix) -> Fraction:
    """Average distance over ordered pairs of distinct vertices."""
    _check(dm)
    return Fraction(sum(dm.row_sums()), dm.n * (dm.n - 1))


def closeness_profile(g: Graph, dm: DistanceMatrix) -> CentralityProfile:
    _check(dm)
    n = dm.n
    transmission = tuple(dm.row_sums())
    closeness = tuple(Fraction(n - 1, t) for t in transmission)
    return CentralityProfile(
        transmission=transmission,
        closeness=closeness,
        graph_closeness=sum(closeness, Fraction(0)) / n,
        mean_distance=Fraction(sum(transmission), n * (n - 1)),
        transmission_regular=len(set(transmission)) == 1,
    )


def _single_source_dependencies(g: Graph, s: int) -> list[Fraction]:
    """Brandes dependencies of ``s`` on every vertex (exact, ordered pairs)."""
    n = g.n
    dist = [-1] * n
    sigma = [0] * n
    preds: list[list[int]] = [[] for _ in range(n)]
    dist[s] = 0
    sigma[s] = 1
    order = []
    queue = deque([s])
    while queue:
        v = queue.popleft()
        order.append(v)
        for w in g.adjacency[v]:
            if dist[w] < 0:
                dist[w] = dist[v] + 1
                queue.append(w)
            if dist[w] == dist[v] + 1:
                sigma[w] += sigma[v]
                preds[w].append(v)
    delta = [Fraction(0)] * n
    for w in reversed(order):
        coeff = (1 + delta[w]) / sigma[w]
        for v in preds[w]:
            delta[v] += sigma[v] * coeff
    delta[s] = Fraction(0)
    return delta


def betweenness(g: Graph) -> list[Fraction]:
    """Per-vertex betweenness over unordered pairs."""
    total = [Fraction(0)] * g.n
    for s in range(g.n):
        for v, dep in enumerate(_single_source_dependencies(g, s)):
            if dep:
                total[v] += dep
    # each unordered pair was counted once from each endpoint
    return [b / 2 for b in total]


def betweenness_profile(g: Graph, dm: DistanceMatrix, base: CentralityProfile | None = None) -> CentralityProfile:
    if not dm.connected:
        raise DisconnectedGraphError()
    base = base or closeness_profile(g, dm)
    bc = tuple(betweenness(g))
    return CentralityProfile(
        transmission=base.transmission,
        closeness=base.closeness,
        graph_closeness=base.graph_closeness,
        mean_distance=base.mean_distance,
        transmission_regular=base.transmission_regular,
        betweenness=bc,
        graph_betweenness=sum(bc, Fraction(0)) / g.n,
    )


def full_profile(g: Graph, dm: DistanceMatrix) -> CentralityProfile:
    return betweenness_profile(g, dm, closeness_profile(g, dm))


def gago_residual(profile: CentralityProfile, n: int) -> Fraction:
    """Mean betweenness minus (n-1)(mean distance - 1)/2; zero on every connected graph."""
    if profile.graph_betweenness is None:
        raise ValueError("profile has no betweenness fields")
    return profile.graph_betweenness - Fraction(n - 1, 2) * (profile.mean_distance - 1)

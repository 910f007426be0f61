"""Exact independence number by branch and bound on vertex bitsets."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph

DEFAULT_EXACT_LIMIT = 64


class ExactLimitError(ValueError):
    pass


@dataclass(frozen=True)
class IndependenceResult:
    alpha: int
    witness: tuple[int, ...]


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _clique_cover_bound(cand: int, nbr: list[int]) -> int:
    """Greedy clique cover of ``cand`` (a colouring of the complement).

    An independent set meets each clique at most once, so the number of
    cliques bounds alpha from above.
    """
    cliques = 0
    rest = cand
    while rest:
        cliques += 1
        low = rest & -rest
        v = low.bit_length() - 1
        clique_room = nbr[v] & rest
        rest ^= low
        while clique_room:
            low = clique_room & -clique_room
            u = low.bit_length() - 1
            rest ^= low
            clique_room &= nbr[u]
    return cliques


def independence_number(g: Graph, limit: int = DEFAULT_EXACT_LIMIT) -> IndependenceResult:
    if g.n > limit:
        raise ExactLimitError(
            f"exact α limited to n ≤ {limit}; raise limit explicitly (graph has n = {g.n})"
        )
    nbr = [sum(1 << w for w in g.adjacency[v]) for v in range(g.n)]
    best: list[int] = [0, 0]  # size, mask

    def search(cand: int, chosen: int, size: int) -> None:
        # vertices of degree <= 1 within cand are always safe to take
        changed = True
        while changed:
            changed = False
            for v in _bits(cand):
                local = nbr[v] & cand
                if local & (local - 1) == 0:
                    chosen |= 1 << v
                    size += 1
                    cand &= ~((1 << v) | local)
                    changed = True
                    break
        if not cand:
            if size > best[0]:
                best[0], best[1] = size, chosen
            return
        if size + _clique_cover_bound(cand, nbr) <= best[0]:
            return
        # branch on the max-degree vertex, smallest index on ties
        pivot, top = -1, -1
        for v in _bits(cand):
            deg = (nbr[v] & cand).bit_count()
            if deg > top:
                pivot, top = v, deg
        bit = 1 << pivot
        search(cand & ~(bit | nbr[pivot]), chosen | bit, size + 1)
        search(cand & ~bit, chosen, size)

    search((1 << g.n) - 1, 0, 0)
    witness = tuple(_bits(best[1]))
    _verify(g, witness, best[0])
    return IndependenceResult(best[0], witness)


def _verify(g: Graph, witness: tuple[int, ...], alpha: int) -> None:
    members = set(witness)
    if len(members) != alpha:
        raise AssertionError("witness size does not match alpha")
    for v in witness:
        if members.intersection(g.adjacency[v]):
            raise AssertionError(f"witness is not independent at vertex {v}")


def brute_force_alpha(g: Graph) -> int:
    """Size of the largest independent set, by enumerating every independent subset.

    No bounding or pruning beyond independence itself; meant as an oracle
    for small graphs.
    """
    nbr = [sum(1 << w for w in g.adjacency[v]) for v in range(g.n)]
    best = 0
    # stack of (next vertex to decide, forbidden mask, size so far)
    stack = [(0, 0, 0)]
    while stack:
        v, forbidden, size = stack.pop()
        best = max(best, size)
        for u in range(v, g.n):
            if not forbidden >> u & 1:
                stack.append((u + 1, forbidden | nbr[u], size + 1))
    return best

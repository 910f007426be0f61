import pytest
from hypothesis import given, settings

from closeness.generators import random_connected_gnp
from closeness.independence import ExactLimitError, brute_force_alpha, independence_number

from conftest import fam, small_graphs


def subset_alpha(g):
    """Plain scan of all 2^n vertex subsets."""
    best = 0
    for mask in range(1 << g.n):
        members = [v for v in range(g.n) if mask >> v & 1]
        if len(members) > best and all(not g.has_edge(u, v) for u in members for v in members):
            best = len(members)
    return best


@pytest.mark.parametrize("n", range(1, 9))
def test_complete(n):
    assert independence_number(fam(f"complete:{n}")).alpha == 1 if n > 0 else True


def test_examples():
    assert independence_number(fam("cycle:5")).alpha == 2
    assert subset_alpha(fam("cycle:5")) == 2
    crown = fam("crown:4")
    assert independence_number(crown).alpha == 4
    assert subset_alpha(crown) == 4


@settings(max_examples=80)
@given(small_graphs(max_n=11))
def test_matches_subset_scan(g):
    res = independence_number(g)
    assert res.alpha == subset_alpha(g) == brute_force_alpha(g)
    assert len(res.witness) == res.alpha
    assert all(not g.has_edge(u, v) for u in res.witness for v in res.witness)
    assert (res.alpha == 1) == (g.m == g.n * (g.n - 1) // 2) or g.n == 0


@pytest.mark.parametrize("seed", range(6))
def test_random_twenty(seed):
    g = random_connected_gnp(20, 0.25, seed)
    assert independence_number(g).alpha == brute_force_alpha(g)


@pytest.mark.parametrize(
    "text, alpha",
    [("hypercube:6", 32), ("path:64", 32), ("cycle:63", 31), ("crown:32", 32), ("cocktail:16", 2),
     ("wheel:32", 15), ("star:40", 40), ("ladder:20", 20)],
)
def test_large_families(text, alpha):
    assert independence_number(fam(text), limit=80).alpha == alpha


def test_limit():
    with pytest.raises(ExactLimitError, match="n ≤ 64"):
        independence_number(fam("path:65"))
    assert independence_number(fam("path:65"), limit=65).alpha == 33


def test_deterministic_witness():
    g = fam("cycle:8")
    assert independence_number(g).witness == independence_number(g).witness

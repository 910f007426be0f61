import math
from fractions import Fraction as F

import pytest

from closeness.asymptotics import (
    asymptotic_run,
    asymptotic_sandwich_ladder,
    asymptotic_sandwich_path,
)
from closeness.graph import distance_matrix
from closeness.metrics import closeness_profile

from conftest import fam


def bfs_closeness(text):
    g = fam(text)
    return closeness_profile(g, distance_matrix(g)).graph_closeness


def test_path_four():
    row = asymptotic_sandwich_path(4)
    assert row.exact == F(5, 8)
    # recomputed from the closed forms
    assert row.lower == pytest.approx(0.510504, abs=1e-6)
    assert row.upper == pytest.approx(0.795867, abs=1e-6)
    assert row.contained


def test_ladder_two():
    row = asymptotic_sandwich_ladder(2)
    assert row.exact == F(3, 4)
    assert row.lower == pytest.approx(0.7312, abs=1e-4)
    assert row.upper == pytest.approx(1.0180, abs=1e-4)
    assert row.contained


def test_path_hundred():
    row = asymptotic_sandwich_path(100)
    assert 100 * row.lower <= 100 * row.exact_float <= 100 * row.upper
    assert 100 * row.upper == pytest.approx(3.1499, abs=1e-4)
    assert abs(100 * row.exact_float - math.pi) <= 10 / 100


@pytest.mark.parametrize("n", [2, 3, 4, 7, 10, 25, 40])
def test_exact_matches_bfs(n):
    assert asymptotic_sandwich_path(n).exact == bfs_closeness(f"path:{n}")
    assert asymptotic_sandwich_ladder(n).exact == bfs_closeness(f"ladder:{n}")


@pytest.mark.parametrize("family", ["path", "ladder"])
def test_containment_dense(family):
    rows = asymptotic_run(family, range(2, 1001))
    assert all(r.contained for r in rows)
    assert all(r.pi_gap <= 10 / r.n for r in rows if r.n >= 100)


@pytest.mark.parametrize("family", ["path", "ladder"])
def test_float_path_agrees_with_exact(family):
    exact, = asymptotic_run(family, [1000])
    approx, = asymptotic_run(family, [1000], exact_limit=0)
    assert approx.exact is None
    assert approx.exact_float == pytest.approx(float(exact.exact), rel=1e-14)


def test_million():
    for family in ("path", "ladder"):
        row, = asymptotic_run(family, [10**6])
        assert row.contained
        assert row.pi_gap <= 1e-5


def test_bad_input():
    with pytest.raises(ValueError):
        asymptotic_sandwich_path(1)
    with pytest.raises(ValueError):
        asymptotic_run("cycle", [4])

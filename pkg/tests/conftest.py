from __future__ import annotations

import pytest
from hypothesis import strategies as st

from closeness.corpus import CorpusSpec
from closeness.generators import FamilySpec, make_family
from closeness.graph import from_edge_list
from closeness.ledger import build_report

ACCEPTANCE_LINES: list[str] = []


def fam(text: str):
    return make_family(FamilySpec.parse(text))


@st.composite
def small_graphs(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return from_edge_list(n, chosen)


@st.composite
def connected_graphs(draw, min_n=2, max_n=8):
    """Random spanning tree plus extra edges, so always connected."""
    n = draw(st.integers(min_n, max_n))
    edges = [(v, draw(st.integers(0, v - 1))) for v in range(1, n)]
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges += draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs)))
    perm = draw(st.permutations(range(n)))
    return from_edge_list(n, [(perm[u], perm[v]) for u, v in edges])


@pytest.fixture(scope="session")
def default_report():
    return build_report(CorpusSpec())


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

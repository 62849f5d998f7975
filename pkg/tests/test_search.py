"""Bounded path, cycle, and block searches."""

from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from hlink.core import SimpleGraph
from hlink.errors import BudgetNonPositive, SearchBudgetExceeded
from hlink.search import (
    SearchBudget,
    block_containing,
    blocks,
    cycles_through,
    path_through,
    paths_between,
    simple_cycles,
)


def _random_graph(n, data):
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = data.draw(st.sets(st.sampled_from(pairs)))
    return SimpleGraph.from_edges(n, sorted(chosen))


# ---------------------------------------------------------------------------
# Paths
# ---------------------------------------------------------------------------


def test_paths_between_k4():
    got = [p.vertices for p in paths_between(SimpleGraph.complete(4), 0, 3)]
    assert got == [(0, 1, 2, 3), (0, 1, 3), (0, 2, 1, 3), (0, 2, 3), (0, 3)]


def test_paths_between_respects_avoid_and_within():
    K4 = SimpleGraph.complete(4)
    assert [p.vertices for p in paths_between(K4, 0, 3, avoid={1})] == [
        (0, 2, 3),
        (0, 3),
    ]
    assert [p.vertices for p in paths_between(K4, 0, 3, within={0, 1, 3})] == [
        (0, 1, 3),
        (0, 3),
    ]


@settings(max_examples=60)
@given(st.integers(2, 6), st.data())
def test_paths_between_matches_oracle(n, data):
    G = _random_graph(n, data)
    s = data.draw(st.integers(0, n - 1))
    t = data.draw(st.integers(0, n - 1).filter(lambda x: x != s))
    got = sorted(p.vertices for p in paths_between(G, s, t))
    want = sorted(oracles.all_simple_paths(G, s, t))
    assert got == want


def test_path_through_examples():
    K4 = SimpleGraph.complete(4)
    assert path_through(K4, (0, 2, 1)).vertices == (0, 2, 1)
    C5 = SimpleGraph.cycle(5)
    assert path_through(C5, (0, 2, 4)).vertices == (0, 1, 2, 3, 4)
    # every leg of (0,2) would have to cross another milestone
    assert path_through(C5, (0, 2, 4, 1)) is None
    assert path_through(K4, (0, 0, 1)) is None


def test_path_through_within():
    G = SimpleGraph.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (1, 5), (5, 3)])
    p = path_through(G, (0, 1, 3), within={0, 1, 3, 5})
    assert p.vertices == (0, 1, 5, 3)


# ---------------------------------------------------------------------------
# Cycles
# ---------------------------------------------------------------------------


def test_simple_cycles_k4():
    got = [c.vertices for c in simple_cycles(SimpleGraph.complete(4))]
    assert got == [
        (0, 1, 2),
        (0, 1, 2, 3),
        (0, 1, 3),
        (0, 1, 3, 2),
        (0, 2, 1, 3),
        (0, 2, 3),
        (1, 2, 3),
    ]


def test_simple_cycles_canonical_form():
    # smallest vertex leads and its smaller neighbour comes second
    for c in simple_cycles(SimpleGraph.complete(5)):
        vs = c.vertices
        assert vs[0] == min(vs)
        assert vs[1] < vs[-1]


def test_cycle_count_on_cycle_graph():
    assert [c.vertices for c in simple_cycles(SimpleGraph.cycle(6))] == [
        (0, 1, 2, 3, 4, 5)
    ]


def test_cycles_through_filters():
    K4 = SimpleGraph.complete(4)
    assert [c.vertices for c in cycles_through(K4, (0, 1))] == [
        (0, 1, 2),
        (0, 1, 2, 3),
        (0, 1, 3),
        (0, 1, 3, 2),
        (0, 2, 1, 3),
    ]
    assert [c.vertices for c in cycles_through(K4, (0,), min_len=4)] == [
        (0, 1, 2, 3),
        (0, 1, 3, 2),
        (0, 2, 1, 3),
    ]
    assert [c.vertices for c in cycles_through(K4, (0, 1), within={0, 1, 2})] == [
        (0, 1, 2)
    ]
    assert list(cycles_through(K4, (0, 1), max_len=3, within={0, 1})) == []


# ---------------------------------------------------------------------------
# Blocks
# ---------------------------------------------------------------------------


def test_blocks_of_two_triangles_and_pendant():
    G = SimpleGraph.from_edges(
        7, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4), (4, 5)]
    )
    got = sorted(sorted(b) for b in blocks(G))
    assert got == [[0, 1, 2], [2, 3, 4], [4, 5], [6]]
    assert block_containing(G, (2, 3)) == frozenset({2, 3, 4})
    assert block_containing(G, (0, 3)) is None


@settings(max_examples=40)
@given(st.integers(2, 7), st.data())
def test_blocks_cover_edges_and_overlap_in_cutpoints(n, data):
    G = _random_graph(n, data)
    bs = blocks(G)
    for u, v in G.edges:
        assert any(u in b and v in b for b in bs)
    for i, a in enumerate(bs):
        for b in bs[i + 1 :]:
            assert len(a & b) <= 1


# ---------------------------------------------------------------------------
# Budgets
# ---------------------------------------------------------------------------


def test_budget_accounting():
    b = SearchBudget(3)
    assert (b.remaining, b.used) == (3, 0)
    b.spend(2)
    assert (b.remaining, b.used) == (1, 2)
    with pytest.raises(SearchBudgetExceeded):
        b.spend(2)
    with pytest.raises(BudgetNonPositive):
        SearchBudget(0)


def test_budget_stops_path_enumeration():
    K7 = SimpleGraph.complete(7)
    with pytest.raises(SearchBudgetExceeded):
        list(paths_between(K7, 0, 6, budget=SearchBudget(5)))

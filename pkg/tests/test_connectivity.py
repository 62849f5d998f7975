"""Connectivity, Menger primitives, duplication, and generators."""

from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

import helpers
import oracles
from hlink.connectivity import (
    disjoint_paths,
    duplicate_vertices,
    fan,
    local_connectivity,
    random_k_connected,
    sharpness_gadget,
    vertex_connectivity,
)
from hlink.core import SimpleGraph
from hlink.errors import (
    AdjacentTerminalsNoCut,
    InsufficientTargets,
    ParameterError,
)

# ---------------------------------------------------------------------------
# vertex_connectivity
# ---------------------------------------------------------------------------


def test_connectivity_landmarks():
    assert vertex_connectivity(SimpleGraph.complete(5)) == 4
    assert vertex_connectivity(helpers.petersen()) == 3
    shared = SimpleGraph.from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
    assert vertex_connectivity(shared) == 1
    assert vertex_connectivity(SimpleGraph.from_edges(3, [(0, 1)])) == 0


@settings(max_examples=50)
@given(st.integers(2, 7), st.data())
def test_connectivity_matches_brute_force(n, data):
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = data.draw(st.sets(st.sampled_from(pairs)))
    G = SimpleGraph.from_edges(n, sorted(chosen))
    assert vertex_connectivity(G) == oracles.brute_vertex_connectivity(G)


# ---------------------------------------------------------------------------
# disjoint_paths
# ---------------------------------------------------------------------------


def test_disjoint_paths_k4():
    r = disjoint_paths(SimpleGraph.complete(4), 0, 1, 3)
    assert r.cut is None
    assert [p.vertices for p in r.paths] == [(0, 1), (0, 2, 1), (0, 3, 1)]


def test_disjoint_paths_cut_cases():
    P3 = SimpleGraph.from_edges(3, [(0, 1), (1, 2)])
    assert disjoint_paths(P3, 0, 2, 2).cut == frozenset({1})
    r = disjoint_paths(helpers.petersen(), 0, 7, 4)
    assert len(r.cut) == 3
    with pytest.raises(AdjacentTerminalsNoCut):
        disjoint_paths(SimpleGraph.complete(3), 0, 1, 5)


def _check_paths(G, s, t, paths):
    interiors = []
    for p in paths:
        assert p.valid_in(G)
        assert {p.first, p.last} == {s, t}
        interiors.append(set(p.interior))
    for i, a in enumerate(interiors):
        assert s not in a and t not in a
        for b in interiors[i + 1 :]:
            assert not a & b


@settings(max_examples=50, deadline=None)
@given(st.integers(3, 8), st.data())
def test_disjoint_paths_strong_duality(n, data):
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = data.draw(st.sets(st.sampled_from(pairs)))
    G = SimpleGraph.from_edges(n, sorted(chosen))
    s = data.draw(st.integers(0, n - 1))
    t = data.draw(st.integers(0, n - 1).filter(lambda x: x != s))
    k = data.draw(st.integers(1, n))
    if G.has_edge(s, t):
        return
    r = disjoint_paths(G, s, t, k)
    cut = oracles.brute_min_vertex_cut(G, s, t)
    if r.paths is not None:
        _check_paths(G, s, t, r.paths)
        assert len(r.paths) == k
        assert len(cut) >= k
    else:
        assert len(r.cut) == len(cut) < k
        assert not oracles.has_path_avoiding(G, s, t, r.cut)


# ---------------------------------------------------------------------------
# fan
# ---------------------------------------------------------------------------


def test_fan_in_k7_with_avoid():
    r = fan(SimpleGraph.complete(7), 0, {1, 2, 3, 4, 5, 6}, 5, avoid={6})
    assert [p.vertices for p in r.paths] == [(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)]


def test_fan_cut_at_star_center():
    star = SimpleGraph.from_edges(6, [(5, i) for i in range(5)])
    r = fan(star, 0, {1, 2, 3, 4}, 2, avoid=set())
    assert r.cut == frozenset({5})


def test_fan_insufficient_targets():
    with pytest.raises(InsufficientTargets):
        fan(SimpleGraph.complete(7), 0, {1, 2}, 3, avoid=set())


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10_000))
def test_fan_succeeds_under_high_connectivity(seed):
    G = random_k_connected(10, 7, seed=seed)
    r = fan(G, 0, {3, 4, 5, 6, 7}, 5, avoid={1, 2})
    assert r.paths is not None
    ends = set()
    seen_interiors = set()
    for p in r.paths:
        assert p.valid_in(G)
        assert p.first == 0
        assert p.last in {3, 4, 5, 6, 7}
        ends.add(p.last)
        inner = set(p.interior)
        assert not inner & {1, 2, 0}
        assert not inner & seen_interiors
        seen_interiors |= inner
    assert len(ends) == 5


# ---------------------------------------------------------------------------
# duplicate_vertices
# ---------------------------------------------------------------------------


def test_duplicate_triangle_vertex():
    D, groups = duplicate_vertices(SimpleGraph.cycle(3), {0: 2})
    assert D.n == 4
    assert D.edges == ((0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
    assert groups == {0: (0, 1), 1: (2,), 2: (3,)}


def test_duplicate_nothing_is_identity():
    G = SimpleGraph.complete(4)
    D, groups = duplicate_vertices(G, {})
    assert D == G
    assert groups == {v: (v,) for v in range(4)}


def test_copies_inherit_cross_adjacency():
    # copies of distinct originals stay adjacent iff the originals were
    G = SimpleGraph.from_edges(3, [(0, 1)])
    D, groups = duplicate_vertices(G, {0: 2, 1: 2, 2: 2})
    a_copies, b_copies, c_copies = groups[0], groups[1], groups[2]
    for a in a_copies:
        for b in b_copies:
            assert D.has_edge(a, b)
        for c in c_copies:
            assert not D.has_edge(a, c)
    for g in (a_copies, b_copies, c_copies):
        for x in g:
            for y in g:
                assert x == y or not D.has_edge(x, y)


# ---------------------------------------------------------------------------
# sharpness_gadget
# ---------------------------------------------------------------------------


def test_gadget_structure_and_kappa():
    G, phi = sharpness_gadget(1, 1, 1, 2)
    assert (G.n, vertex_connectivity(G)) == (8, 2)
    assert tuple(phi) == (2, 4, 6)
    G2, _ = sharpness_gadget(2, 1, 1, 4)
    assert (G2.n, vertex_connectivity(G2)) == (15, 3)
    G3, phi3 = sharpness_gadget(1, 1, 0, 1)
    assert (G3.n, vertex_connectivity(G3)) == (4, 1)
    assert tuple(phi3) == (1, 2, 3)
    with pytest.raises(ParameterError):
        sharpness_gadget(0, 1, 1, 2)
    with pytest.raises(ParameterError):
        sharpness_gadget(1, 1, 1, 0)


def test_gadget_default_m_is_k():
    G, _ = sharpness_gadget(2, 2, 1)
    # clique of size k-1 = 4 plus three 5-cliques
    assert G.n == 4 + 3 * 5


@given(st.integers(1, 3), st.integers(1, 3), st.integers(0, 2), st.integers(1, 3))
def test_gadget_kappa_always_k_minus_one(k1, k2, k3, m):
    if k1 + k2 + k3 < 2:
        return
    G, phi = sharpness_gadget(k1, k2, k3, m)
    assert vertex_connectivity(G) == k1 + k2 + k3 - 1
    assert len(set(phi)) == 3


# ---------------------------------------------------------------------------
# random_k_connected
# ---------------------------------------------------------------------------


def test_forced_complete_graph():
    assert random_k_connected(9, 8, seed=3) == SimpleGraph.complete(9)


def test_generator_reproducible_and_verified():
    a = random_k_connected(12, 7, seed=1)
    b = random_k_connected(12, 7, seed=1)
    assert a == b
    assert vertex_connectivity(a) >= 7
    assert vertex_connectivity(random_k_connected(5, 2, seed=7)) >= 2


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10_000))
def test_generator_meets_connectivity_floor(seed):
    G = random_k_connected(8, 4, seed=seed)
    assert vertex_connectivity(G) >= 4

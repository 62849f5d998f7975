"""Disjoint good paths and their dual obstruction certificates."""

from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from hlink.connectivity import duplicate_vertices
from hlink.core import SimpleGraph
from hlink.errors import MalformedCertificate, ParameterError
from hlink.mader import (
    GroupedTerminals,
    MaderCertificate,
    dichotomy_check,
    find_certificate,
    max_good_paths,
    verify_certificate,
)
from hlink.search import SearchBudget


def _star():
    return SimpleGraph.from_edges(4, [(3, 0), (3, 1), (3, 2)])


STAR_GROUPS = GroupedTerminals.of([0], [1], [2])


# ---------------------------------------------------------------------------
# GroupedTerminals
# ---------------------------------------------------------------------------


def test_groups_need_two():
    with pytest.raises(ParameterError):
        GroupedTerminals.of([0])
    g = GroupedTerminals.of([0, 1], [1, 2])
    assert g.union == frozenset({0, 1, 2})
    assert g.memberships(1) == (0, 1)


# ---------------------------------------------------------------------------
# max_good_paths
# ---------------------------------------------------------------------------


def test_single_path_host():
    P3 = SimpleGraph.from_edges(3, [(0, 1), (1, 2)])
    r = max_good_paths(P3, GroupedTerminals.of([0], [2]), budget=None)
    assert r.count == 1
    assert [p.vertices for p in r.paths] == [(0, 1, 2)]
    assert r.complete


def test_star_center_throttles_to_one():
    r = max_good_paths(_star(), STAR_GROUPS, budget=None)
    assert r.count == 1
    assert r.complete


def test_duplicated_k4_matches_triangle_answer():
    D, groups = duplicate_vertices(SimpleGraph.complete(4), {0: 2, 1: 2, 2: 2})
    gl = GroupedTerminals.of(groups[0], groups[1], groups[2])
    assert max_good_paths(D, gl, budget=None).count == 3


def test_two_group_vertex_is_a_trivial_good_path():
    lone = SimpleGraph.from_edges(1, [])
    r = max_good_paths(lone, GroupedTerminals.of([0], [0]), budget=None)
    assert r.count == 1
    assert r.paths[0].vertices == (0,)


def test_budget_marks_incomplete():
    K6 = SimpleGraph.complete(6)
    g = GroupedTerminals.of([0, 1], [2, 3], [4, 5])
    r = max_good_paths(K6, g, budget=SearchBudget(3))
    assert not r.complete


def test_target_early_stop_still_reports_reached_count():
    K6 = SimpleGraph.complete(6)
    g = GroupedTerminals.of([0, 1], [2, 3], [4, 5])
    r = max_good_paths(K6, g, budget=None, target=2)
    assert r.count >= 2


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 6), st.data())
def test_count_matches_brute_force(n, data):
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = data.draw(st.sets(st.sampled_from(pairs)))
    G = SimpleGraph.from_edges(n, sorted(chosen))
    t = data.draw(st.integers(2, 3))
    raw = [
        data.draw(st.sets(st.integers(0, n - 1), min_size=1, max_size=2))
        for _ in range(t)
    ]
    g = GroupedTerminals.of(*raw)
    got = max_good_paths(G, g, budget=None)
    assert got.complete
    assert got.count == oracles.brute_max_disjoint_good_paths(G, [set(x) for x in raw])
    seen: set[int] = set()
    for p in got.paths:
        assert not seen & set(p.vertices)
        seen |= set(p.vertices)


# ---------------------------------------------------------------------------
# verify_certificate
# ---------------------------------------------------------------------------


def test_star_certificate():
    cert = MaderCertificate.make(W=[3], Ys=[], Xs=[], k=2)
    assert cert.value == 1
    assert verify_certificate(_star(), STAR_GROUPS, cert)
    too_low = MaderCertificate.make(W=[3], Ys=[], Xs=[], k=1)
    assert not verify_certificate(_star(), STAR_GROUPS, too_low)


def test_triangle_half_interface_certificate():
    tri = SimpleGraph.cycle(3)
    g = GroupedTerminals.of([0], [1])
    cert = MaderCertificate.make(W=[], Ys=[[0, 1, 2]], Xs=[[0, 1]], k=2)
    assert cert.value == 1
    assert verify_certificate(tri, g, cert)


def test_condition_b_rejects_outside_neighbor():
    tri = SimpleGraph.cycle(3)
    g = GroupedTerminals.of([0], [1])
    # vertex 1 sits in Y - X but sees vertex 2 outside W u Y
    cert = MaderCertificate.make(W=[], Ys=[[0, 1]], Xs=[[0]], k=5)
    assert not verify_certificate(tri, g, cert)


def test_malformed_certificates():
    tri = SimpleGraph.cycle(3)
    g = GroupedTerminals.of([0], [1])
    with pytest.raises(MalformedCertificate):
        verify_certificate(tri, g, MaderCertificate.make([9], [], [], 1))
    with pytest.raises(MalformedCertificate):
        verify_certificate(tri, g, MaderCertificate.make([0], [[0, 1]], [[0]], 2))
    with pytest.raises(MalformedCertificate):
        verify_certificate(
            tri, g, MaderCertificate(frozenset(), (frozenset({0, 1}),), (frozenset({2}),), 2)
        )


def test_make_canonicalizes_and_round_trips():
    cert = MaderCertificate.make(W=[2], Ys=[[], [0, 1]], Xs=[[], [0]], k=3)
    assert cert.Ys == (frozenset({0, 1}),)
    assert cert.Xs == (frozenset({0}),)
    again = MaderCertificate.from_json(cert.to_json())
    assert again == cert
    with pytest.raises(MalformedCertificate):
        MaderCertificate.from_json({"W": []})


# ---------------------------------------------------------------------------
# find_certificate and the dichotomy
# ---------------------------------------------------------------------------


def test_find_certificate_on_star():
    search = find_certificate(_star(), STAR_GROUPS, 2, budget=None)
    assert search.complete
    cert = search.certificate
    assert cert is not None
    assert verify_certificate(_star(), STAR_GROUPS, cert)


def test_no_certificate_when_paths_exist():
    P3 = SimpleGraph.from_edges(3, [(0, 1), (1, 2)])
    search = find_certificate(P3, GroupedTerminals.of([0], [2]), 1, budget=None)
    assert search.complete
    assert search.certificate is None


def test_no_certificate_for_k_zero():
    search = find_certificate(SimpleGraph.complete(4), GroupedTerminals.of([0], [1]), 0, budget=None)
    assert search.certificate is None


def test_dichotomy_examples():
    assert dichotomy_check(_star(), STAR_GROUPS, 2)
    P3 = SimpleGraph.from_edges(3, [(0, 1), (1, 2)])
    assert dichotomy_check(P3, GroupedTerminals.of([0], [2]), 1)
    assert dichotomy_check(SimpleGraph.complete(2), GroupedTerminals.of([0], [1]), 1)


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 5), st.data())
def test_dichotomy_holds_on_random_instances(n, data):
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = data.draw(st.sets(st.sampled_from(pairs)))
    G = SimpleGraph.from_edges(n, sorted(chosen))
    raw = [
        data.draw(st.sets(st.integers(0, n - 1), min_size=1, max_size=2))
        for _ in range(data.draw(st.integers(2, 3)))
    ]
    k = data.draw(st.integers(1, 3))
    assert dichotomy_check(G, GroupedTerminals.of(*raw), k)


# ---------------------------------------------------------------------------
# Duality properties
# ---------------------------------------------------------------------------


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 5), st.data())
def test_weak_duality_and_monotonicity(n, data):
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = data.draw(st.sets(st.sampled_from(pairs)))
    G = SimpleGraph.from_edges(n, sorted(chosen))
    raw = [
        data.draw(st.sets(st.integers(0, n - 1), min_size=1, max_size=2))
        for _ in range(2)
    ]
    g = GroupedTerminals.of(*raw)
    k = data.draw(st.integers(1, 3))
    search = find_certificate(G, g, k, budget=None)
    if search.certificate is None:
        return
    cert = search.certificate
    assert verify_certificate(G, g, cert)
    assert max_good_paths(G, g, budget=None).count < k
    bumped = MaderCertificate(cert.W, cert.Ys, cert.Xs, cert.k + 1)
    assert verify_certificate(G, g, bumped)

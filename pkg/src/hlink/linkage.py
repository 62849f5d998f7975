"""Exact subdivision search at a placement, and full linkage decisions.

The router treats one pattern edge at a time, most constrained first:
edges are ordered by descending endpoint degrees in the pattern (ties
by placed ids), which for the kite leaves the pendant edge last.  For
parallel pattern edges the route sequences are forced to be strictly
lexicographically increasing, which both removes the factorial
symmetry and guarantees distinct routes.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import permutations

from . import mader
from .connectivity import duplicate_vertices
from .core import (
    PathSeq,
    PatternMultigraph,
    Placement,
    SimpleGraph,
    Subdivision,
    check_placement,
    fat_triangle,
    kite,
    subdivision_violation,
)
from .errors import (
    BudgetNonPositive,
    DegenerateParameters,
    ParameterError,
)
from .search import SearchBudget

LINKED = "linked"
NOT_LINKED = "not-linked"
EXHAUSTED = "exhausted"


@dataclass(frozen=True)
class LinkageResult:
    status: str
    subdivision: Subdivision | None
    nodes_explored: int
    complete: bool

    def to_json(self) -> dict:
        out: dict = {
            "status": self.status,
            "nodes_explored": self.nodes_explored,
            "complete": self.complete,
        }
        if self.subdivision is not None:
            out["placement"] = list(self.subdivision.placement)
            out["routes"] = [list(r.vertices) for r in self.subdivision.routes]
        return out


class _Out(Exception):
    pass


def _edge_order(H: PatternMultigraph, images: tuple[int, ...]) -> list[int]:
    def key(i: int):
        u, v = H.edges[i]
        du, dv = H.degree(u), H.degree(v)
        lo, hi = min(du, dv), max(du, dv)
        a, b = sorted((images[u], images[v]))
        return (-lo, -hi, a, b, i)

    return sorted(range(len(H.edges)), key=key)


def find_subdivision(
    G: SimpleGraph,
    H: PatternMultigraph,
    phi: Placement,
    budget: int | None = None,
) -> LinkageResult:
    """Search for an H-subdivision extending phi.

    Linked comes with a validated witness; NotLinked only after the
    whole route space was exhausted; Exhausted when the node budget ran
    out first.  Deterministic: neighbours are explored in ascending id
    order.
    """
    check_placement(H, G, phi)
    if budget is not None and budget <= 0:
        raise BudgetNonPositive(f"budget must be positive, got {budget}")
    images = tuple(phi)
    placed = frozenset(images)
    order = _edge_order(H, images)
    endpoints = []
    for i in order:
        u, v = H.edges[i]
        a, b = sorted((images[u], images[v]))
        endpoints.append((a, b))

    routes: list[tuple[int, ...] | None] = [None] * len(order)
    interiors: set[int] = set()
    nodes = 0

    def spend() -> None:
        nonlocal nodes
        nodes += 1
        if budget is not None and nodes > budget:
            raise _Out

    def route_edge(pos: int) -> bool:
        if pos == len(order):
            return True
        a, b = endpoints[pos]
        prev = routes[pos - 1] if pos > 0 and endpoints[pos - 1] == (a, b) else None

        path = [a]
        on = {a}

        def extend(tied: bool) -> bool:
            spend()
            x = path[-1]
            depth = len(path)
            for y in G.neighbors(x):
                if tied and prev is not None:
                    if depth < len(prev):
                        ref = prev[depth]
                        if y < ref:
                            continue
                        still = y == ref
                    else:
                        still = False
                else:
                    still = False
                if y == b:
                    if still:
                        # candidate would equal prev or a proper prefix of it,
                        # so it is not strictly greater
                        continue
                    cand = tuple(path) + (b,)
                    routes[pos] = cand
                    interiors.update(cand[1:-1])
                    if route_edge(pos + 1):
                        return True
                    interiors.difference_update(cand[1:-1])
                    routes[pos] = None
                    continue
                if y in on or y in placed or y in interiors:
                    continue
                path.append(y)
                on.add(y)
                if extend(still):
                    return True
                path.pop()
                on.remove(y)
            return False

        return extend(prev is not None)

    try:
        found = route_edge(0)
    except _Out:
        return LinkageResult(EXHAUSTED, None, nodes, complete=False)

    if not found:
        return LinkageResult(NOT_LINKED, None, nodes, complete=True)
    final: list[PathSeq | None] = [None] * len(H.edges)
    for pos, i in enumerate(order):
        final[i] = PathSeq(routes[pos])
    sub = Subdivision(placement=phi, routes=tuple(final))
    reason = subdivision_violation(G, H, sub)
    if reason is not None:
        raise AssertionError(f"internal: produced invalid witness ({reason})")
    return LinkageResult(LINKED, sub, nodes, complete=True)


# ---------------------------------------------------------------------------
# Whole-graph linkage decision
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LinkageSurvey:
    """Aggregate verdict over placements; linked=None means inconclusive."""

    linked: bool | None
    complete: bool
    placements_checked: int
    nodes_total: int
    counterexample: Placement | None
    exhausted_placements: int

    def to_json(self) -> dict:
        return {
            "linked": self.linked,
            "complete": self.complete,
            "placements_checked": self.placements_checked,
            "nodes_total": self.nodes_total,
            "counterexample": (
                None if self.counterexample is None else list(self.counterexample)
            ),
            "exhausted_placements": self.exhausted_placements,
        }


def _canonical_placement(H: PatternMultigraph, images: tuple[int, ...]) -> tuple[int, ...]:
    return min(
        tuple(images[pi[j]] for j in range(H.m)) for pi in H.automorphisms()
    )


def placements_to_check(
    G: SimpleGraph,
    H: PatternMultigraph,
    mode: str = "all",
    count: int = 30,
    seed: int = 0,
) -> list[Placement]:
    """Placements to test, quotiented by the pattern's automorphisms."""
    if H.m > G.n:
        raise ParameterError(f"pattern has {H.m} vertices, host only {G.n}")
    out: list[Placement] = []
    if mode == "all":
        for images in permutations(range(G.n), H.m):
            if images == _canonical_placement(H, images):
                out.append(Placement(images))
        return out
    if mode == "sample":
        rng = random.Random(seed)
        seen: set[tuple[int, ...]] = set()
        for _ in range(count):
            images = tuple(rng.sample(range(G.n), H.m))
            canon = _canonical_placement(H, images)
            if canon not in seen:
                seen.add(canon)
                out.append(Placement(canon))
        return out
    raise ParameterError(f"unknown mode {mode!r}")


def is_H_linked(
    G: SimpleGraph,
    H: PatternMultigraph,
    mode: str = "all",
    count: int = 30,
    seed: int = 0,
    budget: int | None = None,
) -> LinkageSurvey:
    """Decide (or sample) whether every placement of H extends.

    Exhaustive mode quotients placements by pattern automorphisms; a
    single NotLinked placement settles the verdict.  Any Exhausted
    placement without a NotLinked one leaves the verdict None.
    """
    todo = placements_to_check(G, H, mode, count, seed)
    nodes = 0
    exhausted = 0
    checked = 0
    for phi in todo:
        res = find_subdivision(G, H, phi, budget)
        checked += 1
        nodes += res.nodes_explored
        if res.status == NOT_LINKED:
            return LinkageSurvey(False, True, checked, nodes, phi, exhausted)
        if res.status == EXHAUSTED:
            exhausted += 1
    if exhausted:
        return LinkageSurvey(None, False, checked, nodes, None, exhausted)
    if mode == "all":
        return LinkageSurvey(True, True, checked, nodes, None, 0)
    # sampling cannot certify the universal claim, only falsify it
    return LinkageSurvey(None, False, checked, nodes, None, 0)


# ---------------------------------------------------------------------------
# Fat-triangle specialization
# ---------------------------------------------------------------------------


def find_fat_triangle_linkage(
    G: SimpleGraph,
    v1: int,
    v2: int,
    v3: int,
    k1: int,
    k2: int,
    k3: int,
    budget: int | None = None,
) -> LinkageResult:
    """Route k_i internally disjoint paths along each triangle side.

    Strategy: replace each corner by as many copies as paths must end
    there (side sums k1+k3, k1+k2, k2+k3), find k = k1+k2+k3 disjoint
    paths between distinct copy classes, and read them back as the
    triangle routes; any k-system uses every copy as an end, which
    forces the per-side counts.  Falls back to the generic router when
    the copy search is inconclusive or the read-back collides on a
    direct edge.
    """
    if k1 < 0 or k2 < 0 or k3 < 0:
        raise ParameterError("side multiplicities must be >= 0")
    if k1 == 0 and k2 == 0 and k3 == 0:
        raise DegenerateParameters("all three side multiplicities are zero")
    if len({v1, v2, v3}) != 3:
        raise ParameterError("corner vertices must be distinct")
    H = fat_triangle(k1, k2, k3)
    phi = Placement((v1, v2, v3))
    check_placement(H, G, phi)
    if budget is not None and budget <= 0:
        raise BudgetNonPositive(f"budget must be positive, got {budget}")

    k = k1 + k2 + k3
    corner = (v1, v2, v3)
    want = (k1 + k3, k1 + k2, k2 + k3)
    keep = [v for v in G.vertices() if v != corner[want.index(0)]] if 0 in want else None
    if keep is None:
        G2, to_new, to_old = G, {v: v for v in G.vertices()}, tuple(G.vertices())
    else:
        G2, to_new, to_old = G.induced(keep)

    counts = {
        to_new[c]: w for c, w in zip(corner, want) if w > 0 and c in to_new
    }
    dup, copy_groups = duplicate_vertices(G2, counts)
    classes = []
    for c, w in zip(corner, want):
        if w > 0:
            classes.append(frozenset(copy_groups[to_new[c]]))
        else:
            classes.append(frozenset())
    groups = mader.GroupedTerminals(tuple(classes))

    # The copy search is a shortcut, not the decider: give it a slice of
    # the budget so a wandering path search cannot starve the fallback.
    slice_cap = 100_000 if budget is None else max(1, budget // 100)
    sb = SearchBudget(slice_cap)
    found = mader.max_good_paths(dup, groups, budget=sb, target=k)
    used_nodes = sb.used

    if found.count < k and found.complete:
        return LinkageResult(NOT_LINKED, None, used_nodes, complete=True)

    if found.count >= k:
        sub = _translate_copy_paths(
            G, H, phi, found.paths, copy_groups, to_old, corner, (k1, k2, k3)
        )
        if sub is not None:
            return LinkageResult(LINKED, sub, used_nodes, complete=True)

    remaining = None if budget is None else budget - used_nodes
    if remaining is not None and remaining <= 0:
        return LinkageResult(EXHAUSTED, None, used_nodes, complete=False)
    res = find_subdivision(G, H, phi, remaining)
    return LinkageResult(
        res.status, res.subdivision, res.nodes_explored + used_nodes, res.complete
    )


def _translate_copy_paths(
    G, H, phi, paths, copy_groups, to_old, corner, ks
) -> Subdivision | None:
    """Map copy-class paths back to host routes; None if they collide."""
    owner: dict[int, int] = {}
    for orig, copies in copy_groups.items():
        for c in copies:
            owner[c] = orig
    corner_new = {}
    for i, c in enumerate(corner):
        for orig, copies in copy_groups.items():
            if to_old[orig] == c:
                corner_new[i] = set(copies)
    sides: dict[tuple[int, int], list[tuple[int, ...]]] = {
        (0, 1): [],
        (0, 2): [],
        (1, 2): [],
    }
    for p in paths:
        verts = p.vertices
        ends = []
        inner = []
        for idx, x in enumerate(verts):
            ci = next(
                (i for i, copies in corner_new.items() if x in copies), None
            )
            if ci is not None:
                ends.append((idx, ci))
            else:
                inner.append(x)
        if len(ends) != 2 or {ends[0][0], ends[1][0]} != {0, len(verts) - 1}:
            return None  # a copy sits in an interior; read-back unsound
        (ia, ca), (ib, cb) = ends
        if ia != 0:
            (ia, ca), (ib, cb) = (ib, cb), (ia, ca)
        host = [corner[ca]] + [to_old[owner[x]] for x in verts[1:-1]] + [corner[cb]]
        key = (min(ca, cb), max(ca, cb))
        if key not in sides:
            return None
        sides[key].append(tuple(host))
    k1, k2, k3 = ks
    if (
        len(sides[(0, 1)]) != k1
        or len(sides[(1, 2)]) != k2
        or len(sides[(0, 2)]) != k3
    ):
        return None
    routes: list[PathSeq] = []
    for u, v in H.edges:
        pool = sides[(u, v)]
        raw = pool.pop(0)
        a = phi[u]
        if raw[0] != a:
            raw = raw[::-1]
        routes.append(PathSeq(raw))
    sub = Subdivision(placement=phi, routes=tuple(routes))
    if subdivision_violation(G, H, sub) is not None:
        return None
    return sub


def find_kite_linkage(
    G: SimpleGraph, u2: int, u1: int, u3: int, u4: int, budget: int | None = None
) -> LinkageResult:
    """Kite subdivision centred at u2: triangle u2,u1,u3 plus a pendant
    route to u4, all internally disjoint; equivalent to a closed walk
    through u2, u1, u3, u2, u4 in order."""
    if len({u1, u2, u3, u4}) != 4:
        raise ParameterError("the four anchor vertices must be distinct")
    return find_subdivision(G, kite(), Placement((u2, u1, u3, u4)), budget)

"""Flowers: three anchored cycles tied into a fourth vertex by disjoint paths.

A flower for an anchor tuple (u1, u2, u3, u4) consists of cycles C1, C2
meeting exactly in u2 with u1 on C1 and u3 on C2, a third cycle C3
through u4 disjoint from both, and three pairwise disjoint paths P1, P2,
P3 from u1, u2, u3 to attachment vertices v1, v2, v3 on C3 such that
v1, v2, v3, u4 appear on C3 in this cyclic order.  The paths meet the
cycles only at their endpoints.

The module verifies flowers, searches for them, resolves a seven-path
system plus a five-fan into either a flower or a kite subdivision, and
selects extremal flowers minimising path mass and maximising the block
structure of the complement.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Callable, Iterator

from .connectivity import disjoint_paths, vertex_connectivity
from .core import (
    OrientedCycle,
    PathSeq,
    Placement,
    SimpleGraph,
    Subdivision,
    cycle_order_matches,
    interval,
    join_paths,
    kite,
    subdivision_violation,
)
from .errors import (
    AdjacentTerminalsNoCut,
    CaseAnalysisIncomplete,
    HlinkError,
    NoFlower,
    PreconditionViolated,
)
from .linkage import LINKED, find_subdivision
from .search import SearchBudget, blocks, cycles_through


# ---------------------------------------------------------------------------
# The structure and its verifier
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Flower:
    """A flower; `anchors` lists (u1, u2, u3, u4)."""

    anchors: tuple[int, int, int, int]
    c1: OrientedCycle
    c2: OrientedCycle
    c3: OrientedCycle
    p1: PathSeq
    p2: PathSeq
    p3: PathSeq

    @property
    def cycles(self) -> tuple[OrientedCycle, OrientedCycle, OrientedCycle]:
        return (self.c1, self.c2, self.c3)

    @property
    def paths(self) -> tuple[PathSeq, PathSeq, PathSeq]:
        return (self.p1, self.p2, self.p3)

    @property
    def attachments(self) -> tuple[int, int, int]:
        """(v1, v2, v3): where the paths land on C3."""
        return (self.p1.last, self.p2.last, self.p3.last)

    @property
    def vertex_set(self) -> frozenset[int]:
        out: frozenset[int] = frozenset()
        for piece in self.cycles + self.paths:
            out |= piece.vertex_set
        return out

    def to_json(self) -> dict:
        return {
            "anchors": list(self.anchors),
            "cycles": [list(c.vertices) for c in self.cycles],
            "paths": [list(p.vertices) for p in self.paths],
        }

    @classmethod
    def from_json(cls, data: dict) -> Flower:
        cycles = [OrientedCycle(tuple(c)) for c in data["cycles"]]
        paths = [PathSeq(tuple(p)) for p in data["paths"]]
        return cls(tuple(data["anchors"]), *cycles, *paths)


def flower_violation(G: SimpleGraph, F: Flower) -> str | None:
    """First broken flower invariant, or None if F is a flower of G."""
    u1, u2, u3, u4 = F.anchors
    if len({u1, u2, u3, u4}) != 4:
        return "anchors are not distinct"
    for idx, c in enumerate(F.cycles, 1):
        if not c.valid_in(G):
            return f"C{idx} is not a cycle of the host"
    for idx, p in enumerate(F.paths, 1):
        if p.is_empty or not p.valid_in(G):
            return f"P{idx} is not a path of the host"
    if u1 not in F.c1.vertex_set:
        return "u1 misses C1"
    if u3 not in F.c2.vertex_set:
        return "u3 misses C2"
    if F.c1.vertex_set & F.c2.vertex_set != {u2}:
        return "C1 and C2 must meet exactly in u2"
    if F.c3.vertex_set & (F.c1.vertex_set | F.c2.vertex_set):
        return "C3 meets C1 or C2"
    if u4 not in F.c3.vertex_set:
        return "u4 misses C3"
    shell = F.c1.vertex_set | F.c2.vertex_set | F.c3.vertex_set
    for idx, (p, u) in enumerate(zip(F.paths, (u1, u2, u3)), 1):
        if p.first != u:
            return f"P{idx} does not start at u{idx}"
        if p.last not in F.c3.vertex_set:
            return f"P{idx} does not end on C3"
        if set(p.interior) & shell:
            return f"P{idx} interior touches a cycle"
    for a, b in itertools.combinations((1, 2, 3), 2):
        if F.paths[a - 1].vertex_set & F.paths[b - 1].vertex_set:
            return f"P{a} and P{b} share a vertex"
    v1, v2, v3 = F.attachments
    if len({v1, v2, v3, u4}) != 4:
        return "attachment vertices collide"
    if not cycle_order_matches(F.c3, (v1, v2, v3, u4)):
        return "v1, v2, v3, u4 are out of cyclic order on C3"
    return None


def verify_flower(G: SimpleGraph, F: Flower) -> bool:
    return flower_violation(G, F) is None


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------


def _check_anchors(G: SimpleGraph, anchors: tuple[int, ...]) -> None:
    if len(set(anchors)) != len(anchors):
        raise PreconditionViolated(f"anchors must be distinct: {anchors}")
    for v in anchors:
        if not 0 <= v < G.n:
            raise PreconditionViolated(f"anchor {v} outside 0..{G.n - 1}")


def _paths_bounded(
    G: SimpleGraph,
    s: int,
    t: int,
    allowed: frozenset[int],
    max_inner: int,
    budget: SearchBudget | None,
) -> Iterator[PathSeq]:
    """Simple s-t paths whose interiors draw at most max_inner vertices
    from `allowed`; s and t themselves stay outside the pool."""
    path = [s]
    on = {s}

    def rec() -> Iterator[PathSeq]:
        if budget is not None:
            budget.spend()
        for y in G.neighbors(path[-1]):
            if y == t:
                yield PathSeq(tuple(path) + (t,))
                continue
            if y in on or y not in allowed or len(path) > max_inner:
                continue
            path.append(y)
            on.add(y)
            yield from rec()
            path.pop()
            on.remove(y)

    yield from rec()


def _path_triples(
    G: SimpleGraph,
    starts: tuple[int, int, int],
    targets: tuple[int, int, int],
    pool: frozenset[int],
    budget: SearchBudget | None,
) -> Iterator[tuple[PathSeq, PathSeq, PathSeq]]:
    """All triples of interior-disjoint paths starts[i] -> targets[i] with
    interiors inside `pool`.  The all-edges triple, when present, comes
    first."""
    direct = all(G.has_edge(s, t) for s, t in zip(starts, targets))
    if direct:
        yield tuple(PathSeq((s, t)) for s, t in zip(starts, targets))

    def rec(idx: int, used: frozenset[int]) -> Iterator[tuple[PathSeq, ...]]:
        if idx == 3:
            yield ()
            return
        s, t = starts[idx], targets[idx]
        for p in _paths_bounded(G, s, t, pool - used, len(pool), budget):
            for rest in rec(idx + 1, used | set(p.interior)):
                yield (p,) + rest

    for triple in rec(0, frozenset()):
        if direct and all(len(p.vertices) == 2 for p in triple):
            continue
        yield triple


def _flowers(
    G: SimpleGraph,
    u1: int,
    u2: int,
    u3: int,
    u4: int,
    budget: SearchBudget | None,
    pair_ok: Callable[[int], bool] | None = None,
) -> Iterator[Flower]:
    """All flowers anchored at (u1, u2, u3, u4), cycles in ascending size.

    `pair_ok` sees |V(C1) ∪ V(C2)| once both small cycles are fixed and
    may veto the pair before any path search.
    """
    verts = frozenset(G.vertices())
    pool3 = verts - {u1, u2, u3}
    for size3 in range(4, G.n - 4):
        for c3 in cycles_through(
            G, (u4,), within=pool3, min_len=size3, max_len=size3, budget=budget
        ):
            rest1 = verts - c3.vertex_set - {u3}
            for size1 in range(3, len(rest1) + 1):
                for c1 in cycles_through(
                    G, (u1, u2), within=rest1, min_len=size1, max_len=size1, budget=budget
                ):
                    rest2 = verts - c3.vertex_set - (c1.vertex_set - {u2})
                    for size2 in range(3, len(rest2) + 1):
                        for c2 in cycles_through(
                            G,
                            (u3, u2),
                            within=rest2,
                            min_len=size2,
                            max_len=size2,
                            budget=budget,
                        ):
                            t_union = size1 + size2 - 1
                            if pair_ok is not None and not pair_ok(t_union):
                                continue
                            pool = (
                                verts
                                - c3.vertex_set
                                - c1.vertex_set
                                - c2.vertex_set
                            )
                            marks = [v for v in c3.vertices if v != u4]
                            for v1, v2, v3 in itertools.permutations(marks, 3):
                                if not cycle_order_matches(c3, (v1, v2, v3, u4)):
                                    continue
                                for p1, p2, p3 in _path_triples(
                                    G, (u1, u2, u3), (v1, v2, v3), pool, budget
                                ):
                                    yield Flower(
                                        (u1, u2, u3, u4), c1, c2, c3, p1, p2, p3
                                    )


def find_flower(
    G: SimpleGraph,
    u1: int,
    u2: int,
    u3: int,
    u4: int,
    budget: int | None = None,
) -> Flower | None:
    """First flower anchored at (u1, u2, u3, u4), or None if there is none.

    A flower occupies at least nine vertices (five on C1 ∪ C2, four on
    C3), so smaller hosts are rejected by counting alone.
    """
    _check_anchors(G, (u1, u2, u3, u4))
    if G.n < 9:
        return None
    bud = SearchBudget(budget) if budget is not None else None
    for F in _flowers(G, u1, u2, u3, u4, bud):
        return F
    return None


# ---------------------------------------------------------------------------
# Flower or kite
# ---------------------------------------------------------------------------


def _from(p: PathSeq, start: int) -> PathSeq:
    return p if p.first == start else p.reverse()


def _pick(candidates: tuple[int, ...], skip: int | None) -> int:
    return next(c for c in candidates if c != skip)


def _normalized_q_system(
    G: SimpleGraph,
    u1: int,
    u2: int,
    u3: int,
    u4: int,
    Q: tuple[PathSeq, ...],
) -> tuple[PathSeq, ...]:
    """Validate the seven-path system and orient each path canonically:
    the u1u3 path and the u1u2 paths from u1, the u2u3 paths from u2."""
    if len(Q) != 7:
        raise PreconditionViolated(f"need 7 paths, got {len(Q)}")
    want_ends = ({u1, u3},) + ({u1, u2},) * 3 + ({u2, u3},) * 3
    anchors = {u1, u2, u3}
    seen_inner: set[int] = set()
    seen_routes: set[tuple[int, ...]] = set()
    out = []
    for idx, (p, ends) in enumerate(zip(Q, want_ends)):
        if p.is_empty or not p.valid_in(G):
            raise PreconditionViolated(f"Q[{idx}] is not a path of the host")
        if p.ends != ends:
            raise PreconditionViolated(f"Q[{idx}] must join {sorted(ends)}")
        if u4 in p.vertex_set:
            raise PreconditionViolated(f"Q[{idx}] passes through u4")
        inner = set(p.interior)
        if inner & anchors:
            raise PreconditionViolated(f"Q[{idx}] interior touches an anchor")
        if inner & seen_inner:
            raise PreconditionViolated(f"Q[{idx}] interior meets another path")
        seen_inner |= inner
        start = u1 if u1 in ends else u2
        oriented = _from(p, start)
        if oriented.vertices in seen_routes:
            raise PreconditionViolated(f"Q[{idx}] duplicates another path")
        seen_routes.add(oriented.vertices)
        out.append(oriented)
    return tuple(out)


def _five_fan(G: SimpleGraph, u2: int, u4: int, u1: int, u3: int) -> tuple[PathSeq, ...]:
    """Five internally disjoint u4-u2 paths avoiding u1 and u3, each
    oriented from u4."""
    keep = [v for v in G.vertices() if v not in (u1, u3)]
    sub, old2new, new2old = G.induced(keep)
    try:
        res = disjoint_paths(sub, old2new[u4], old2new[u2], 5)
    except AdjacentTerminalsNoCut:
        res = None
    if res is None or res.paths is None:
        raise PreconditionViolated(
            "fewer than 5 internally disjoint u4-u2 paths avoid u1 and u3"
        )
    fans = []
    for p in res.paths:
        verts = tuple(new2old[v] for v in p.vertices)
        fans.append(PathSeq(verts if verts[0] == u4 else verts[::-1]))
    return tuple(fans)


def _owner(qs: tuple[PathSeq, ...], v: int, u2: int) -> int | None:
    """Index of the system path whose interior holds v; None when v == u2."""
    if v == u2:
        return None
    return next(i for i in range(1, 7) if v in qs[i].interior)


def _try_routes(
    G: SimpleGraph,
    u2: int,
    u1: int,
    u3: int,
    u4: int,
    builder: Callable[[], tuple[PathSeq, PathSeq, PathSeq, PathSeq]],
) -> Subdivision | None:
    """Assemble candidate kite routes; any constraint breach means None.

    Route order follows the kite pattern's edge list: u2u1, u2u3, u2u4,
    u1u3.
    """
    try:
        routes = builder()
        sub = Subdivision(Placement((u2, u1, u3, u4)), routes)
    except HlinkError:
        return None
    return sub if subdivision_violation(G, kite(), sub) is None else None


def _try_flower(G: SimpleGraph, builder: Callable[[], Flower]) -> Flower | None:
    try:
        F = builder()
    except HlinkError:
        return None
    return F if flower_violation(G, F) is None else None


def _kite_in_union(
    G: SimpleGraph,
    pieces: tuple,
    u2: int,
    u1: int,
    u3: int,
    u4: int,
    bud: SearchBudget | None,
) -> Subdivision | None:
    """Exhaustive kite search restricted to the edges the case touched."""
    edges: set[tuple[int, int]] = set()
    for p in pieces:
        edges |= p.edge_set()
    host = SimpleGraph.from_edges(G.n, sorted(edges))
    if bud is not None and bud.remaining == 0:
        bud.spend()
    res = find_subdivision(
        host,
        kite(),
        Placement((u2, u1, u3, u4)),
        budget=None if bud is None else bud.remaining,
    )
    if bud is not None:
        bud.spend(res.nodes_explored)
    return res.subdivision if res.status == LINKED else None


def _cycle_of(pa: PathSeq, pb: PathSeq) -> OrientedCycle:
    """Close two internally disjoint paths with equal ends into a cycle."""
    b = _from(pb, pa.first)
    return OrientedCycle(tuple(pa.vertices) + tuple(b.vertices[-2:0:-1]))


def flower_or_kite(
    G: SimpleGraph,
    u1: int,
    u2: int,
    u3: int,
    u4: int,
    Q: tuple[PathSeq, ...],
    budget: int | None = None,
) -> Flower | Subdivision:
    """Resolve a seven-path system into a flower or a kite subdivision.

    Q holds one u1u3 path, three u1u2 paths and three u2u3 paths, all
    internally disjoint, none through u4.  The host must carry five
    internally disjoint u4-u2 paths avoiding u1 and u3; both facts are
    checked and a breach raises PreconditionViolated.

    The resolution follows where the five fan paths first touch the
    system.  Whenever an explicit assembly fails a validity check, an
    exhaustive search over exactly the edges the case analysis touched
    takes over, so every return value verifies.  CaseAnalysisIncomplete
    signals that neither outcome could be assembled, which would refute
    the case analysis itself.
    """
    _check_anchors(G, (u1, u2, u3, u4))
    bud = SearchBudget(budget) if budget is not None else None
    qs = _normalized_q_system(G, u1, u2, u3, u4, Q)
    fans = _five_fan(G, u2, u4, u1, u3)
    on_q = frozenset().union(*(q.vertex_set for q in qs))
    q1 = qs[0]
    q1_inner = set(q1.interior)
    hits = tuple(next(v for v in f.vertices if v in on_q) for f in fans)
    for fan, hit in zip(fans, hits):
        if hit not in q1_inner:
            return _resolve_side_hit(G, u1, u2, u3, u4, qs, fans, fan, hit, bud)
    return _resolve_on_spine(G, u1, u2, u3, u4, qs, fans, hits, bud)


def _resolve_side_hit(
    G: SimpleGraph,
    u1: int,
    u2: int,
    u3: int,
    u4: int,
    qs: tuple[PathSeq, ...],
    fans: tuple[PathSeq, ...],
    fan: PathSeq,
    hit: int,
    bud: SearchBudget | None,
) -> Subdivision:
    """A fan path reaches a side path (or u2) before the u1u3 path: the
    kite closes through that meeting point."""
    m = _owner(qs, hit, u2)
    prefix = fan.segment(u4, hit)

    def build() -> tuple[PathSeq, PathSeq, PathSeq, PathSeq]:
        if m is None:
            r03 = prefix
        else:
            r03 = join_paths(_from(qs[m], u2).segment(u2, hit), prefix)
        return (
            _from(qs[_pick((1, 2, 3), m)], u2),
            _from(qs[_pick((4, 5, 6), m)], u2),
            r03,
            qs[0],
        )

    sub = _try_routes(G, u2, u1, u3, u4, build)
    if sub is not None:
        return sub
    sub = _kite_in_union(G, qs + (prefix,), u2, u1, u3, u4, bud)
    if sub is not None:
        return sub
    sub = _kite_in_union(G, qs + fans, u2, u1, u3, u4, bud)
    if sub is not None:
        return sub
    raise CaseAnalysisIncomplete("side-hit case assembled no kite")


def _resolve_on_spine(
    G: SimpleGraph,
    u1: int,
    u2: int,
    u3: int,
    u4: int,
    qs: tuple[PathSeq, ...],
    fans: tuple[PathSeq, ...],
    hits: tuple[int, ...],
    bud: SearchBudget | None,
) -> Flower | Subdivision:
    """Every fan path lands inside the u1u3 path first.  Depending on how
    the fan prefixes spread along that path the outcome is a kite routed
    through a detour, or a flower whose C3 closes through u4."""
    q1 = qs[0]
    pos = {v: i for i, v in enumerate(q1.vertices)}
    order = sorted(range(5), key=lambda i: pos[hits[i]])
    fans = tuple(fans[i] for i in order)
    w = tuple(hits[i] for i in order)
    on_side = frozenset().union(*(qs[i].vertex_set for i in range(1, 7)))
    wdd = tuple(next(v for v in f.vertices if v in on_side) for f in fans)
    pre = tuple(f.segment(u4, wdd[i]) for i, f in enumerate(fans))
    q1_inner = set(q1.interior)

    best_lo: tuple[int, int, int] | None = None
    best_hi: tuple[int, int, int] | None = None
    for i, p in enumerate(pre):
        for v in p.vertices:
            if v in q1_inner:
                pv = pos[v]
                if best_lo is None or pv < best_lo[0]:
                    best_lo = (pv, i, v)
                if best_hi is None or pv > best_hi[0]:
                    best_hi = (pv, i, v)
    assert best_lo is not None and best_hi is not None
    _, i_lo, u1p = best_lo
    _, i_hi, u3p = best_hi

    def side_route(k: int) -> tuple[int | None, PathSeq]:
        """From u2 along the owning side path to wdd[k], then out the
        fan prefix to u4."""
        m = _owner(qs, wdd[k], u2)
        if m is None:
            return None, pre[k]
        return m, join_paths(_from(qs[m], u2).segment(u2, wdd[k]), pre[k])

    if i_lo == i_hi:
        i = i_lo
        j = _pick((0, 1, 2, 3, 4), i)

        def build_detour() -> tuple[PathSeq, PathSeq, PathSeq, PathSeq]:
            m, r03 = side_route(j)
            r12 = join_paths(
                q1.segment(u1, u1p),
                fans[i].segment(u1p, u3p),
                q1.segment(u3p, u3),
            )
            return (
                _from(qs[_pick((1, 2, 3), m)], u2),
                _from(qs[_pick((4, 5, 6), m)], u2),
                r03,
                r12,
            )

        sub = _try_routes(G, u2, u1, u3, u4, build_detour)
        if sub is not None:
            return sub
        return _last_resort(G, u2, u1, u3, u4, qs, pre, fans, bud)

    i, j = i_lo, i_hi
    lo, hi = pos[w[0]], pos[w[4]]

    def in_window(v: int) -> bool:
        return v in pos and lo <= pos[v] <= hi

    u1pp = next(v for v in fans[i].segment(u1p, u4).vertices if in_window(v))
    u3pp = next(v for v in fans[j].segment(u3p, u4).vertices if in_window(v))
    stem0 = fans[0].segment(u4, w[0])
    stem4 = fans[4].segment(u4, w[4])
    c3 = OrientedCycle(
        tuple(stem0.vertices)
        + tuple(q1.vertices[lo + 1 : hi + 1])
        + tuple(stem4.vertices[-2:0:-1])
    )

    for k in (k for k in range(5) if k not in (i, j)):
        wk = next(v for v in reversed(pre[k].vertices) if in_window(v))

        if pos[u1pp] > pos[wk]:

            def build_low(k: int = k, wk: int = wk):
                m, _ = side_route(k)
                parts = [
                    pre[k].segment(wdd[k], wk),
                    q1.segment(wk, w[0]),
                    stem0.segment(w[0], u4),
                ]
                if m is not None:
                    parts.insert(0, _from(qs[m], u2).segment(u2, wdd[k]))
                r03 = join_paths(*parts)
                r12 = join_paths(
                    q1.segment(u1, u1p),
                    fans[i].segment(u1p, u1pp),
                    q1.segment(u1pp, u3),
                )
                return (
                    _from(qs[_pick((1, 2, 3), m)], u2),
                    _from(qs[_pick((4, 5, 6), m)], u2),
                    r03,
                    r12,
                )

            sub = _try_routes(G, u2, u1, u3, u4, build_low)
            if sub is not None:
                return sub
        elif pos[u3pp] < pos[wk]:

            def build_high(k: int = k, wk: int = wk):
                m, _ = side_route(k)
                parts = [
                    pre[k].segment(wdd[k], wk),
                    q1.segment(wk, w[4]),
                    stem4.segment(w[4], u4),
                ]
                if m is not None:
                    parts.insert(0, _from(qs[m], u2).segment(u2, wdd[k]))
                r03 = join_paths(*parts)
                r12 = join_paths(
                    q1.segment(u3, u3p),
                    fans[j].segment(u3p, u3pp),
                    q1.segment(u3pp, u1),
                )
                return (
                    _from(qs[_pick((1, 2, 3), m)], u2),
                    _from(qs[_pick((4, 5, 6), m)], u2),
                    r03,
                    r12,
                )

            sub = _try_routes(G, u2, u1, u3, u4, build_high)
            if sub is not None:
                return sub
        else:

            def build_bloom(k: int = k, wk: int = wk) -> Flower:
                m = _owner(qs, wdd[k], u2)
                a_side = [c for c in (1, 2, 3) if c != m][:2]
                b_side = [c for c in (4, 5, 6) if c != m][:2]
                fp1 = join_paths(q1.segment(u1, u1p), fans[i].segment(u1p, u1pp))
                if m is None:
                    fp2 = pre[k].segment(u2, wk)
                else:
                    fp2 = join_paths(
                        _from(qs[m], u2).segment(u2, wdd[k]),
                        pre[k].segment(wdd[k], wk),
                    )
                fp3 = join_paths(q1.segment(u3, u3p), fans[j].segment(u3p, u3pp))
                return Flower(
                    (u1, u2, u3, u4),
                    _cycle_of(qs[a_side[0]], qs[a_side[1]]),
                    _cycle_of(qs[b_side[0]], qs[b_side[1]]),
                    c3,
                    fp1,
                    fp2,
                    fp3,
                )

            F = _try_flower(G, build_bloom)
            if F is not None:
                return F

    return _last_resort(G, u2, u1, u3, u4, qs, pre, fans, bud)


def _last_resort(
    G: SimpleGraph,
    u2: int,
    u1: int,
    u3: int,
    u4: int,
    qs: tuple[PathSeq, ...],
    pre: tuple[PathSeq, ...],
    fans: tuple[PathSeq, ...],
    bud: SearchBudget | None,
) -> Subdivision:
    sub = _kite_in_union(G, qs + pre, u2, u1, u3, u4, bud)
    if sub is not None:
        return sub
    sub = _kite_in_union(G, qs + fans, u2, u1, u3, u4, bud)
    if sub is not None:
        return sub
    raise CaseAnalysisIncomplete("spine case assembled neither outcome")


# ---------------------------------------------------------------------------
# Extremal flowers
# ---------------------------------------------------------------------------


def _extremal_key(G: SimpleGraph, F: Flower) -> tuple:
    """Selection key, smaller is better: total path vertices ascending,
    then block of C3 in the complement descending, then the component
    size profiles (descending sizes compared lexicographically, longer
    profile winning ties) for components meeting the flower and for the
    rest.  The math.inf sentinel makes a profile beat its own proper
    prefixes under tuple order."""
    sump = sum(len(p.vertices) for p in F.paths)
    shell = F.c1.vertex_set | F.c2.vertex_set
    keep = sorted(set(G.vertices()) - shell)
    sub, old2new, _ = G.induced(keep)
    core3 = {old2new[v] for v in F.c3.vertices}
    block = next(b for b in blocks(sub) if core3 <= b)
    outside = set(sub.vertices()) - block
    comps = sub.connected_components(within=outside) if outside else []
    touched = {old2new[v] for v in F.vertex_set if v in old2new}
    meet: list[int] = []
    apart: list[int] = []
    for comp in comps:
        (meet if comp & touched else apart).append(len(comp))
    bvec = tuple(-s for s in sorted(meet, reverse=True)) + (math.inf,)
    avec = tuple(-s for s in sorted(apart, reverse=True)) + (math.inf,)
    return (sump, -len(block), bvec, avec)


def extremal_flower(
    G: SimpleGraph,
    u1: int,
    u2: int,
    u3: int,
    u4: int,
    budget: int | None = None,
) -> Flower:
    """Flower minimising the extremal key over all (u1,u2,u3,u4)-flowers.

    Raises NoFlower when no flower is anchored there at all.  An
    unbeatable key (six path vertices, triangle cycles, complement block
    swallowing everything) ends the scan early; otherwise a weight bound
    per cycle pair prunes the enumeration.
    """
    _check_anchors(G, (u1, u2, u3, u4))
    bud = SearchBudget(budget) if budget is not None else None
    best: Flower | None = None
    best_key: tuple | None = None

    def pair_ok(t_union: int) -> bool:
        if best_key is None:
            return True
        return not (best_key[:2] < (6, -(G.n - t_union)))

    if G.n >= 9:
        for F in _flowers(G, u1, u2, u3, u4, bud, pair_ok):
            key = _extremal_key(G, F)
            if best_key is None or key < best_key:
                best, best_key = F, key
                if (
                    key[0] == 6
                    and key[1] == -(G.n - 5)
                    and len(F.c1) + len(F.c2) == 6
                ):
                    break
    if best is None:
        raise NoFlower(f"no flower anchored at ({u1},{u2},{u3},{u4})")
    return best


# ---------------------------------------------------------------------------
# Shape checks on selected flowers
# ---------------------------------------------------------------------------


def flower_paths_are_edges(F: Flower) -> bool:
    return all(len(p.vertices) == 2 for p in F.paths)


def flower_cycles_minimal(G: SimpleGraph, F: Flower) -> bool:
    """No strictly shorter cycle through C_i's two anchors survives inside
    the subgraph induced on V(C_i)."""
    u1, u2, u3, _ = F.anchors
    for cyc, pair in ((F.c1, (u1, u2)), (F.c2, (u2, u3))):
        k = len(cyc)
        if k == 3:
            continue
        shorter = next(
            cycles_through(
                G, pair, within=cyc.vertex_set, min_len=3, max_len=k - 1
            ),
            None,
        )
        if shorter is not None:
            return False
    return True


def flower_complement_three_connected(G: SimpleGraph, F: Flower) -> bool:
    keep = sorted(set(G.vertices()) - (F.c1.vertex_set | F.c2.vertex_set))
    sub, _, _ = G.induced(keep)
    return vertex_connectivity(sub) >= 3


def flower_neighborhood_check(G: SimpleGraph, F: Flower) -> bool:
    """Neighbors of C_i - u2 outside the two cycles stay on the C3 arc
    from v_i to v_{i+1}, for i in {1, 2}.

    Adjacencies staying inside C1 ∪ C2 are exempt; everything else a
    vertex of C_i - u2 touches must sit on its arc.
    """
    u1, u2, u3, u4 = F.anchors
    v1, v2, v3 = F.attachments
    c3 = F.c3 if _forward_order(F.c3, (v1, v2, v3, u4)) else F.c3.reverse()
    shell = F.c1.vertex_set | F.c2.vertex_set
    for cyc, arc_from, arc_to in ((F.c1, v1, v2), (F.c2, v2, v3)):
        allowed = interval(c3, arc_from, arc_to).vertex_set
        for x in cyc.vertex_set - {u2}:
            for z in G.neighbors(x):
                if z not in shell and z not in allowed:
                    return False
    return True


def _forward_order(C: OrientedCycle, marks: tuple[int, ...]) -> bool:
    pos = [C.position(v) for v in marks]
    n = len(C)
    gaps = [(pos[(t + 1) % len(pos)] - pos[t]) % n for t in range(len(pos))]
    return sum(gaps) == n and all(g > 0 for g in gaps)

"""Vertex connectivity, Menger systems, duplication, and generators.

Disjoint-path questions are answered exactly by unit-capacity max-flow
on a split digraph: vertex v becomes arc v_in -> v_out of capacity 1,
edges become wide arcs in both directions.  Augmentation is breadth
first with neighbours scanned in ascending order, so path systems and
cuts are deterministic.
"""

from __future__ import annotations

import random
from collections.abc import Iterable, Mapping
from dataclasses import dataclass

from .core import PathSeq, Placement, SimpleGraph
from .errors import (
    AdjacentTerminalsNoCut,
    GenerationBudgetExceeded,
    InsufficientTargets,
    ParameterError,
    PreconditionViolated,
)

GENERATOR_ID = "gnp-rejection/1"


@dataclass(frozen=True)
class CutOrPaths:
    """Outcome of a Menger query: a full path system or a small cut."""

    paths: tuple[PathSeq, ...] | None
    cut: frozenset[int] | None

    @property
    def found_paths(self) -> bool:
        return self.paths is not None


# ---------------------------------------------------------------------------
# Split-digraph max flow
# ---------------------------------------------------------------------------

# Node encoding: 2v = v_in, 2v+1 = v_out.  Terminal vertices are not
# split: the source enters as s_out, the sink as t_in.


class _SplitFlow:
    def __init__(self, G: SimpleGraph, s: int, t: int, allowed: set[int]) -> None:
        self.G = G
        self.s, self.t = s, t
        self.source, self.sink = 2 * s + 1, 2 * t
        big = G.n + 1
        res: dict[int, dict[int, int]] = {}

        def arc(a: int, b: int, c: int) -> None:
            res.setdefault(a, {})[b] = c
            res.setdefault(b, {}).setdefault(a, 0)

        for v in allowed:
            if v != s and v != t:
                arc(2 * v, 2 * v + 1, 1)
        for u, v in G.edges:
            if u not in allowed or v not in allowed:
                continue
            if {u, v} == {s, t}:
                # The direct edge is itself one path and nothing more.
                arc(2 * s + 1, 2 * t, 1)
                continue
            arc(2 * u + 1, 2 * v, big)
            arc(2 * v + 1, 2 * u, big)
        self.res = res

    def augment_once(self) -> bool:
        prev: dict[int, int] = {self.source: -1}
        queue = [self.source]
        while queue and self.sink not in prev:
            nxt: list[int] = []
            for a in queue:
                for b in sorted(self.res.get(a, ())):
                    if b not in prev and self.res[a][b] > 0:
                        prev[b] = a
                        nxt.append(b)
            queue = nxt
        if self.sink not in prev:
            return False
        b = self.sink
        while b != self.source:
            a = prev[b]
            self.res[a][b] -= 1
            self.res[b][a] += 1
            b = a
        return True

    def max_units(self, limit: int) -> int:
        units = 0
        while units < limit and self.augment_once():
            units += 1
        return units

    def _initial_cap(self, a: int, b: int) -> int:
        if a // 2 == b // 2:
            return 1 if a % 2 == 0 else 0  # split arc in->out; its reverse starts 0
        if a % 2 == 1 and b % 2 == 0:
            return 1 if (a, b) == (self.source, self.sink) else self.G.n + 1
        return 0

    def decompose(self, units: int) -> list[PathSeq]:
        """Turn the flow into `units` vertex sequences, smallest-id first.

        An arc carries flow iff its residual dropped below the initial
        capacity; unit vertex capacities make each walk from the source
        a simple path, and stray flow cycles are simply left unread.
        """
        used: dict[int, list[int]] = {}
        for a, nbrs in self.res.items():
            for b, r in nbrs.items():
                for _ in range(self._initial_cap(a, b) - r):
                    used.setdefault(a, []).append(b)
        for bs in used.values():
            bs.sort()
        paths: list[PathSeq] = []
        for _ in range(units):
            verts = [self.s]
            node = self.source
            while True:
                b = used[node].pop(0)
                if b == self.sink:
                    verts.append(self.t)
                    break
                verts.append(b // 2)
                node = used[b].pop(0)  # the split arc, landing on the out-node
            paths.append(PathSeq(tuple(verts)))
        return paths

    def reachable_cut(self) -> frozenset[int] | None:
        """Minimum vertex cut read off the residual, None for adjacent ends.

        Edge arcs are too wide to saturate, so every arc crossing the
        reachable set is a split arc, except the direct terminal edge,
        which no vertex set can sever.
        """
        if self.G.has_edge(self.s, self.t):
            return None
        seen = {self.source}
        stack = [self.source]
        while stack:
            a = stack.pop()
            for b, r in self.res.get(a, {}).items():
                if r > 0 and b not in seen:
                    seen.add(b)
                    stack.append(b)
        return frozenset(
            a // 2
            for a in seen
            if a % 2 == 0 and a + 1 not in seen and a // 2 not in (self.s, self.t)
        )


def _menger(
    G: SimpleGraph, s: int, t: int, want: int, allowed: set[int]
) -> tuple[int, _SplitFlow]:
    fl = _SplitFlow(G, s, t, allowed)
    units = fl.max_units(want)
    return units, fl


# ---------------------------------------------------------------------------
# Public operations
# ---------------------------------------------------------------------------


def local_connectivity(G: SimpleGraph, s: int, t: int, limit: int | None = None) -> int:
    """Maximum number of internally disjoint s-t paths."""
    if s == t:
        raise PreconditionViolated("terminals must differ")
    want = G.n if limit is None else limit
    units, _ = _menger(G, s, t, want, set(G.vertices()))
    return units


def vertex_connectivity(G: SimpleGraph) -> int:
    """kappa(G), with the complete-graph convention kappa(K_n) = n - 1."""
    if G.n <= 0:
        raise PreconditionViolated("need at least one vertex")
    if G.n == 1:
        return 0
    best = G.n - 1
    found_nonadjacent = False
    for s in G.vertices():
        for t in range(s + 1, G.n):
            if G.has_edge(s, t):
                continue
            found_nonadjacent = True
            units, _ = _menger(G, s, t, best, set(G.vertices()))
            if units < best:
                best = units
                if best == 0:
                    return 0
    return best if found_nonadjacent else G.n - 1


def disjoint_paths(G: SimpleGraph, s: int, t: int, k: int) -> CutOrPaths:
    """k internally disjoint s-t paths, or a separating set of size < k.

    The cut excludes s and t; when s and t are adjacent no vertex cut
    exists, so a shortfall raises AdjacentTerminalsNoCut instead.
    """
    if s == t:
        raise PreconditionViolated("terminals must differ")
    if k <= 0:
        return CutOrPaths(paths=(), cut=None)
    units, fl = _menger(G, s, t, k, set(G.vertices()))
    if units >= k:
        return CutOrPaths(paths=tuple(fl.decompose(k)), cut=None)
    # run flow to its true maximum so the residual cut is minimum
    units += fl.max_units(G.n)
    cut = fl.reachable_cut()
    if cut is None or G.has_edge(s, t):
        raise AdjacentTerminalsNoCut(
            f"only {units} paths between adjacent terminals {s},{t}"
        )
    return CutOrPaths(paths=None, cut=cut)


def fan(
    G: SimpleGraph,
    s: int,
    T: Iterable[int],
    k: int,
    avoid: Iterable[int] = (),
) -> CutOrPaths:
    """k paths from s to k distinct T-vertices, disjoint except at s.

    All paths dodge `avoid`; targets inside `avoid` are unusable but
    still count toward the k <= |T| precondition.  On shortfall the
    result carries a separating set of G - avoid (it may contain
    T-vertices, never s).
    """
    targets = frozenset(T)
    shun = frozenset(avoid)
    if s in targets or s in shun:
        raise PreconditionViolated(f"source {s} may not lie in T or avoid")
    if k > len(targets):
        raise InsufficientTargets(f"asked for {k} paths into {len(targets)} targets")
    if k <= 0:
        return CutOrPaths(paths=(), cut=None)
    live = [t for t in sorted(targets) if t not in shun]
    # auxiliary sink beyond all real ids
    aux = SimpleGraph(
        G.n + 1,
        tuple(sorted(set(G.edges) | {(t, G.n) for t in live})),
    )
    allowed = set(aux.vertices()) - set(shun)
    units, fl = _menger(aux, s, G.n, k, allowed)
    if units >= k:
        paths = tuple(PathSeq(p.vertices[:-1]) for p in fl.decompose(k))
        return CutOrPaths(paths=paths, cut=None)
    units += fl.max_units(aux.n)
    cut = fl.reachable_cut()
    if cut is None:
        raise AdjacentTerminalsNoCut("internal: auxiliary sink adjacency")
    return CutOrPaths(paths=None, cut=cut)


def duplicate_vertices(
    G: SimpleGraph, counts: Mapping[int, int]
) -> tuple[SimpleGraph, dict[int, tuple[int, ...]]]:
    """Replace each vertex by the requested number of mutually non-adjacent
    copies; copies inherit all original adjacencies.

    Vertices absent from `counts` keep one copy.  New ids are assigned
    in ascending original order, so the identity map falls out when all
    counts are 1.  Returns the new graph and original -> copies.
    """
    for v, c in counts.items():
        if not (0 <= v < G.n):
            raise PreconditionViolated(f"vertex {v} outside 0..{G.n - 1}")
        if c < 1:
            raise PreconditionViolated(f"copy count for {v} must be >= 1, got {c}")
    groups: dict[int, tuple[int, ...]] = {}
    nxt = 0
    for v in G.vertices():
        c = counts.get(v, 1)
        groups[v] = tuple(range(nxt, nxt + c))
        nxt += c
    edges = [
        (a, b)
        for u, v in G.edges
        for a in groups[u]
        for b in groups[v]
    ]
    return SimpleGraph.from_edges(nxt, edges), groups


def sharpness_gadget(
    k1: int, k2: int, k3: int, m: int | None = None
) -> tuple[SimpleGraph, Placement]:
    """The tight example below the connectivity threshold k = k1+k2+k3.

    A clique S of k-1 vertices is fully joined to three m-cliques with
    no edges between them, so kappa = k-1, and any placement with the
    three branch vertices in distinct m-cliques cannot be realised:
    every crossing route eats an S-vertex and only k-1 exist.

    Default m is k.  k = 2 is accepted (degenerate but well formed).
    """
    k = k1 + k2 + k3
    if k1 <= 0 or k2 <= 0 or k3 < 0:
        raise ParameterError("need k1, k2 > 0 and k3 >= 0")
    if k < 2:
        raise ParameterError(f"need k1+k2+k3 >= 2, got {k}")
    if m is None:
        m = k
    if m < 1:
        raise ParameterError(f"component size must be >= 1, got {m}")
    s_size = k - 1
    n = s_size + 3 * m
    S = range(s_size)
    comps = [range(s_size + i * m, s_size + (i + 1) * m) for i in range(3)]
    edges: list[tuple[int, int]] = []
    edges += [(u, v) for u in S for v in S if u < v]
    for C in comps:
        edges += [(u, v) for u in C for v in C if u < v]
        edges += [(u, v) for u in S for v in C]
    G = SimpleGraph.from_edges(n, edges)
    phi = Placement((comps[0][0], comps[1][0], comps[2][0]))
    return G, phi


def random_k_connected(n: int, k: int, seed: int, attempts: int = 64) -> SimpleGraph:
    """Seeded graph with kappa >= k, verified before returning.

    Rejection-samples G(n,p) with p climbing toward 1; the final rung is
    the complete graph, so generation always terminates for n >= k+1.
    """
    if k < 0:
        raise PreconditionViolated(f"connectivity target must be >= 0, got {k}")
    if n < k + 1:
        raise PreconditionViolated(f"need n >= k+1, got n={n}, k={k}")
    rng = random.Random(seed)
    p0 = min(0.95, max(0.3, (k + 1) / max(1, n)))
    for t in range(attempts):
        p = p0 + (1.0 - p0) * t / (attempts - 1)
        edges = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if rng.random() < p
        ]
        G = SimpleGraph(n, tuple(edges))
        if vertex_connectivity(G) >= k:
            return G
    raise GenerationBudgetExceeded(
        f"no graph with kappa >= {k} on {n} vertices after {attempts} draws"
    )

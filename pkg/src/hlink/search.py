"""Deterministic enumeration primitives shared by the solvers.

Everything here explores in a fixed order (ascending vertex ids) so a
given input always produces the same answer, and every potentially
exponential walk is metered by a SearchBudget.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator

from .core import OrientedCycle, PathSeq, SimpleGraph
from .errors import BudgetNonPositive, SearchBudgetExceeded


class SearchBudget:
    """Countdown over search-tree nodes; spend() raises when exhausted."""

    __slots__ = ("limit", "used")

    def __init__(self, limit: int) -> None:
        if limit <= 0:
            raise BudgetNonPositive(f"budget must be positive, got {limit}")
        self.limit = limit
        self.used = 0

    def spend(self, amount: int = 1) -> None:
        self.used += amount
        if self.used > self.limit:
            raise SearchBudgetExceeded(
                f"search budget of {self.limit} nodes exhausted"
            )

    @property
    def remaining(self) -> int:
        return max(0, self.limit - self.used)


def _spend(budget: SearchBudget | None) -> None:
    if budget is not None:
        budget.spend()


# ---------------------------------------------------------------------------
# Paths
# ---------------------------------------------------------------------------


def paths_between(
    G: SimpleGraph,
    s: int,
    t: int,
    avoid: Iterable[int] = (),
    within: Iterable[int] | None = None,
    budget: SearchBudget | None = None,
) -> Iterator[PathSeq]:
    """All simple s-t paths, interiors avoiding `avoid`, vertices in `within`.

    Paths come out in depth-first order with neighbours taken ascending,
    so the sequence is stable.  s == t yields the trivial path.
    """
    allowed = set(G.vertices()) if within is None else set(within)
    blocked = set(avoid)
    if s not in allowed or t not in allowed:
        return
    if s == t:
        _spend(budget)
        yield PathSeq((s,))
        return
    path = [s]
    on_path = {s}

    def rec() -> Iterator[PathSeq]:
        _spend(budget)
        for y in G.neighbors(path[-1]):
            if y == t:
                yield PathSeq(tuple(path) + (t,))
                continue
            if y in on_path or y in blocked or y not in allowed:
                continue
            path.append(y)
            on_path.add(y)
            yield from rec()
            path.pop()
            on_path.remove(y)

    yield from rec()


def path_through(
    G: SimpleGraph,
    milestones: tuple[int, ...],
    within: Iterable[int] | None = None,
    budget: SearchBudget | None = None,
) -> PathSeq | None:
    """A simple path visiting the given distinct vertices in order, or None.

    Consecutive milestones may coincide with path ends only; the path is
    the concatenation of internally disjoint legs, and no leg interior
    touches any milestone.
    """
    if len(set(milestones)) != len(milestones):
        return None
    allowed = set(G.vertices()) if within is None else set(within)
    if any(v not in allowed for v in milestones):
        return None
    marks = set(milestones)

    def extend(prefix: tuple[int, ...], idx: int) -> PathSeq | None:
        if idx == len(milestones) - 1:
            return PathSeq(prefix)
        a, b = milestones[idx], milestones[idx + 1]
        used = set(prefix) | (marks - {b})
        for leg in paths_between(
            G, a, b, avoid=used - {a}, within=allowed - (used - {a, b}), budget=budget
        ):
            found = extend(prefix + leg.vertices[1:], idx + 1)
            if found is not None:
                return found
        return None

    return extend(milestones[:1], 0)


# ---------------------------------------------------------------------------
# Cycles
# ---------------------------------------------------------------------------


def simple_cycles(
    G: SimpleGraph,
    min_len: int = 3,
    budget: SearchBudget | None = None,
) -> Iterator[OrientedCycle]:
    """All simple cycles, each once, in a canonical orientation.

    Canonical form: the smallest vertex first, and the second vertex
    smaller than the last (fixing the direction).  Enumeration is by
    ascending anchor vertex, then depth first.
    """
    for s in G.vertices():
        path = [s]
        on_path = {s}

        def rec() -> Iterator[OrientedCycle]:
            _spend(budget)
            for y in G.neighbors(path[-1]):
                if y == s and len(path) >= min_len and path[1] < path[-1]:
                    yield OrientedCycle(tuple(path))
                    continue
                if y <= s or y in on_path:
                    continue
                path.append(y)
                on_path.add(y)
                yield from rec()
                path.pop()
                on_path.remove(y)

        yield from rec()


def cycles_through(
    G: SimpleGraph,
    musts: tuple[int, ...],
    within: Iterable[int] | None = None,
    min_len: int = 3,
    max_len: int | None = None,
    budget: SearchBudget | None = None,
) -> Iterator[OrientedCycle]:
    """Simple cycles containing every vertex of `musts`, each once.

    Anchored at min(musts) so cycles missing it are never explored
    (other cycle vertices may still be smaller); direction is fixed by
    second vertex < last.  `within` confines all cycle vertices, and
    `max_len` caps how many a cycle may have.
    """
    if not musts:
        yield from simple_cycles(G, min_len=min_len, budget=budget)
        return
    allowed = set(G.vertices()) if within is None else set(within)
    need = set(musts)
    if not need <= allowed:
        return
    s = min(need)
    path = [s]
    on_path = {s}

    def rec() -> Iterator[OrientedCycle]:
        _spend(budget)
        full = max_len is not None and len(path) >= max_len
        for y in G.neighbors(path[-1]):
            if y == s and len(path) >= min_len and path[1] < path[-1]:
                if need <= on_path:
                    yield OrientedCycle(tuple(path))
                continue
            if full or y in on_path or y not in allowed:
                continue
            path.append(y)
            on_path.add(y)
            yield from rec()
            path.pop()
            on_path.remove(y)

    yield from rec()


# ---------------------------------------------------------------------------
# Blocks
# ---------------------------------------------------------------------------


def blocks(G: SimpleGraph) -> list[frozenset[int]]:
    """Biconnected components as vertex sets (bridges give 2-sets).

    Isolated vertices form their own singleton blocks so the union
    covers every vertex.  Standard lowpoint computation, iterative.
    """
    index = [0] * G.n
    low = [0] * G.n
    visited = [False] * G.n
    counter = 1
    out: list[frozenset[int]] = []
    edge_stack: list[tuple[int, int]] = []

    for root in G.vertices():
        if visited[root]:
            continue
        if G.degree(root) == 0:
            out.append(frozenset((root,)))
            continue
        stack: list[tuple[int, int, Iterator[int]]] = [(root, -1, iter(G.neighbors(root)))]
        visited[root] = True
        index[root] = low[root] = counter
        counter += 1
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if not visited[w]:
                    edge_stack.append((v, w))
                    visited[w] = True
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append((w, v, iter(G.neighbors(w))))
                    advanced = True
                    break
                if w != parent and index[w] < index[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            stack.pop()
            if stack:
                pv = stack[-1][0]
                low[pv] = min(low[pv], low[v])
                if low[v] >= index[pv]:
                    comp: set[int] = set()
                    while edge_stack:
                        a, b = edge_stack.pop()
                        comp.update((a, b))
                        if (a, b) == (pv, v):
                            break
                    out.append(frozenset(comp))
    return out


def block_containing(G: SimpleGraph, verts: Iterable[int]) -> frozenset[int] | None:
    """The block containing all of `verts`, or None if no single block does."""
    need = set(verts)
    for b in blocks(G):
        if need <= b:
            return b
    return None

"""Separating pairs on a cycle and their ordered-path witnesses.

A separating pair confines the attachments of a vertex set A onto two
subpaths R1, R2 of a cycle C, one per u1u2-arc, such that no interior
vertex of either subpath sees the rest of the cycle.  The two full arcs
always qualify, so a minimum-weight ("special") pair exists.  The
witness bundle extracts the ordered paths and the bypass cycle that the
special property guarantees.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import OrientedCycle, PathSeq, SimpleGraph, interval
from .errors import ParameterError, PreconditionViolated, WitnessNotFound
from .search import cycles_through, path_through

# ---------------------------------------------------------------------------
# The pair
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SeparatingPair:
    """R1 lies on C[u1,u2], R2 on C[u2,u1], under the stored orientation.

    Either subpath may be empty; both are stored running in arc
    direction (from the u1 side for R1, from the u2 side for R2).
    """

    C: OrientedCycle
    u1: int
    u2: int
    A: frozenset[int]
    R1: PathSeq
    R2: PathSeq

    @property
    def weight(self) -> int:
        return len(self.R1) + len(self.R2)

    def subpath(self, i: int) -> PathSeq:
        if i == 1:
            return self.R1
        if i == 2:
            return self.R2
        raise ParameterError(f"subpath index must be 1 or 2, got {i}")

    def interior(self, i: int) -> tuple[int, ...]:
        return self.subpath(i).interior

    def r(self, i: int, j: int) -> int:
        """End of R_i closest to u_j; undefined when R_i is empty."""
        sub = self.subpath(i)
        if sub.is_empty:
            raise ParameterError(f"R{i} is empty, its ends are undefined")
        if j not in (1, 2):
            raise ParameterError(f"anchor index must be 1 or 2, got {j}")
        return sub.first if j == i else sub.last

    def to_json(self) -> dict:
        return {
            "cycle": list(self.C.vertices),
            "u1": self.u1,
            "u2": self.u2,
            "A": sorted(self.A),
            "R1": list(self.R1.vertices),
            "R2": list(self.R2.vertices),
        }

    @classmethod
    def from_json(cls, data: dict) -> SeparatingPair:
        return cls(
            C=OrientedCycle(tuple(data["cycle"])),
            u1=data["u1"],
            u2=data["u2"],
            A=frozenset(data["A"]),
            R1=PathSeq(tuple(data["R1"])),
            R2=PathSeq(tuple(data["R2"])),
        )


def _attachments(G: SimpleGraph, A: frozenset[int]) -> frozenset[int]:
    out: set[int] = set()
    for a in A:
        out.update(G.neighbor_set(a))
    return frozenset(out - A)


def _is_run(sub: PathSeq, arc: tuple[int, ...]) -> bool:
    if sub.is_empty:
        return True
    try:
        i = arc.index(sub.vertices[0])
    except ValueError:
        return False
    return arc[i : i + len(sub)] == sub.vertices


def _oriented_violation(
    G: SimpleGraph,
    C: OrientedCycle,
    u1: int,
    u2: int,
    A: frozenset[int],
    R1: PathSeq,
    R2: PathSeq,
) -> str | None:
    arc1 = interval(C, u1, u2).vertices
    arc2 = interval(C, u2, u1).vertices
    if not _is_run(R1, arc1):
        return "R1 is not a subpath of the u1-to-u2 arc"
    if not _is_run(R2, arc2):
        return "R2 is not a subpath of the u2-to-u1 arc"
    att = _attachments(G, A)
    cover = R1.vertex_set | R2.vertex_set
    if not (att & set(arc1)) <= R1.vertex_set:
        return "an attachment on the u1-to-u2 arc escapes R1"
    if not (att & set(arc2)) <= R2.vertex_set:
        return "an attachment on the u2-to-u1 arc escapes R2"
    on_c = C.vertex_set
    for v in R1.interior + R2.interior:
        for nb in G.neighbors(v):
            if nb in on_c and nb not in cover:
                return f"edge {v}-{nb} leaves a subpath interior for the bare cycle"
    return None


def separating_pair_violation(G: SimpleGraph, pair: SeparatingPair) -> str | None:
    """None if the pair satisfies the definition under some orientation."""
    C, u1, u2 = pair.C, pair.u1, pair.u2
    if u1 == u2:
        return "u1 and u2 coincide"
    if not C.valid_in(G):
        return "cycle is not a cycle of the host graph"
    if u1 not in C or u2 not in C:
        return "an anchor is off the cycle"
    if pair.A & C.vertex_set:
        return "A meets the cycle"
    first = _oriented_violation(G, C, u1, u2, pair.A, pair.R1, pair.R2)
    if first is None:
        return None
    if (
        _oriented_violation(
            G, C.reverse(), u1, u2, pair.A, pair.R1.reverse(), pair.R2.reverse()
        )
        is None
    ):
        return None
    return first


def verify_separating_pair(G: SimpleGraph, pair: SeparatingPair) -> bool:
    return separating_pair_violation(G, pair) is None


# ---------------------------------------------------------------------------
# Finding the special pair
# ---------------------------------------------------------------------------


def _windows(arc: tuple[int, ...], att: frozenset[int]) -> list[tuple[int, ...]]:
    """Contiguous runs of `arc` covering every attachment on it, by size."""
    hits = [i for i, v in enumerate(arc) if v in att]
    out: list[tuple[int, ...]] = []
    if not hits:
        out.append(())
        lo, hi = len(arc), -1
    else:
        lo, hi = hits[0], hits[-1]
    for start in range(len(arc)):
        if start > lo:
            break
        for stop in range(max(start, hi), len(arc)):
            out.append(arc[start : stop + 1])
    out.sort(key=lambda w: (len(w), w))
    return out


def find_special_separating_pair(
    G: SimpleGraph, C: OrientedCycle, u1: int, u2: int, A
) -> SeparatingPair:
    """Minimum-weight pair over both orientations, exhaustively.

    The two full arcs always satisfy the definition, so the search
    cannot come back empty.
    """
    A = frozenset(A)
    if u1 == u2 or u1 not in C or u2 not in C:
        raise PreconditionViolated("u1 and u2 must be distinct vertices of C")
    if not A:
        raise PreconditionViolated("A must be nonempty")
    if A & C.vertex_set:
        raise PreconditionViolated("A must be disjoint from C")
    att = _attachments(G, A)
    on_c = C.vertex_set
    best: tuple[int, int, PathSeq, PathSeq] | None = None
    for which, D in enumerate((C, C.reverse())):
        arc1 = interval(D, u1, u2).vertices
        arc2 = interval(D, u2, u1).vertices
        for w1 in _windows(arc1, att):
            for w2 in _windows(arc2, att):
                weight = len(w1) + len(w2)
                if best is not None and (weight, which) >= best[:2]:
                    continue
                cover = set(w1) | set(w2)
                ok = True
                for v in w1[1:-1] + w2[1:-1]:
                    for nb in G.neighbors(v):
                        if nb in on_c and nb not in cover:
                            ok = False
                            break
                    if not ok:
                        break
                if ok:
                    best = (weight, which, PathSeq(w1), PathSeq(w2))
    assert best is not None
    _, which, R1, R2 = best
    return SeparatingPair(
        C=C if which == 0 else C.reverse(), u1=u1, u2=u2, A=A, R1=R1, R2=R2
    )


# ---------------------------------------------------------------------------
# Witnesses
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ConnSepWitnesses:
    """The objects a special pair guarantees around an interior vertex x.

    `attachment` and `ordered_path` realise a path through x, u1, u2 and
    a cycle vertex adjacent to A, inside the cycle's induced subgraph.
    `bypass_cycle` goes through u1 and u2 while avoiding the interior of
    R1; `cross_paths` lists, per interior vertex x' of R2, a path
    through x, u1, u2, x'.  The latter two need G[A] connected and are
    None / empty otherwise.
    """

    attachment: int
    ordered_path: PathSeq
    bypass_cycle: OrientedCycle | None
    cross_paths: tuple[tuple[int, PathSeq], ...]


def connsep_witnesses(
    G: SimpleGraph, pair: SeparatingPair, x: int
) -> ConnSepWitnesses:
    problem = separating_pair_violation(G, pair)
    if problem is not None:
        raise PreconditionViolated(f"not a separating pair: {problem}")
    minimal = find_special_separating_pair(G, pair.C, pair.u1, pair.u2, pair.A)
    if pair.weight != minimal.weight:
        raise PreconditionViolated(
            f"pair of weight {pair.weight} is not special, {minimal.weight} attainable"
        )
    if x not in pair.interior(1):
        raise PreconditionViolated("x must be an interior vertex of R1")

    u1, u2 = pair.u1, pair.u2
    cyc = pair.C.vertex_set
    att = _attachments(G, pair.A)

    ordered = None
    attachment = None
    for a in sorted(att & cyc):
        marks = (x, u1, u2) if a == u2 else (x, u1, u2, a)
        found = path_through(G, marks, within=cyc)
        if found is not None:
            attachment, ordered = a, found
            break
    if ordered is None or attachment is None:
        raise WitnessNotFound(
            "no ordered path x,u1,u2,a to an attachment inside the cycle"
        )

    a_connected = len(G.connected_components(within=pair.A)) == 1 and bool(pair.A)
    bypass = None
    cross: list[tuple[int, PathSeq]] = []
    if a_connected:
        inner = set(pair.interior(1))
        allowed = (cyc | pair.A) - inner
        for cand in cycles_through(G, (u1, u2), within=allowed):
            bypass = cand
            break
        if bypass is None:
            raise WitnessNotFound("no u1,u2-cycle avoiding the interior of R1")
        for xp in sorted(pair.interior(2)):
            found = path_through(G, (x, u1, u2, xp), within=cyc | pair.A)
            if found is None:
                raise WitnessNotFound(
                    f"no ordered path x,u1,u2,{xp} through the attached set"
                )
            cross.append((xp, found))
    return ConnSepWitnesses(
        attachment=attachment,
        ordered_path=ordered,
        bypass_cycle=bypass,
        cross_paths=tuple(cross),
    )

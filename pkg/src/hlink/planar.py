"""Disc embeddings by rotation system, and the certificates built on them.

An embedding is a rotation system (the cyclic neighbor order at every
vertex) plus a designated outer face, given as its boundary walk.  Faces
are traced by the next-dart rule: the dart (u, v) continues as (v, w)
where w follows u in the rotation at v.  A rotation system of a
connected graph is planar exactly when Euler's count n - m + f = 2 holds
for the traced faces.

On top of this sit the certificate that four terminals admit no crossing
pair of disjoint paths, the two-path linkage search it complements, and
the degree-discharge witness for 3-connected disc triangulations.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .connectivity import vertex_connectivity
from .core import (
    Placement,
    SimpleGraph,
    Subdivision,
    matching,
)
from .errors import (
    MalformedCertificate,
    NotPlanar,
    NotThreeConnected,
    PreconditionViolated,
    WitnessNotFound,
)
from .linkage import LINKED, find_subdivision


# ---------------------------------------------------------------------------
# Rotation systems
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RotationEmbedding:
    """Cyclic neighbor orders per vertex plus the outer boundary walk."""

    rotation: tuple[tuple[int, tuple[int, ...]], ...]
    outer: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "rotation", tuple(sorted((v, tuple(o)) for v, o in self.rotation))
        )
        object.__setattr__(self, "_order", dict(self.rotation))

    @classmethod
    def make(cls, rotation: dict[int, tuple[int, ...]], outer) -> RotationEmbedding:
        return cls(tuple(rotation.items()), tuple(outer))

    def vertices(self) -> tuple[int, ...]:
        return tuple(v for v, _ in self.rotation)

    def order_at(self, v: int) -> tuple[int, ...]:
        return self._order[v]

    def to_json(self) -> dict:
        return {
            "rotation": [[v, list(o)] for v, o in self.rotation],
            "outer": list(self.outer),
        }

    @classmethod
    def from_json(cls, data: dict) -> RotationEmbedding:
        return cls(
            tuple((v, tuple(o)) for v, o in data["rotation"]),
            tuple(data["outer"]),
        )


def trace_faces(emb: RotationEmbedding) -> tuple[tuple[tuple[int, int], ...], ...]:
    """Face boundaries as dart cycles, deterministic order.

    Assumes the rotation lists each neighbor relation both ways, which
    embedding_violation establishes first.
    """
    nxt: dict[tuple[int, int], tuple[int, int]] = {}
    for v, order in emb.rotation:
        for i, u in enumerate(order):
            nxt[(u, v)] = (v, order[(i + 1) % len(order)])
    faces = []
    seen: set[tuple[int, int]] = set()
    for start in sorted(nxt):
        if start in seen:
            continue
        walk = []
        d = start
        while d not in seen:
            seen.add(d)
            walk.append(d)
            d = nxt[d]
        faces.append(tuple(walk))
    return tuple(faces)


def face_vertices(face: tuple[tuple[int, int], ...]) -> tuple[int, ...]:
    return tuple(d[0] for d in face)


def _cyclic_eq(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    """Equality of closed walks up to rotation and reversal."""
    if len(a) != len(b):
        return False
    dbl = b + b
    for probe in (a, a[::-1]):
        for s in range(len(b)):
            if dbl[s : s + len(a)] == probe:
                return True
    return False


def embedding_violation(
    verts, edges, emb: RotationEmbedding
) -> str | None:
    """First reason emb fails to be a disc embedding of (verts, edges).

    The graph must be connected with at least one edge; rotations must
    list exactly the neighbors; the traced faces must satisfy Euler's
    count; the declared outer walk must be one of the faces.
    """
    vs = tuple(sorted(verts))
    es = {tuple(sorted(e)) for e in edges}
    if emb.vertices() != vs:
        return "embedding names the wrong vertex set"
    adj: dict[int, set[int]] = {v: set() for v in vs}
    for u, v in es:
        if u not in adj or v not in adj:
            return f"edge ({u},{v}) leaves the vertex set"
        adj[u].add(v)
        adj[v].add(u)
    for v in vs:
        order = emb.order_at(v)
        if len(set(order)) != len(order) or set(order) != adj[v]:
            return f"rotation at {v} does not list its neighbors once each"
    if not es:
        return "nothing to embed without edges"
    reached = {vs[0]}
    frontier = [vs[0]]
    while frontier:
        nxt_front = []
        for u in frontier:
            for w in adj[u]:
                if w not in reached:
                    reached.add(w)
                    nxt_front.append(w)
        frontier = nxt_front
    if len(reached) != len(vs):
        return "graph is disconnected"
    faces = trace_faces(emb)
    if len(vs) - len(es) + len(faces) != 2:
        return "rotation system fails Euler's count"
    if not any(_cyclic_eq(face_vertices(f), emb.outer) for f in faces):
        return "outer walk is not a face"
    return None


# ---------------------------------------------------------------------------
# Certificates that four terminals cannot be linked crosswise
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ThreePlanarCertificate:
    """Deleted vertex sets, terminal order, and a disc embedding of what
    remains (with each deleted set's neighborhood completed)."""

    sets: tuple[frozenset[int], ...]
    terminals: tuple[int, ...]
    embedding: RotationEmbedding

    def to_json(self) -> dict:
        return {
            "sets": [sorted(a) for a in self.sets],
            "terminals": list(self.terminals),
            "embedding": self.embedding.to_json(),
        }

    @classmethod
    def from_json(cls, data: dict) -> ThreePlanarCertificate:
        return cls(
            tuple(frozenset(a) for a in data["sets"]),
            tuple(data["terminals"]),
            RotationEmbedding.from_json(data["embedding"]),
        )


def shadow_graph(
    G: SimpleGraph, sets: tuple[frozenset[int], ...]
) -> tuple[tuple[int, ...], frozenset[tuple[int, int]]]:
    """Delete each set and complete its neighborhood into a clique."""
    union: set[int] = set().union(*sets) if sets else set()
    verts = tuple(v for v in G.vertices() if v not in union)
    vset = set(verts)
    edges = {e for e in G.edges if e[0] in vset and e[1] in vset}
    for a in sets:
        boundary = sorted(_interface(G, a))
        for u, v in itertools.combinations(boundary, 2):
            edges.add((u, v))
    return verts, frozenset(edges)


def _interface(G: SimpleGraph, a: frozenset[int]) -> set[int]:
    out: set[int] = set()
    for v in a:
        out |= G.neighbor_set(v)
    return out - a


def _in_cyclic_order(walk: tuple[int, ...], marks: tuple[int, ...]) -> bool:
    """Do the marks occur along the closed walk in the given cyclic order,
    for some choice among repeated visits?"""
    L = len(walk)
    occ: dict[int, list[int]] = {}
    for i, v in enumerate(walk):
        occ.setdefault(v, []).append(i)
    if any(m not in occ for m in marks):
        return False
    if len(marks) <= 2:
        return True
    for c1 in occ[marks[0]]:
        p = c1
        used = 0
        for m in marks[1:]:
            step = min((q - p) % L for q in occ[m])
            used += step
            p = (p + step) % L
            if used >= L:
                break
        else:
            if used < L:
                return True
    return False


def verify_3planar_certificate(G: SimpleGraph, cert: ThreePlanarCertificate) -> bool:
    """Check every certificate condition; malformed structure raises,
    a failed condition returns False."""
    union: set[int] = set()
    for a in cert.sets:
        if not a:
            raise MalformedCertificate("empty deleted set")
        for v in a:
            if not 0 <= v < G.n:
                raise MalformedCertificate(f"deleted vertex {v} outside 0..{G.n - 1}")
        if union & a:
            raise MalformedCertificate("deleted sets overlap")
        union |= a
    for t in cert.terminals:
        if not 0 <= t < G.n:
            raise MalformedCertificate(f"terminal {t} outside 0..{G.n - 1}")
    if len(set(cert.terminals)) != len(cert.terminals):
        raise MalformedCertificate("repeated terminal")
    if union & set(cert.terminals):
        raise MalformedCertificate("terminal inside a deleted set")

    interfaces = [_interface(G, a) for a in cert.sets]
    for i, na in enumerate(interfaces):
        if len(na) > 3:
            return False
        for j, b in enumerate(cert.sets):
            if j != i and na & b:
                return False

    verts, edges = shadow_graph(G, cert.sets)
    if cert.embedding.vertices() != tuple(sorted(verts)):
        raise MalformedCertificate("embedding names the wrong vertex set")
    if embedding_violation(verts, edges, cert.embedding) is not None:
        return False

    triangles = {
        frozenset(face_vertices(f))
        for f in trace_faces(cert.embedding)
        if len(f) == 3
    }
    for na in interfaces:
        if len(na) == 3 and frozenset(na) not in triangles:
            return False

    return _in_cyclic_order(cert.embedding.outer, cert.terminals)


def two_disjoint_paths(
    G: SimpleGraph, s1: int, t1: int, s2: int, t2: int
) -> Subdivision | None:
    """Vertex disjoint s1-t1 and s2-t2 paths, or None when impossible.

    The search is exhaustive, so None is a definite answer.
    """
    if len({s1, t1, s2, t2}) != 4:
        raise PreconditionViolated("terminals must be four distinct vertices")
    res = find_subdivision(G, matching(2), Placement((s1, t1, s2, t2)))
    return res.subdivision if res.status == LINKED else None


# ---------------------------------------------------------------------------
# Discharge witnesses on disc triangulations
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DischargeWitness:
    """Either an interior vertex of degree at most 6, or an outer-cycle
    edge, both ends clear of the excluded pair, with degree sum at most 7."""

    kind: str
    vertex: int | None = None
    edge: tuple[int, int] | None = None

    def to_json(self) -> dict:
        out: dict = {"kind": self.kind}
        if self.vertex is not None:
            out["vertex"] = self.vertex
        if self.edge is not None:
            out["edge"] = list(self.edge)
        return out


def discharge_witness(
    H: SimpleGraph, emb: RotationEmbedding, x: int, y: int
) -> DischargeWitness:
    """Light spot on a 3-connected disc-embedded graph, avoiding x and y.

    Scans the outer cycle's edges in walk order first, then interior
    vertices in ascending order.
    """
    if vertex_connectivity(H) < 3:
        raise NotThreeConnected("graph is not 3-connected")
    viol = embedding_violation(tuple(H.vertices()), H.edges, emb)
    if viol is not None:
        raise NotPlanar(viol)
    Z = emb.outer
    if len(set(Z)) != len(Z):
        raise NotPlanar("outer walk revisits a vertex")
    if x == y or x not in set(Z) or y not in set(Z):
        raise PreconditionViolated("x and y must be distinct outer vertices")
    for i in range(len(Z)):
        u, v = Z[i], Z[(i + 1) % len(Z)]
        if {u, v} & {x, y}:
            continue
        if H.degree(u) + H.degree(v) <= 7:
            return DischargeWitness("edge", edge=(u, v))
    zset = set(Z)
    for v in H.vertices():
        if v not in zset and H.degree(v) <= 6:
            return DischargeWitness("vertex", vertex=v)
    raise WitnessNotFound("no light interior vertex or outer edge")


# ---------------------------------------------------------------------------
# Generators
# ---------------------------------------------------------------------------


def wheel_embedding(rim: int) -> tuple[SimpleGraph, RotationEmbedding]:
    """Wheel with `rim` outer vertices 0..rim-1 and hub `rim`, embedded
    with the rim as the outer face."""
    if rim < 3:
        raise PreconditionViolated(f"wheel rim needs >= 3 vertices, got {rim}")
    edges = [(i, (i + 1) % rim) for i in range(rim)] + [(i, rim) for i in range(rim)]
    G = SimpleGraph.from_edges(rim + 1, edges)
    rot: dict[int, tuple[int, ...]] = {
        i: ((i + 1) % rim, rim, (i - 1) % rim) for i in range(rim)
    }
    rot[rim] = tuple(range(rim))
    return G, RotationEmbedding.make(rot, tuple(range(rim)))


def disc_triangulation(
    rim: int, inserts: int, seed: int
) -> tuple[SimpleGraph, RotationEmbedding]:
    """Random 3-connected disc triangulation: a wheel with `inserts`
    vertices stellated one by one into random interior triangles."""
    G, emb = wheel_embedding(rim)
    rng = random.Random(seed)
    rot = {v: list(o) for v, o in emb.rotation}
    edges = set(G.edges)
    n = G.n
    for _ in range(inserts):
        faces = trace_faces(emb)
        inner = [
            face_vertices(f)
            for f in faces
            if len(f) == 3 and not _cyclic_eq(face_vertices(f), emb.outer)
        ]
        a, b, c = inner[rng.randrange(len(inner))]
        w = n
        n += 1
        rot[w] = [a, c, b]
        for prev, here in ((a, b), (b, c), (c, a)):
            at = rot[here].index(prev)
            rot[here].insert(at + 1, w)
        edges |= {(a, w), (b, w), (c, w)}
        emb = RotationEmbedding.make(
            {v: tuple(o) for v, o in rot.items()}, emb.outer
        )
    G = SimpleGraph.from_edges(n, sorted(tuple(sorted(e)) for e in edges))
    viol = embedding_violation(tuple(G.vertices()), G.edges, emb)
    if viol is not None:
        raise NotPlanar(f"construction broke its own embedding: {viol}")
    return G, emb

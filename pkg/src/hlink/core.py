"""Value types for hosts, patterns, placements, paths and subdivisions.

A host graph is simple and undirected; a pattern is a small multigraph
whose edges we want realised as internally disjoint paths in the host.
All types here are immutable: solvers share them freely across workers
without copying.

Vertex ids are dense integers 0..n-1 on both sides.  Pattern edges are
kept as a sorted tuple with repeats, so "the i-th pattern edge" is a
stable notion used by Subdivision.routes.
"""

from __future__ import annotations

import hashlib
import itertools
import json
from dataclasses import dataclass, field

from .errors import (
    ArityMismatch,
    ParameterError,
    ParseError,
    RangeError,
    VertexNotOnCycle,
)

# ---------------------------------------------------------------------------
# Host graphs
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SimpleGraph:
    """Immutable simple undirected graph on vertices 0..n-1.

    Build with :meth:`from_edges`; the raw constructor expects an already
    canonical edge tuple (each pair sorted, whole tuple sorted, no
    duplicates, no loops) and is not validated again.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    _adj: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)
    _aset: tuple[frozenset[int], ...] = field(init=False, repr=False, compare=False)
    _bits: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        nbr: list[list[int]] = [[] for _ in range(self.n)]
        bits = [0] * self.n
        for u, v in self.edges:
            nbr[u].append(v)
            nbr[v].append(u)
            bits[u] |= 1 << v
            bits[v] |= 1 << u
        object.__setattr__(self, "_adj", tuple(tuple(sorted(a)) for a in nbr))
        object.__setattr__(self, "_aset", tuple(frozenset(a) for a in nbr))
        object.__setattr__(self, "_bits", tuple(bits))

    # -- construction -------------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, edges) -> SimpleGraph:
        """Build a graph, validating ids and rejecting loops and repeats.

        Raises RangeError for out-of-range ids and ParameterError for
        loops, duplicate edges, or a negative vertex count.
        """
        if n < 0:
            raise ParameterError(f"vertex count must be >= 0, got {n}")
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise RangeError(f"edge ({u},{v}) outside 0..{n - 1}")
            if u == v:
                raise ParameterError(f"loop at vertex {u}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise ParameterError(f"duplicate edge ({e[0]},{e[1]})")
            seen.add(e)
        return cls(n, tuple(sorted(seen)))

    @classmethod
    def complete(cls, n: int) -> SimpleGraph:
        return cls(n, tuple((u, v) for u in range(n) for v in range(u + 1, n)))

    @classmethod
    def cycle(cls, n: int) -> SimpleGraph:
        if n < 3:
            raise ParameterError(f"cycle needs >= 3 vertices, got {n}")
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def circulant(cls, n: int, offsets) -> SimpleGraph:
        """Circulant graph: i ~ i +- d (mod n) for each offset d."""
        es = set()
        for i in range(n):
            for d in offsets:
                j = (i + d) % n
                if i != j:
                    es.add((min(i, j), max(i, j)))
        return cls.from_edges(n, es)

    # -- queries ------------------------------------------------------------

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def neighbor_set(self, v: int) -> frozenset[int]:
        return self._aset[v]

    def neighbor_bits(self, v: int) -> int:
        return self._bits[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._aset[u]

    def vertices(self) -> range:
        return range(self.n)

    def is_path(self, seq) -> bool:
        """True if seq is a sequence of distinct vertices joined by edges."""
        vs = tuple(seq)
        if len(vs) != len(set(vs)):
            return False
        if any(not (0 <= v < self.n) for v in vs):
            return False
        return all(self.has_edge(a, b) for a, b in zip(vs, vs[1:]))

    def is_cycle(self, seq) -> bool:
        vs = tuple(seq)
        return len(vs) >= 3 and self.is_path(vs) and self.has_edge(vs[-1], vs[0])

    # -- derived graphs -----------------------------------------------------

    def add_edges(self, extra) -> SimpleGraph:
        es = set(self.edges)
        for u, v in extra:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise RangeError(f"edge ({u},{v}) outside 0..{self.n - 1}")
            if u == v:
                raise ParameterError(f"loop at vertex {u}")
            es.add((u, v) if u < v else (v, u))
        return SimpleGraph(self.n, tuple(sorted(es)))

    def induced(self, keep) -> tuple[SimpleGraph, dict[int, int], tuple[int, ...]]:
        """Induced subgraph on `keep`, renumbered densely.

        Returns (subgraph, old->new map, new->old tuple); `keep` order is
        ignored, new ids follow ascending old ids.
        """
        old = tuple(sorted(set(keep)))
        to_new = {v: i for i, v in enumerate(old)}
        es = [
            (to_new[u], to_new[v])
            for u, v in self.edges
            if u in to_new and v in to_new
        ]
        return SimpleGraph(len(old), tuple(sorted(es))), to_new, old

    def connected_components(self, within=None) -> list[frozenset[int]]:
        """Components of the subgraph induced on `within` (default: all)."""
        allowed = set(self.vertices()) if within is None else set(within)
        comps: list[frozenset[int]] = []
        seen: set[int] = set()
        for s in sorted(allowed):
            if s in seen:
                continue
            stack, comp = [s], {s}
            seen.add(s)
            while stack:
                x = stack.pop()
                for y in self._adj[x]:
                    if y in allowed and y not in comp:
                        comp.add(y)
                        seen.add(y)
                        stack.append(y)
            comps.append(frozenset(comp))
        return comps


# ---------------------------------------------------------------------------
# Patterns
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PatternMultigraph:
    """Small loopless multigraph whose subdivisions we search for.

    Edges are a sorted tuple of sorted pairs; parallel edges appear as
    repeated entries.  Position in `edges` identifies an edge instance.
    """

    m: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        for u, v in self.edges:
            if not (0 <= u < self.m and 0 <= v < self.m):
                raise RangeError(f"pattern edge ({u},{v}) outside 0..{self.m - 1}")
            if u == v:
                raise ParameterError("pattern loops are not allowed")

    @classmethod
    def from_pairs(cls, m: int, pairs) -> PatternMultigraph:
        canon = sorted(tuple(sorted(p)) for p in pairs)
        return cls(m, tuple((u, v) for u, v in canon))

    def degree(self, v: int) -> int:
        return sum((u == v) + (w == v) for u, w in self.edges)

    def automorphisms(self) -> tuple[tuple[int, ...], ...]:
        """All vertex permutations preserving the edge multiset.

        Computed by direct enumeration, which is exact for the small
        named patterns; patterns with more than 8 vertices fall back to
        the identity alone (sound, merely less quotienting).
        """
        return _automorphisms_of(self)


def _edge_key(edges) -> tuple[tuple[int, int], ...]:
    return tuple(sorted(tuple(sorted(e)) for e in edges))


_AUTO_CACHE: dict[tuple[int, tuple[tuple[int, int], ...]], tuple[tuple[int, ...], ...]] = {}


def _automorphisms_of(H: PatternMultigraph) -> tuple[tuple[int, ...], ...]:
    key = (H.m, H.edges)
    hit = _AUTO_CACHE.get(key)
    if hit is not None:
        return hit
    if H.m > 8:
        result: tuple[tuple[int, ...], ...] = (tuple(range(H.m)),)
    else:
        target = _edge_key(H.edges)
        result = tuple(
            perm
            for perm in itertools.permutations(range(H.m))
            if _edge_key((perm[u], perm[v]) for u, v in H.edges) == target
        )
    _AUTO_CACHE[key] = result
    return result


def fat_triangle(k1: int, k2: int, k3: int) -> PatternMultigraph:
    """Triangle on v1,v2,v3 with k1, k2, k3 parallel edges per side.

    Side i joins v_i and v_{i+1} (indices mod 3), so k1 counts v1v2
    edges, k2 counts v2v3 edges and k3 counts v3v1 edges.  Pattern
    vertex ids are v1=0, v2=1, v3=2.
    """
    if min(k1, k2, k3) < 0:
        raise ParameterError("side multiplicities must be >= 0")
    pairs = [(0, 1)] * k1 + [(1, 2)] * k2 + [(0, 2)] * k3
    return PatternMultigraph.from_pairs(3, pairs)


def kite() -> PatternMultigraph:
    """K_4 minus two edges at a vertex: a triangle with a pendant edge.

    Pattern ids: 0 is the degree-3 centre u2, 1 and 3... vertex 1 = u1,
    vertex 2 = u3 (the other triangle corners), vertex 3 = u4 (pendant).
    Edges: u2u1, u1u3, u3u2, u2u4.
    """
    return PatternMultigraph.from_pairs(4, [(0, 1), (1, 2), (2, 0), (0, 3)])


def bond(k: int) -> PatternMultigraph:
    """Two vertices joined by k parallel edges."""
    if k < 1:
        raise ParameterError("bond needs k >= 1")
    return PatternMultigraph.from_pairs(2, [(0, 1)] * k)


def matching(k: int) -> PatternMultigraph:
    """k independent edges on 2k vertices: edge i joins 2i and 2i+1."""
    if k < 1:
        raise ParameterError("matching needs k >= 1")
    return PatternMultigraph.from_pairs(2 * k, [(2 * i, 2 * i + 1) for i in range(k)])


def cycle_pattern(k: int) -> PatternMultigraph:
    if k < 3:
        raise ParameterError("cycle needs k >= 3")
    return PatternMultigraph.from_pairs(k, [(i, (i + 1) % k) for i in range(k)])


def path_pattern(k: int) -> PatternMultigraph:
    """Path on k vertices (k-1 edges), ids in path order."""
    if k < 2:
        raise ParameterError("path needs k >= 2")
    return PatternMultigraph.from_pairs(k, [(i, i + 1) for i in range(k - 1)])


# ---------------------------------------------------------------------------
# Placements, paths, cycles
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Placement:
    """Injective assignment of pattern vertices to host vertices."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(set(self.images)) != len(self.images):
            raise ParameterError(f"placement not injective: {self.images}")

    def __getitem__(self, i: int) -> int:
        return self.images[i]

    def __len__(self) -> int:
        return len(self.images)

    def __iter__(self):
        return iter(self.images)


def check_placement(H: PatternMultigraph, G: SimpleGraph, phi: Placement) -> None:
    """Raise unless phi maps every pattern vertex to a distinct host vertex."""
    if len(phi) != H.m:
        raise ArityMismatch(f"placement has {len(phi)} images, pattern has {H.m} vertices")
    for v in phi:
        if not (0 <= v < G.n):
            raise RangeError(f"placement image {v} outside 0..{G.n - 1}")


@dataclass(frozen=True)
class PathSeq:
    """A path given as its vertex sequence.

    Distinctness is enforced here; adjacency depends on a host graph and
    is checked by :meth:`valid_in` and by every operation that consumes
    paths.  The empty sequence is allowed as a degenerate value because
    separating pairs use possibly-empty path slots; a single vertex is a
    trivial path.
    """

    vertices: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(set(self.vertices)) != len(self.vertices):
            raise ParameterError(f"path repeats a vertex: {self.vertices}")

    def __len__(self) -> int:
        return len(self.vertices)

    def __contains__(self, v: int) -> bool:
        return v in self.vertices

    def __iter__(self):
        return iter(self.vertices)

    @property
    def is_empty(self) -> bool:
        return not self.vertices

    @property
    def first(self) -> int:
        if not self.vertices:
            raise ParameterError("empty path has no endpoints")
        return self.vertices[0]

    @property
    def last(self) -> int:
        if not self.vertices:
            raise ParameterError("empty path has no endpoints")
        return self.vertices[-1]

    @property
    def ends(self) -> frozenset[int]:
        return frozenset((self.first, self.last))

    @property
    def interior(self) -> tuple[int, ...]:
        return self.vertices[1:-1]

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)

    def valid_in(self, G: SimpleGraph) -> bool:
        if any(not (0 <= v < G.n) for v in self.vertices):
            return False
        return all(G.has_edge(a, b) for a, b in zip(self.vertices, self.vertices[1:]))

    def reverse(self) -> PathSeq:
        return PathSeq(self.vertices[::-1])

    def position(self, v: int) -> int:
        return self.vertices.index(v)

    def segment(self, a: int, b: int) -> PathSeq:
        """Subpath between vertices a and b, inclusive, in a-to-b order."""
        i, j = self.vertices.index(a), self.vertices.index(b)
        if i <= j:
            return PathSeq(self.vertices[i : j + 1])
        return PathSeq(self.vertices[j : i + 1][::-1])

    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(
            (a, b) if a < b else (b, a)
            for a, b in zip(self.vertices, self.vertices[1:])
        )


def join_paths(*parts: PathSeq) -> PathSeq:
    """Concatenate path segments that overlap in exactly their junction vertex."""
    verts: list[int] = []
    for p in parts:
        if p.is_empty:
            continue
        if not verts:
            verts.extend(p.vertices)
        elif p.vertices[0] == verts[-1]:
            verts.extend(p.vertices[1:])
        elif p.vertices[-1] == verts[-1]:
            verts.extend(p.vertices[-2::-1])
        else:
            raise ParameterError(
                f"segments do not share a junction: ...{verts[-1]} vs {p.vertices}"
            )
    return PathSeq(tuple(verts))


@dataclass(frozen=True)
class OrientedCycle:
    """Cycle as a cyclic vertex sequence; the sequence order is the orientation."""

    vertices: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.vertices) < 3:
            raise ParameterError(f"cycle needs >= 3 vertices: {self.vertices}")
        if len(set(self.vertices)) != len(self.vertices):
            raise ParameterError(f"cycle repeats a vertex: {self.vertices}")

    def __len__(self) -> int:
        return len(self.vertices)

    def __contains__(self, v: int) -> bool:
        return v in self.vertices

    def __iter__(self):
        return iter(self.vertices)

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)

    def valid_in(self, G: SimpleGraph) -> bool:
        return G.is_cycle(self.vertices)

    def reverse(self) -> OrientedCycle:
        return OrientedCycle(self.vertices[:1] + self.vertices[:0:-1])

    def position(self, v: int) -> int:
        try:
            return self.vertices.index(v)
        except ValueError:
            raise VertexNotOnCycle(f"vertex {v} not on cycle {self.vertices}") from None

    def successor(self, v: int) -> int:
        return self.vertices[(self.position(v) + 1) % len(self.vertices)]

    def edge_set(self) -> frozenset[tuple[int, int]]:
        vs = self.vertices
        return frozenset(
            (a, b) if a < b else (b, a)
            for a, b in zip(vs, vs[1:] + vs[:1])
        )


def interval(
    C: OrientedCycle, u: int, v: int, include_u: bool = True, include_v: bool = True
) -> PathSeq:
    """Vertices from u to v along C's orientation, endpoints per the flags.

    With both flags closed this is the subpath C[u,v]; open flags drop
    the corresponding endpoint and the result may be empty.  u == v is
    allowed and stands for the single-vertex subpath, not the whole
    cycle.
    """
    i, j = C.position(u), C.position(v)
    n = len(C)
    span = (j - i) % n
    verts = [C.vertices[(i + t) % n] for t in range(span + 1)]
    if not include_u:
        verts = verts[1:]
    if not include_v:
        verts = verts[:-1]
    return PathSeq(tuple(verts))


def cycle_order_matches(C: OrientedCycle, marks: tuple[int, ...]) -> bool:
    """True if the distinct vertices `marks` occur on C in the given cyclic
    order, under either orientation."""
    pos = [C.position(v) for v in marks]
    n = len(C)
    for direction in (1, -1):
        gaps = [((pos[(t + 1) % len(pos)] - pos[t]) * direction) % n for t in range(len(pos))]
        if sum(gaps) == n and all(g > 0 for g in gaps):
            return True
    return False


# ---------------------------------------------------------------------------
# Subdivisions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Subdivision:
    """A realised pattern: routes[i] is the host path for pattern edge i."""

    placement: Placement
    routes: tuple[PathSeq, ...]

    def all_vertices(self) -> frozenset[int]:
        out = set(self.placement)
        for r in self.routes:
            out.update(r.vertices)
        return frozenset(out)


def subdivision_violation(
    G: SimpleGraph, H: PatternMultigraph, S: Subdivision
) -> str | None:
    """Machine-readable reason S is not a valid H-subdivision, or None.

    Raises ArityMismatch when the route count disagrees with the pattern
    edge count; every other defect is reported as a reason code.
    """
    if len(S.routes) != len(H.edges):
        raise ArityMismatch(
            f"{len(S.routes)} routes for {len(H.edges)} pattern edges"
        )
    phi = S.placement
    if len(phi) != H.m or any(not (0 <= v < G.n) for v in phi):
        return "placement-invalid"
    placed = set(phi)
    seen_interiors: set[int] = set()
    seen_trivial: set[tuple[int, int]] = set()
    for (u, v), route in zip(H.edges, S.routes):
        if route.is_empty or not route.valid_in(G):
            return "route-not-path"
        a, b = phi[u], phi[v]
        if {route.first, route.last} != {a, b}:
            return "route-endpoint-mismatch"
        inter = route.interior
        if placed.intersection(inter):
            return "route-interior-hits-placed"
        if seen_interiors.intersection(inter):
            return "interiors-overlap"
        seen_interiors.update(inter)
        if not inter:
            # Parallel pattern edges must use distinct host paths; two
            # edge-routes on the same endpoint pair are the same path.
            key = (min(a, b), max(a, b))
            if key in seen_trivial:
                return "parallel-routes-identical"
            seen_trivial.add(key)
    return None


def validate_subdivision(G: SimpleGraph, H: PatternMultigraph, S: Subdivision) -> bool:
    """True iff S realises H in G; see subdivision_violation for reasons."""
    return subdivision_violation(G, H, S) is None


# ---------------------------------------------------------------------------
# Serialisation
# ---------------------------------------------------------------------------


def parse_graph(data: bytes | str) -> SimpleGraph:
    """Parse the edge-list text format.

    A header line ``n=<count>`` is followed by one ``u v`` pair per
    line; ``#`` starts a comment and blank lines are ignored.
    """
    text = data.decode() if isinstance(data, bytes) else data
    n: int | None = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if n is None:
            if not line.startswith("n="):
                raise ParseError("expected header 'n=<count>'", lineno)
            try:
                n = int(line[2:])
            except ValueError:
                raise ParseError(f"bad vertex count {line[2:]!r}", lineno) from None
            if n < 0:
                raise ParseError(f"negative vertex count {n}", lineno)
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected 'u v', got {line!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"non-integer endpoint in {line!r}", lineno) from None
        if u == v:
            raise ParseError(f"loop at vertex {u}", lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise RangeError(f"line {lineno}: edge ({u},{v}) outside 0..{n - 1}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise ParseError(f"duplicate edge ({u},{v})", lineno)
        seen.add(key)
        edges.append(key)
    if n is None:
        raise ParseError("missing header 'n=<count>'")
    return SimpleGraph(n, tuple(sorted(seen)))


def emit_graph(G: SimpleGraph) -> bytes:
    """Canonical text form: header then edges sorted lexicographically."""
    lines = [f"n={G.n}"] + [f"{u} {v}" for u, v in G.edges]
    return ("\n".join(lines) + "\n").encode()


def graph_to_json(G: SimpleGraph) -> dict:
    return {"n": G.n, "edges": [[u, v] for u, v in G.edges]}


def graph_from_json(obj) -> SimpleGraph:
    if isinstance(obj, (str, bytes)):
        try:
            obj = json.loads(obj)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad JSON: {exc}") from None
    if not isinstance(obj, dict) or "n" not in obj or "edges" not in obj:
        raise ParseError("graph JSON needs keys 'n' and 'edges'")
    n = obj["n"]
    if not isinstance(n, int):
        raise ParseError("'n' must be an integer")
    edges = []
    for e in obj["edges"]:
        if not (isinstance(e, (list, tuple)) and len(e) == 2):
            raise ParseError(f"bad edge entry {e!r}")
        u, v = e
        if u == v:
            raise ParseError(f"loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise RangeError(f"edge ({u},{v}) outside 0..{n - 1}")
        edges.append((u, v))
    try:
        return SimpleGraph.from_edges(n, edges)
    except ParameterError as exc:
        raise ParseError(str(exc)) from None


def graph_hash(G: SimpleGraph) -> str:
    """Short stable digest of the canonical serialisation."""
    return hashlib.sha256(emit_graph(G)).hexdigest()[:16]

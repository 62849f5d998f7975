"""Maximum disjoint good paths and the partition obstruction.

A path is good when its two ends lie in different terminal groups (a
single vertex belonging to two groups counts).  One side of the theory
finds a maximum system of vertex-disjoint good paths by branch and
bound; the other searches for an obstruction: a vertex set W and a
partition into parts Y_j with interface sets X_j ⊆ Y_j, whose value
|W| + Σ ⌊|X_j|/2⌋ bounds every system from above.  On desk-scale
hosts both sides are exhaustive, so exactly one of "k paths exist" and
"an obstruction of value < k exists" holds.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .core import PathSeq, SimpleGraph
from .errors import (
    Inconclusive,
    MalformedCertificate,
    ParameterError,
    SearchBudgetExceeded,
)
from .search import SearchBudget

# ---------------------------------------------------------------------------
# Types
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GroupedTerminals:
    """Terminal groups L_1..L_t; groups may overlap and may be empty."""

    groups: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        if len(self.groups) < 2:
            raise ParameterError("need at least two terminal groups")

    @classmethod
    def of(cls, *parts) -> GroupedTerminals:
        return cls(tuple(frozenset(p) for p in parts))

    @property
    def union(self) -> frozenset[int]:
        out: set[int] = set()
        for g in self.groups:
            out |= g
        return frozenset(out)

    def memberships(self, v: int) -> tuple[int, ...]:
        return tuple(i for i, g in enumerate(self.groups) if v in g)


@dataclass(frozen=True)
class MaderCertificate:
    """Obstruction (W, Y_1..Y_n, X_1..X_n) aimed at a target k."""

    W: frozenset[int]
    Ys: tuple[frozenset[int], ...]
    Xs: tuple[frozenset[int], ...]
    k: int

    @classmethod
    def make(cls, W, Ys, Xs, k: int) -> MaderCertificate:
        """Canonical form: empty parts dropped, everything frozen."""
        pairs = [(frozenset(y), frozenset(x)) for y, x in zip(Ys, Xs) if y]
        return cls(
            frozenset(W),
            tuple(y for y, _ in pairs),
            tuple(x for _, x in pairs),
            k,
        )

    @property
    def value(self) -> int:
        return len(self.W) + sum(len(x) // 2 for x in self.Xs)

    def to_json(self) -> dict:
        return {
            "W": sorted(self.W),
            "Y": [sorted(y) for y in self.Ys],
            "X": [sorted(x) for x in self.Xs],
            "k": self.k,
        }

    @classmethod
    def from_json(cls, obj: dict) -> MaderCertificate:
        try:
            return cls.make(obj["W"], obj["Y"], obj["X"], int(obj["k"]))
        except (KeyError, TypeError) as exc:
            raise MalformedCertificate(f"bad certificate JSON: {exc}") from None


@dataclass(frozen=True)
class GoodPathsResult:
    count: int
    paths: tuple[PathSeq, ...]
    complete: bool


@dataclass(frozen=True)
class CertificateSearch:
    certificate: MaderCertificate | None
    complete: bool
    tried: int


# ---------------------------------------------------------------------------
# Maximum disjoint good paths
# ---------------------------------------------------------------------------


def _group_masks(G: SimpleGraph, groups: GroupedTerminals) -> list[int]:
    masks = [0] * G.n
    for i, g in enumerate(groups.groups):
        for v in g:
            if not (0 <= v < G.n):
                raise ParameterError(f"terminal {v} outside 0..{G.n - 1}")
            masks[v] |= 1 << i
    return masks


def _endpoint_bound(masks, avail_terms) -> int:
    """Upper bound on additional disjoint good paths from free terminals.

    Each further path consumes two free terminals, except trivial paths
    which consume one vertex lying in two groups.
    """
    t2 = sum(1 for v in avail_terms if masks[v] & (masks[v] - 1))
    t1 = len(avail_terms)
    return t2 + (t1 - t2) // 2


def max_good_paths(
    G: SimpleGraph,
    groups: GroupedTerminals,
    budget: SearchBudget | None = None,
    target: int | None = None,
) -> GoodPathsResult:
    """A maximum system of mutually vertex-disjoint good paths.

    With `target` set, the search stops as soon as that many paths are
    found (the reported system need not be maximum then).  `complete`
    is False when the budget expired or an early stop triggered before
    the space was exhausted.
    """
    masks = _group_masks(G, groups)
    best: list[tuple[int, ...]] = []
    early: list[tuple[int, ...]] | None = None

    def spend() -> None:
        if budget is not None:
            budget.spend()

    class _Stop(Exception):
        pass

    def paths_from(v: int, avail: set[int], partners: list[int]):
        """Good paths with min endpoint v, ascending length."""
        if masks[v] & (masks[v] - 1):
            yield (v,)
        want = set(partners)
        for limit in range(1, len(avail)):
            stack_path = [v]
            on = {v}

            def deepen(remaining: int):
                spend()
                x = stack_path[-1]
                if remaining == 0:
                    return
                for y in G.neighbors(x):
                    if y not in avail or y in on:
                        continue
                    if remaining == 1:
                        if y in want:
                            yield tuple(stack_path) + (y,)
                        continue
                    stack_path.append(y)
                    on.add(y)
                    yield from deepen(remaining - 1)
                    stack_path.pop()
                    on.remove(y)

            yield from deepen(limit)

    def search(avail: set[int], terms: list[int], chosen: list[tuple[int, ...]]):
        nonlocal early
        spend()
        if target is not None and len(chosen) >= target:
            early = list(chosen)
            raise _Stop
        if len(chosen) > len(best):
            best[:] = chosen
        goal = target if target is not None else len(best) + 1
        if len(chosen) + _endpoint_bound(masks, terms) < goal:
            return
        if not terms:
            return
        v = terms[0]
        rest = terms[1:]
        partners = [u for u in rest if _distinct_groups(masks[v], masks[u])]
        for p in paths_from(v, avail, partners):
            used = set(p)
            chosen.append(p)
            search(avail - used, [u for u in rest if u not in used], chosen)
            chosen.pop()
        # pivot never an endpoint; it may still serve as an interior vertex
        search(avail, rest, chosen)

    terms0 = sorted(v for v in G.vertices() if masks[v])
    complete = True
    try:
        search(set(G.vertices()), terms0, [])
    except _Stop:
        complete = False
    except SearchBudgetExceeded:
        complete = False
    system = early if early is not None else best
    return GoodPathsResult(
        count=len(system),
        paths=tuple(PathSeq(p) for p in system),
        complete=complete,
    )


def _distinct_groups(mask_a: int, mask_b: int) -> bool:
    """Can ends with these membership masks belong to two distinct groups?"""
    if mask_a == 0 or mask_b == 0:
        return False
    both = mask_a & mask_b
    if mask_a != both or mask_b != both:
        return True
    # identical masks: need two set bits
    return bool(both & (both - 1))


# ---------------------------------------------------------------------------
# Certificate verification
# ---------------------------------------------------------------------------


def _minimal_interface(G: SimpleGraph, groups_union: frozenset[int], W, Y) -> frozenset[int]:
    """Smallest X ⊆ Y compatible with condition (b)."""
    wy = W | Y
    return frozenset(
        v
        for v in Y
        if v in groups_union or not G.neighbor_set(v) <= wy
    )


def _condition_c(G: SimpleGraph, groups: GroupedTerminals, W, Ys) -> bool:
    """No good path outside W survives once intra-part edges are dropped.

    Equivalent formulation: in G − W with every edge inside a single
    part deleted, no component touches two distinct groups, where a lone
    vertex lying in two groups already touches two.
    """
    part_of: dict[int, int] = {}
    for j, Y in enumerate(Ys):
        for v in Y:
            part_of[v] = j
    masks = _group_masks(G, groups)
    alive = [v for v in G.vertices() if v not in W]
    seen: set[int] = set()
    for s in alive:
        if s in seen:
            continue
        comp = [s]
        seen.add(s)
        stack = [s]
        while stack:
            x = stack.pop()
            for y in G.neighbors(x):
                if y in W or y in seen:
                    continue
                if part_of.get(x) is not None and part_of.get(x) == part_of.get(y):
                    continue
                seen.add(y)
                comp.append(y)
                stack.append(y)
        touched = 0
        for v in comp:
            touched |= masks[v]
            if touched & (touched - 1):
                return False
    return True


def verify_certificate(
    G: SimpleGraph, groups: GroupedTerminals, cert: MaderCertificate
) -> bool:
    """Check validity for cert.k: value below k plus conditions (b), (c).

    Vertices missing from W and the parts are adopted as singleton parts
    with their forced interface sets, so sparse certificates that only
    mention the interesting region still verify.  Overlapping parts are
    malformed.
    """
    V = set(G.vertices())
    if len(cert.Ys) != len(cert.Xs):
        raise MalformedCertificate("part and interface counts differ")
    claimed: set[int] = set()
    for name, part in [("W", cert.W), *[(f"Y_{j}", y) for j, y in enumerate(cert.Ys)]]:
        if not set(part) <= V:
            raise MalformedCertificate(f"{name} mentions vertices outside the host")
        if claimed & set(part):
            raise MalformedCertificate(f"{name} overlaps an earlier part")
        claimed |= set(part)
    for j, (Y, X) in enumerate(zip(cert.Ys, cert.Xs)):
        if not X <= Y:
            raise MalformedCertificate(f"X_{j} is not contained in Y_{j}")
        if not Y:
            raise MalformedCertificate(f"Y_{j} is empty; canonical form forbids it")

    gu = groups.union
    Ys = list(cert.Ys)
    Xs = list(cert.Xs)
    for v in sorted(V - claimed):
        Y = frozenset((v,))
        Ys.append(Y)
        Xs.append(_minimal_interface(G, gu, cert.W, Y))

    value = len(cert.W) + sum(len(x) // 2 for x in Xs)
    if value >= cert.k:
        return False
    for Y, X in zip(Ys, Xs):
        wy = cert.W | Y
        for v in Y - X:
            if not G.neighbor_set(v) <= wy:
                return False
        for g in groups.groups:
            if not (Y & g) <= X:
                return False
    return _condition_c(G, groups, cert.W, Ys)


# ---------------------------------------------------------------------------
# Certificate search
# ---------------------------------------------------------------------------


def _set_partitions(items: tuple[int, ...]):
    """All partitions of items into nonempty blocks, deterministic order."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for tail in _set_partitions(rest):
        for i in range(len(tail)):
            yield tail[:i] + [tail[i] + [first]] + tail[i + 1 :]
        yield tail + [[first]]


def find_certificate(
    G: SimpleGraph,
    groups: GroupedTerminals,
    k: int,
    budget: SearchBudget | None = None,
) -> CertificateSearch:
    """Exhaustive hunt for a valid obstruction with value < k.

    Interface sets are forced: given W and a part Y, the smallest legal
    X consists of the terminals in Y plus the vertices with neighbours
    outside W ∪ Y, and shrinking X only helps the value, so only
    (W, partition) pairs are enumerated.  A None certificate together
    with complete=True means none exists; complete=False means the
    budget expired first.
    """
    if k <= 0:
        return CertificateSearch(None, True, 0)
    _group_masks(G, groups)  # validates terminal ids against the host
    gu = groups.union
    verts = tuple(G.vertices())
    tried = 0
    try:
        for w_size in range(min(k, G.n + 1)):
            for W_tuple in combinations(verts, w_size):
                W = frozenset(W_tuple)
                rest = tuple(v for v in verts if v not in W)
                allowance = k - 1 - len(W)
                for blocks in _set_partitions(rest):
                    tried += 1
                    if budget is not None:
                        budget.spend()
                    value = 0
                    Ys: list[frozenset[int]] = []
                    Xs: list[frozenset[int]] = []
                    ok = True
                    for blk in blocks:
                        Y = frozenset(blk)
                        X = _minimal_interface(G, gu, W, Y)
                        value += len(X) // 2
                        if value > allowance:
                            ok = False
                            break
                        Ys.append(Y)
                        Xs.append(X)
                    if not ok:
                        continue
                    if _condition_c(G, groups, W, Ys):
                        cert = MaderCertificate.make(W, Ys, Xs, k)
                        return CertificateSearch(cert, True, tried)
    except SearchBudgetExceeded:
        return CertificateSearch(None, False, tried)
    return CertificateSearch(None, True, tried)


def dichotomy_check(G: SimpleGraph, groups: GroupedTerminals, k: int) -> bool:
    """True iff exactly one of "k disjoint good paths" / "valid obstruction"
    holds; raises Inconclusive if either exhaustive side was cut short."""
    found = max_good_paths(G, groups, target=k)
    if found.count < k and not found.complete:
        raise Inconclusive("path search was cut short")
    cert = find_certificate(G, groups, k)
    if not cert.complete:
        raise Inconclusive("certificate search was cut short")
    have_paths = found.count >= k
    have_cert = cert.certificate is not None
    return have_paths != have_cert

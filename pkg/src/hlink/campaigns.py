"""Seeded verification campaigns behind the command line `verify` mode.

Each campaign replays one of the toolkit's headline results on a
deterministic instance family and reports one verdict per instance.
Verdicts are a pure function of (theorem, n, count, seed, budget):
per-instance seeds are derived arithmetically, workers rebuild every
graph from its descriptor, and records are sorted by instance id, so
running with more jobs changes wall times but nothing else.

Verdicts: "pass" means the claimed property held, "fail" means it was
refuted on that instance (a falsification-grade event), "budget" means
a search was cut short before it could decide.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from itertools import combinations, permutations

from .connectivity import (
    GENERATOR_ID,
    random_k_connected,
    sharpness_gadget,
    vertex_connectivity,
)
from .core import (
    OrientedCycle,
    PathSeq,
    SimpleGraph,
    fat_triangle,
    graph_hash,
    interval,
)
from .errors import (
    GenerationBudgetExceeded,
    HlinkError,
    Inconclusive,
    ParameterError,
    SearchBudgetExceeded,
)
from .flowers import find_flower, verify_flower
from .linkage import (
    EXHAUSTED,
    NOT_LINKED,
    find_fat_triangle_linkage,
    find_kite_linkage,
    find_subdivision,
    placements_to_check,
)
from .mader import (
    GroupedTerminals,
    dichotomy_check,
    find_certificate,
    max_good_paths,
    verify_certificate,
)
from .planar import disc_triangulation, discharge_witness
from .search import SearchBudget
from .separating import (
    SeparatingPair,
    connsep_witnesses,
    find_special_separating_pair,
    verify_separating_pair,
)

SCHEMA = "hlink-report/1"
DEFAULT_BUDGET = 10_000_000

THEOREMS = (
    "thm1.2",
    "sharpness",
    "thm2.1",
    "thm5.2",
    "thm1.3",
    "lemma3.1",
    "lemma3.3",
)


# ---------------------------------------------------------------------------
# Report shapes
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class InstanceRecord:
    id: int
    label: str
    graph: str | None
    status: str
    detail: str
    kappa: int | None = None
    placements: int = 0
    nodes: int = 0
    ms: float = 0.0

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "label": self.label,
            "graph": self.graph,
            "kappa": self.kappa,
            "placements": self.placements,
            "nodes": self.nodes,
            "status": self.status,
            "detail": self.detail,
            "ms": self.ms,
        }


@dataclass(frozen=True)
class CampaignReport:
    theorem: str
    n: int
    count: int
    seed: int
    jobs: int
    budget: int
    records: tuple[InstanceRecord, ...]

    @property
    def tally(self) -> dict[str, int]:
        out = {"pass": 0, "fail": 0, "budget": 0}
        for r in self.records:
            out[r.status] = out.get(r.status, 0) + 1
        return out

    @property
    def exit_code(self) -> int:
        t = self.tally
        if t.get("fail", 0):
            return 1
        if t.get("budget", 0):
            return 3
        return 0

    def to_json(self) -> dict:
        return {
            "schema": SCHEMA,
            "generator": GENERATOR_ID,
            "theorem": self.theorem,
            "n": self.n,
            "count": self.count,
            "seed": self.seed,
            "jobs": self.jobs,
            "budget": self.budget,
            "summary": {**self.tally, "exit": self.exit_code},
            "records": [r.to_json() for r in self.records],
        }


def _instance_seed(seed: int, i: int) -> int:
    return seed * 1_000_003 + i


# ---------------------------------------------------------------------------
# Fat-triangle linkage under the connectivity bound
# ---------------------------------------------------------------------------


def _plan_thm12(n: int, count: int, seed: int):
    descs = []
    for i in range(count):
        ni = 6 + i % max(1, n - 5)
        descs.append((i, "a", ni, _instance_seed(seed, i)))
    for i in range(count):
        ni = 4 + i % 6
        descs.append((count + i, "b", ni, _instance_seed(seed, count + i)))
    return descs


def _run_thm12(desc, budget: int) -> InstanceRecord:
    i, phase, ni, seed = desc
    if phase == "a":
        kappa_min, ks = 4, (2, 1, 1)
        G = random_k_connected(ni, kappa_min, seed)
        phis = placements_to_check(G, fat_triangle(*ks), "sample", 30, seed)
    else:
        kappa_min, ks = 3, (1, 1, 1)
        G = random_k_connected(ni, kappa_min, seed)
        phis = placements_to_check(G, fat_triangle(*ks), "all")
    label = f"F{ks} n={ni} kappa>={kappa_min} seed={seed}"
    h = graph_hash(G)
    kappa = vertex_connectivity(G)
    nodes = 0
    exhausted = 0
    for done, phi in enumerate(phis):
        res = find_fat_triangle_linkage(G, phi[0], phi[1], phi[2], *ks, budget=budget)
        nodes += res.nodes_explored
        if res.status == NOT_LINKED:
            return InstanceRecord(
                i, label, h, "fail", f"placement {tuple(phi)} has no linkage",
                kappa=kappa, placements=done + 1, nodes=nodes,
            )
        if res.status == EXHAUSTED:
            exhausted += 1
    if exhausted:
        return InstanceRecord(
            i, label, h, "budget", f"{exhausted} of {len(phis)} placements cut short",
            kappa=kappa, placements=len(phis), nodes=nodes,
        )
    return InstanceRecord(
        i, label, h, "pass", f"{len(phis)} placements linked",
        kappa=kappa, placements=len(phis), nodes=nodes,
    )


# ---------------------------------------------------------------------------
# Sharpness of the bound
# ---------------------------------------------------------------------------


def _plan_sharpness(n: int, count: int, seed: int):
    descs = []
    i = 0
    for k in (3, 4, 5):
        for k1 in range(1, k + 1):
            for k2 in range(1, k - k1 + 1):
                k3 = k - k1 - k2
                for m in (1, 2):
                    descs.append((i, k1, k2, k3, m))
                    i += 1
    return descs


def _run_sharpness(desc, budget: int) -> InstanceRecord:
    i, k1, k2, k3, m = desc
    k = k1 + k2 + k3
    G, phi = sharpness_gadget(k1, k2, k3, m)
    label = f"gadget k=({k1},{k2},{k3}) m={m}"
    h = graph_hash(G)
    kappa = vertex_connectivity(G)
    if kappa != k - 1:
        return InstanceRecord(
            i, label, h, "fail", f"connectivity {kappa}, expected exactly {k - 1}",
            kappa=kappa, placements=0,
        )
    res = find_subdivision(G, fat_triangle(k1, k2, k3), phi, budget)
    if res.status == EXHAUSTED:
        return InstanceRecord(
            i, label, h, "budget", "linkage search cut short",
            kappa=kappa, placements=1, nodes=res.nodes_explored,
        )
    if res.status != NOT_LINKED:
        return InstanceRecord(
            i, label, h, "fail", "designated placement unexpectedly extends",
            kappa=kappa, placements=1, nodes=res.nodes_explored,
        )
    return InstanceRecord(
        i, label, h, "pass", f"kappa={kappa} and the placement does not extend",
        kappa=kappa, placements=1, nodes=res.nodes_explored,
    )


# ---------------------------------------------------------------------------
# Good-path / certificate dichotomy
# ---------------------------------------------------------------------------


def _connected_reps(nmax: int):
    """One representative per isomorphism class of connected graphs."""
    reps = []
    for n in range(2, nmax + 1):
        pairs = list(combinations(range(n), 2))
        seen: set[tuple] = set()
        for mask in range(1 << len(pairs)):
            edges = tuple(p for j, p in enumerate(pairs) if mask >> j & 1)
            G = SimpleGraph(n, edges)
            if len(G.connected_components()) != 1:
                continue
            canon = min(
                tuple(sorted(tuple(sorted((pi[u], pi[v]))) for u, v in edges))
                for pi in permutations(range(n))
            )
            if canon in seen:
                continue
            seen.add(canon)
            reps.append((n, canon))
    return reps


def _group_systems(n: int):
    """Unordered systems of 2 or 3 disjoint terminal groups of size <= 2."""
    cells = [c for size in (1, 2) for c in combinations(range(n), size)]
    out = []
    for t in (2, 3):
        for combo in combinations(cells, t):
            flat = [v for c in combo for v in c]
            if len(flat) == len(set(flat)):
                out.append(combo)
    return out


def _plan_thm21(n: int, count: int, seed: int):
    descs = [
        (i, "a", n_rep, edges)
        for i, (n_rep, edges) in enumerate(_connected_reps(5))
    ]
    base = len(descs)
    for i in range(count):
        ni = 6 + i % 2
        descs.append((base + i, "b", ni, _instance_seed(seed, i)))
    return descs


def _gnp(rng: random.Random, n: int, p: float) -> SimpleGraph:
    edges = [e for e in combinations(range(n), 2) if rng.random() < p]
    return SimpleGraph.from_edges(n, edges)


def _run_thm21(desc, budget: int) -> InstanceRecord:
    i, phase = desc[0], desc[1]
    if phase == "a":
        n, edges = desc[2], desc[3]
        G = SimpleGraph(n, tuple(tuple(e) for e in edges))
        label = f"all systems on connected n={n} rep"
        h = graph_hash(G)
        kappa = vertex_connectivity(G)
        checked = 0
        for combo in _group_systems(n):
            groups = GroupedTerminals.of(*combo)
            for k in (1, 2, 3):
                if not dichotomy_check(G, groups, k):
                    return InstanceRecord(
                        i, label, h, "fail",
                        f"dichotomy breaks for groups {combo} at k={k}",
                        kappa=kappa, placements=checked + 1,
                    )
                checked += 1
        return InstanceRecord(
            i, label, h, "pass", f"{checked} systems agree",
            kappa=kappa, placements=checked,
        )

    ni, seed = desc[2], desc[3]
    rng = random.Random(seed)
    p = 0.3 + 0.5 * rng.random()
    G = _gnp(rng, ni, p)
    verts = list(range(ni))
    rng.shuffle(verts)
    parts = []
    pos = 0
    for _ in range(rng.choice((2, 3))):
        size = rng.randint(1, 2)
        parts.append(tuple(verts[pos:pos + size]))
        pos += size
    groups = GroupedTerminals.of(*parts)
    k = rng.randint(1, 3)
    label = f"random n={ni} p={p:.2f} groups={parts} k={k}"
    h = graph_hash(G)
    kappa = vertex_connectivity(G)
    search = find_certificate(G, groups, k, budget=SearchBudget(budget))
    if search.certificate is not None:
        cert = search.certificate
        if not verify_certificate(G, groups, cert):
            return InstanceRecord(
                i, label, h, "fail", "found certificate fails verification",
                kappa=kappa, placements=1,
            )
        good = max_good_paths(G, groups, budget=SearchBudget(budget))
        if not good.complete:
            return InstanceRecord(
                i, label, h, "budget", "path search cut short",
                kappa=kappa, placements=1,
            )
        if good.count > cert.value:
            return InstanceRecord(
                i, label, h, "fail",
                f"{good.count} good paths exceed certificate value {cert.value}",
                kappa=kappa, placements=1,
            )
        return InstanceRecord(
            i, label, h, "pass",
            f"certificate value {cert.value} >= {good.count} paths",
            kappa=kappa, placements=1,
        )
    if not search.complete:
        return InstanceRecord(
            i, label, h, "budget", "certificate search cut short",
            kappa=kappa, placements=1,
        )
    good = max_good_paths(G, groups, budget=SearchBudget(budget), target=k)
    if good.count >= k:
        return InstanceRecord(
            i, label, h, "pass", f"no certificate and {good.count} >= {k} paths",
            kappa=kappa, placements=1,
        )
    if not good.complete:
        return InstanceRecord(
            i, label, h, "budget", "path search cut short",
            kappa=kappa, placements=1,
        )
    return InstanceRecord(
        i, label, h, "fail", f"neither certificate nor {k} good paths exist",
        kappa=kappa, placements=1,
    )


# ---------------------------------------------------------------------------
# Kite through a flower at high connectivity
# ---------------------------------------------------------------------------


def _plan_thm52(n: int, count: int, seed: int):
    return [
        (i, 9 + i % max(1, n - 8), _instance_seed(seed, i)) for i in range(count)
    ]


def _run_thm52(desc, budget: int) -> InstanceRecord:
    i, ni, seed = desc
    G = random_k_connected(ni, 7, seed)
    label = f"n={ni} kappa>=7 seed={seed}"
    h = graph_hash(G)
    kappa = vertex_connectivity(G)
    rng = random.Random(seed)
    quads = list(permutations(range(ni), 4))
    rng.shuffle(quads)
    flowers = 0
    nodes = 0
    for quad in quads[:60]:
        u1, u2, u3, u4 = quad
        F = find_flower(G, u1, u2, u3, u4, budget=budget)
        if F is None:
            continue
        if not verify_flower(G, F):
            return InstanceRecord(
                i, label, h, "fail", f"search returned an invalid flower at {quad}",
                kappa=kappa, placements=flowers + 1, nodes=nodes,
            )
        res = find_kite_linkage(G, u2, u1, u3, u4, budget=budget)
        nodes += res.nodes_explored
        if res.status == NOT_LINKED:
            return InstanceRecord(
                i, label, h, "fail", f"flower at {quad} but no kite subdivision",
                kappa=kappa, placements=flowers + 1, nodes=nodes,
            )
        if res.status == EXHAUSTED:
            return InstanceRecord(
                i, label, h, "budget", f"kite search cut short at {quad}",
                kappa=kappa, placements=flowers + 1, nodes=nodes,
            )
        flowers += 1
        if flowers == 10:
            break
    return InstanceRecord(
        i, label, h, "pass", f"{flowers} flower placements all carry a kite",
        kappa=kappa, placements=flowers, nodes=nodes,
    )


# ---------------------------------------------------------------------------
# Kite linkage on curated 8-connected hosts
# ---------------------------------------------------------------------------

_CURATED_13 = ("K9", "K10", "K11-matching", "C13(1,2,3,4)")


def _curated_graph(name: str) -> SimpleGraph:
    if name == "K9":
        return SimpleGraph.complete(9)
    if name == "K10":
        return SimpleGraph.complete(10)
    if name == "K11-matching":
        drop = {(0, 1), (2, 3), (4, 5), (6, 7), (8, 9)}
        full = SimpleGraph.complete(11)
        return SimpleGraph(11, tuple(e for e in full.edges if e not in drop))
    if name == "C13(1,2,3,4)":
        return SimpleGraph.circulant(13, (1, 2, 3, 4))
    raise ParameterError(f"unknown curated graph {name!r}")


def _plan_thm13(n: int, count: int, seed: int):
    return [
        (i, name, _instance_seed(seed, i), count)
        for i, name in enumerate(_CURATED_13)
    ]


def _run_thm13(desc, budget: int) -> InstanceRecord:
    i, name, seed, count = desc
    G = _curated_graph(name)
    label = f"{name} with {count} placements"
    h = graph_hash(G)
    kappa = vertex_connectivity(G)
    if kappa < 8:
        return InstanceRecord(
            i, label, h, "fail", f"connectivity {kappa} < 8", kappa=kappa
        )
    rng = random.Random(seed)
    nodes = 0
    exhausted = 0
    for _ in range(count):
        u2, u1, u3, u4 = rng.sample(range(G.n), 4)
        res = find_kite_linkage(G, u2, u1, u3, u4, budget=budget)
        nodes += res.nodes_explored
        if res.status == NOT_LINKED:
            return InstanceRecord(
                i, label, h, "fail", f"no kite at ({u2},{u1},{u3},{u4})",
                kappa=kappa, placements=count, nodes=nodes,
            )
        if res.status == EXHAUSTED:
            exhausted += 1
    if exhausted:
        return InstanceRecord(
            i, label, h, "budget", f"{exhausted} placements cut short",
            kappa=kappa, placements=count, nodes=nodes,
        )
    return InstanceRecord(
        i, label, h, "pass", f"kappa={kappa}, all placements linked",
        kappa=kappa, placements=count, nodes=nodes,
    )


# ---------------------------------------------------------------------------
# Special separating pairs and their witnesses
# ---------------------------------------------------------------------------


def _all_windows(arc: tuple[int, ...]):
    """Every contiguous run of the arc, the empty run included."""
    wins: list[tuple[int, ...]] = [()]
    for a in range(len(arc)):
        for b in range(a + 1, len(arc) + 1):
            wins.append(arc[a:b])
    wins.sort(key=len)
    return wins


def brute_special_pair_weight(
    G: SimpleGraph, C: OrientedCycle, u1: int, u2: int, A
) -> int:
    """Minimum separating-pair weight by checking every window pair.

    Enumerates both orientations and all contiguous runs of the two
    arcs, keeps whatever the verifier accepts, and never consults the
    search's own pruning, so it serves as an independent floor.
    """
    A = frozenset(A)
    best: int | None = None
    for D in (C, C.reverse()):
        arc1 = interval(D, u1, u2).vertices
        arc2 = interval(D, u2, u1).vertices
        for w1 in _all_windows(arc1):
            if best is not None and len(w1) >= best:
                break
            for w2 in _all_windows(arc2):
                weight = len(w1) + len(w2)
                if best is not None and weight >= best:
                    break
                pair = SeparatingPair(
                    C=D, u1=u1, u2=u2, A=A, R1=PathSeq(w1), R2=PathSeq(w2)
                )
                if verify_separating_pair(G, pair):
                    best = weight
    assert best is not None
    return best


def _plan_lemma31(n: int, count: int, seed: int):
    return [(i, n, _instance_seed(seed, i)) for i in range(count)]


def _run_lemma31(desc, budget: int) -> InstanceRecord:
    i, n, seed = desc
    rng = random.Random(seed)
    c = rng.randint(4, max(4, n))
    a_size = rng.randint(1, 3)
    edges = {(j, (j + 1) % c) for j in range(c)}
    averts = list(range(c, c + a_size))
    for idx in range(1, a_size):
        edges.add((averts[rng.randrange(idx)], averts[idx]))
    for x, y in combinations(averts, 2):
        if rng.random() < 0.3:
            edges.add((x, y))
    hooks = 0
    for a in averts:
        for v in range(c):
            if rng.random() < 0.25:
                edges.add((v, a))
                hooks += 1
    if hooks == 0:
        edges.add((rng.randrange(c), averts[rng.randrange(a_size)]))
    G = SimpleGraph.from_edges(c + a_size, edges)
    C = OrientedCycle(tuple(range(c)))
    u1 = rng.randrange(c)
    u2 = (u1 + rng.randint(1, c - 1)) % c
    A = frozenset(averts)
    label = f"cycle {c} + attached {a_size} seed={seed}"
    h = graph_hash(G)
    kappa = vertex_connectivity(G)

    pair = find_special_separating_pair(G, C, u1, u2, A)
    if not verify_separating_pair(G, pair):
        return InstanceRecord(
            i, label, h, "fail", "found pair fails its own verifier",
            kappa=kappa, placements=1,
        )
    floor = brute_special_pair_weight(G, C, u1, u2, A)
    if pair.weight != floor:
        return InstanceRecord(
            i, label, h, "fail",
            f"weight {pair.weight} but exhaustive check finds {floor}",
            kappa=kappa, placements=1,
        )
    inner = pair.interior(1)
    if not inner:
        return InstanceRecord(
            i, label, h, "pass",
            f"weight {pair.weight}; witnessed=no (empty interior)",
            kappa=kappa, placements=1,
        )
    x = min(inner)
    connsep_witnesses(G, pair, x)
    return InstanceRecord(
        i, label, h, "pass", f"weight {pair.weight}; witnessed=yes at x={x}",
        kappa=kappa, placements=1,
    )


# ---------------------------------------------------------------------------
# Light edges and vertices of disc triangulations
# ---------------------------------------------------------------------------


def _plan_lemma33(n: int, count: int, seed: int):
    descs = []
    for i in range(count):
        rim = 3 + i % 4
        target = rim + 2 + i % max(1, n - rim - 1)
        descs.append((i, rim, min(n, target) - rim - 1, _instance_seed(seed, i)))
    return descs


def _run_lemma33(desc, budget: int) -> InstanceRecord:
    i, rim, inserts, seed = desc
    G, emb = disc_triangulation(rim, inserts, seed)
    label = f"rim={rim} inserts={inserts} seed={seed}"
    h = graph_hash(G)
    kappa = vertex_connectivity(G)
    outer = emb.outer
    outer_set = set(outer)
    outer_edges = {
        tuple(sorted((outer[j], outer[(j + 1) % len(outer)])))
        for j in range(len(outer))
    }
    pairs = list(combinations(sorted(outer_set), 2))
    for x, y in pairs:
        w = discharge_witness(G, emb, x, y)
        if w.kind == "edge":
            u, v = w.edge
            if tuple(sorted((u, v))) not in outer_edges:
                return InstanceRecord(
                    i, label, h, "fail", f"witness edge {w.edge} not on the outer cycle",
                    kappa=kappa, placements=len(pairs),
                )
            if {u, v} & {x, y}:
                return InstanceRecord(
                    i, label, h, "fail", f"witness edge {w.edge} meets ({x},{y})",
                    kappa=kappa, placements=len(pairs),
                )
            if G.degree(u) + G.degree(v) > 7:
                return InstanceRecord(
                    i, label, h, "fail",
                    f"edge {w.edge} weighs {G.degree(u) + G.degree(v)}",
                    kappa=kappa, placements=len(pairs),
                )
        else:
            if w.vertex in outer_set:
                return InstanceRecord(
                    i, label, h, "fail",
                    f"witness vertex {w.vertex} lies on the outer cycle",
                    kappa=kappa, placements=len(pairs),
                )
            if G.degree(w.vertex) > 6:
                return InstanceRecord(
                    i, label, h, "fail",
                    f"vertex {w.vertex} has degree {G.degree(w.vertex)}",
                    kappa=kappa, placements=len(pairs),
                )
    return InstanceRecord(
        i, label, h, "pass", f"all {len(pairs)} pairs witnessed",
        kappa=kappa, placements=len(pairs),
    )


# ---------------------------------------------------------------------------
# Driver
# ---------------------------------------------------------------------------

_CAMPAIGNS = {
    "thm1.2": (12, 50, _plan_thm12, _run_thm12),
    "sharpness": (0, 0, _plan_sharpness, _run_sharpness),
    "thm2.1": (7, 1000, _plan_thm21, _run_thm21),
    "thm5.2": (13, 20, _plan_thm52, _run_thm52),
    "thm1.3": (13, 100, _plan_thm13, _run_thm13),
    "lemma3.1": (10, 500, _plan_lemma31, _run_lemma31),
    "lemma3.3": (14, 100, _plan_lemma33, _run_lemma33),
}


def _run_one(task) -> InstanceRecord:
    theorem, desc, budget = task
    run = _CAMPAIGNS[theorem][3]
    start = time.perf_counter()
    try:
        rec = run(desc, budget)
    except (SearchBudgetExceeded, GenerationBudgetExceeded, Inconclusive) as e:
        rec = InstanceRecord(
            desc[0], f"{theorem}[{desc[0]}]", None, "budget",
            str(e) or type(e).__name__,
        )
    except HlinkError as e:
        rec = InstanceRecord(
            desc[0], f"{theorem}[{desc[0]}]", None, "fail",
            f"{type(e).__name__}: {e}",
        )
    return replace(rec, ms=round((time.perf_counter() - start) * 1000, 3))


def run_campaign(
    theorem: str,
    n: int | None = None,
    count: int | None = None,
    seed: int = 0,
    jobs: int = 1,
    budget: int = DEFAULT_BUDGET,
) -> CampaignReport:
    """Run one theorem's campaign and return its report.

    `n` and `count` default per theorem; the sharpness family ignores
    both, and the curated kite family reads `count` as placements per
    graph.  `jobs` only parallelises; verdicts never depend on it.
    """
    if theorem not in _CAMPAIGNS:
        raise ParameterError(
            f"unknown theorem {theorem!r}, expected one of {', '.join(THEOREMS)}"
        )
    if budget <= 0:
        raise ParameterError(f"budget must be positive, got {budget}")
    default_n, default_count, plan, _ = _CAMPAIGNS[theorem]
    n = default_n if n is None else n
    count = default_count if count is None else count
    if count < 0 or n < 0:
        raise ParameterError("n and count must be nonnegative")
    tasks = [(theorem, desc, budget) for desc in plan(n, count, seed)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(_run_one, tasks, chunksize=1))
    else:
        records = [_run_one(t) for t in tasks]
    records.sort(key=lambda r: r.id)
    return CampaignReport(theorem, n, count, seed, jobs, budget, tuple(records))

"""Slow reference implementations used to freeze expected values.

Everything here is deliberately written from scratch against the bare
adjacency structure: plain recursion, no pruning, no reuse of solver
internals.  The optimized code must agree with these on small inputs.
"""

from __future__ import annotations

from itertools import combinations, permutations, product


def _adj(G):
    return {v: set(G.neighbors(v)) for v in range(G.n)}


def has_path_avoiding(G, s, t, removed) -> bool:
    if s in removed or t in removed:
        return False
    seen = {s}
    stack = [s]
    while stack:
        x = stack.pop()
        if x == t:
            return True
        for y in G.neighbors(x):
            if y not in removed and y not in seen:
                seen.add(y)
                stack.append(y)
    return False


def brute_min_vertex_cut(G, s, t):
    """Smallest S excluding s,t with no s-t path in G - S; None if s ~ t."""
    if G.has_edge(s, t):
        return None
    rest = [v for v in range(G.n) if v not in (s, t)]
    for size in range(len(rest) + 1):
        for S in combinations(rest, size):
            if not has_path_avoiding(G, s, t, set(S)):
                return frozenset(S)
    return None


def brute_vertex_connectivity(G) -> int:
    if G.n == 1:
        return 0
    verts = range(G.n)
    for size in range(G.n - 1):
        for S in combinations(verts, size):
            left = [v for v in verts if v not in S]
            if len(left) < 2:
                continue
            root, comp, stack = left[0], {left[0]}, [left[0]]
            while stack:
                x = stack.pop()
                for y in G.neighbors(x):
                    if y not in S and y not in comp:
                        comp.add(y)
                        stack.append(y)
            if len(comp) < len(left):
                return size
    return G.n - 1


def all_simple_paths(G, s, t, forbidden=frozenset()):
    """Every simple s-t path avoiding `forbidden` internally, as tuples."""
    out = []

    def walk(path, on):
        x = path[-1]
        if x == t:
            out.append(tuple(path))
            return
        for y in G.neighbors(x):
            if y in on:
                continue
            if y != t and y in forbidden:
                continue
            path.append(y)
            on.add(y)
            walk(path, on)
            path.pop()
            on.remove(y)

    if s == t:
        return [(s,)]
    walk([s], {s})
    return out


def route_systems(G, H, images):
    """All valid route systems realising pattern H at the given images.

    A system assigns each pattern edge a host path; endpoints must be
    the placed images, interiors must avoid every image, interiors must
    be pairwise disjoint, and no two routes may coincide.
    """
    placed = set(images)
    per_edge = []
    for u, v in H.edges:
        a, b = images[u], images[v]
        cands = [p for p in all_simple_paths(G, a, b, frozenset(placed - {a, b}))]
        per_edge.append(cands)

    found = []

    def pick(i, chosen, used_pairs, interiors):
        if i == len(per_edge):
            found.append(tuple(chosen))
            return
        for p in per_edge[i]:
            inner = set(p[1:-1])
            if inner & interiors:
                continue
            if not inner:
                # direct edges are the only way two routes could coincide
                pair = (min(p[0], p[-1]), max(p[0], p[-1]))
                if pair in used_pairs:
                    continue
                chosen.append(p)
                pick(i + 1, chosen, used_pairs | {pair}, interiors)
                chosen.pop()
            else:
                chosen.append(p)
                pick(i + 1, chosen, used_pairs, interiors | inner)
                chosen.pop()

    pick(0, [], frozenset(), set())
    return found


def exists_subdivision(G, H, images) -> bool:
    placed = set(images)
    per_edge = []
    for u, v in H.edges:
        a, b = images[u], images[v]
        cands = all_simple_paths(G, a, b, frozenset(placed - {a, b}))
        if not cands:
            return False
        per_edge.append(cands)

    def pick(i, used_pairs, interiors):
        if i == len(per_edge):
            return True
        for p in per_edge[i]:
            inner = set(p[1:-1])
            if inner & interiors:
                continue
            if not inner:
                pair = (min(p[0], p[-1]), max(p[0], p[-1]))
                if pair in used_pairs:
                    continue
                if pick(i + 1, used_pairs | {pair}, interiors):
                    return True
                continue
            if pick(i + 1, used_pairs, interiors | inner):
                return True
        return False

    return pick(0, frozenset(), set())


def good_paths_of(G, groups):
    """All good paths: simple paths whose two ends lie in distinct groups.

    A single vertex belonging to two different groups is a good path.
    Each path appears once (direction canonicalized by smaller end).
    """
    out = set()
    members = [set(g) for g in groups]
    for v in range(G.n):
        if sum(1 for g in members if v in g) >= 2:
            out.add((v,))
    terminals = sorted(set().union(*members)) if members else []
    for s in terminals:
        for t in terminals:
            if s >= t:
                continue
            ok = any(
                s in members[i] and t in members[j]
                for i in range(len(members))
                for j in range(len(members))
                if i != j
            )
            if not ok:
                continue
            for p in all_simple_paths(G, s, t):
                out.add(p)
    return sorted(out)


def brute_max_disjoint_good_paths(G, groups) -> int:
    paths = good_paths_of(G, groups)
    best = 0

    def pick(i, used, count):
        nonlocal best
        if count > best:
            best = count
        if i == len(paths):
            return
        remaining = len(paths) - i
        if count + remaining <= best:
            return
        for j in range(i, len(paths)):
            p = paths[j]
            if used.isdisjoint(p):
                pick(j + 1, used | set(p), count + 1)

    pick(0, frozenset(), 0)
    return best


def contracted_edge_multiset(routes_by_edge, images):
    """Edge multiset of the union after suppressing route interiors.

    Each route collapses to one edge between its two images; returns a
    sorted tuple of sorted image pairs for comparison with the pattern.
    """
    out = []
    for p in routes_by_edge:
        a, b = p[0], p[-1]
        out.append(tuple(sorted((a, b))))
    return tuple(sorted(out))


# ---------------------------------------------------------------------------
# Rotation systems, face tracing, hand-built polyhedra
# ---------------------------------------------------------------------------


def rotation_from_faces(faces):
    """Rotation system induced by a list of consistently oriented faces.

    Within a face ...u,v,w..., the dart (u,v) is followed by (v,w), so w
    must come right after u in the rotation at v.  Raises ValueError if
    the collected successors conflict or fail to close into one cycle
    per vertex.
    """
    succ = {}
    for face in faces:
        size = len(face)
        for i in range(size):
            u, v, w = face[i], face[(i + 1) % size], face[(i + 2) % size]
            at = succ.setdefault(v, {})
            if u in at and at[u] != w:
                raise ValueError(f"conflicting successors at vertex {v}")
            at[u] = w
    rotation = {}
    for v, at in sorted(succ.items()):
        start = min(at)
        order = [start]
        while at[order[-1]] != start:
            order.append(at[order[-1]])
            if len(order) > len(at):
                raise ValueError(f"rotation at {v} does not close up")
        if len(order) != len(at):
            raise ValueError(f"rotation at {v} splits into several cycles")
        rotation[v] = tuple(order)
    return rotation


def trace_faces_brute(rotation):
    """Face walks of a rotation system, traced dart by dart.

    The dart (u,v) continues as (v,w) with w the successor of u in the
    rotation at v.  Every dart lies on exactly one face walk.
    """
    succ = {
        v: {nb: order[(i + 1) % len(order)] for i, nb in enumerate(order)}
        for v, order in rotation.items()
    }
    darts = {(u, v) for u, order in rotation.items() for v in order}
    faces = []
    while darts:
        u, v = min(darts)
        walk = []
        while (u, v) in darts:
            darts.remove((u, v))
            walk.append(u)
            u, v = v, succ[v][u]
        faces.append(tuple(walk))
    return faces


def all_rotations(adj):
    """Every rotation system of the graph, one per distinct cyclic order.

    Fixing the first neighbour of each vertex enumerates each cyclic
    order exactly once ((d-1)! per vertex of degree d).
    """
    verts = sorted(adj)
    choices = []
    for v in verts:
        nbrs = sorted(adj[v])
        if not nbrs:
            choices.append([()])
            continue
        head, rest = nbrs[0], nbrs[1:]
        choices.append([(head,) + tail for tail in permutations(rest)])
    for combo in product(*choices):
        yield dict(zip(verts, combo))


def canonical_cycle(walk):
    """Smallest rotation of the closed walk; direction is preserved."""
    size = len(walk)
    return min(
        tuple(walk[(i + j) % size] for j in range(size)) for i in range(size)
    )


def planar_face_walks(adj):
    """Every face walk over every planar rotation system of the graph.

    A rotation system counts as planar when its face count satisfies
    Euler's formula.  Returns {canonical walk: (rotation, walk)}, one
    witness rotation per walk, in enumeration order.  Mirror rotations
    appear separately, so each walk's reversal shows up on its own.
    """
    n = len(adj)
    m = sum(len(s) for s in adj.values()) // 2
    out = {}
    for rot in all_rotations(adj):
        faces = trace_faces_brute(rot)
        if n - m + len(faces) != 2:
            continue
        for walk in faces:
            key = canonical_cycle(walk)
            if key not in out:
                out[key] = (rot, walk)
    return out


def marks_in_cyclic_order(walk, marks):
    """Whether the closed walk passes the marks in the given cyclic order.

    Tries every choice of one occurrence per mark; a walk may repeat a
    vertex, which makes this a genuine search.
    """
    size = len(walk)
    occ = [[i for i, x in enumerate(walk) if x == mk] for mk in marks]
    if any(not slots for slots in occ):
        return False
    for picks in product(*occ):
        if len(set(picks)) != len(picks):
            continue
        rel = [(p - picks[0]) % size for p in picks]
        if all(rel[i] < rel[i + 1] for i in range(len(rel) - 1)):
            return True
    return False


# Octahedron: antipodal pairs (0,3), (1,4), (2,5); eight oriented faces.
OCTAHEDRON_FACES = (
    (0, 1, 2), (0, 5, 1), (1, 5, 3), (1, 3, 2),
    (2, 3, 4), (2, 4, 0), (0, 4, 5), (5, 4, 3),
)

# Icosahedron: pole 0, upper ring 1..5, lower ring 6..10, pole 11.
# Upper vertex i touches lower 5+i and 5+(i mod 5)+1.
ICOSAHEDRON_FACES = (
    (0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 5, 1),
    (1, 6, 7), (2, 7, 8), (3, 8, 9), (4, 9, 10), (5, 10, 6),
    (2, 1, 7), (3, 2, 8), (4, 3, 9), (5, 4, 10), (1, 5, 6),
    (11, 7, 6), (11, 8, 7), (11, 9, 8), (11, 10, 9), (11, 6, 10),
)


# ---------------------------------------------------------------------------
# Isomorphism-class representatives
# ---------------------------------------------------------------------------


def connected_graph_reps(n):
    """One edge list per isomorphism class of connected graphs on n vertices.

    Orbit marking over all edge bitmasks: the smallest unseen mask opens
    a new class, and its whole relabelling orbit is marked as seen.
    """
    pairs = list(combinations(range(n), 2))
    index = {p: i for i, p in enumerate(pairs)}
    moves = []
    for sigma in permutations(range(n)):
        moves.append(
            tuple(index[tuple(sorted((sigma[a], sigma[b])))] for a, b in pairs)
        )
    width = len(pairs)
    seen = bytearray(1 << width)
    reps = []
    for mask in range(1 << width):
        if seen[mask]:
            continue
        for move in moves:
            image = 0
            for i in range(width):
                if mask >> i & 1:
                    image |= 1 << move[i]
            seen[image] = 1
        adj = {v: set() for v in range(n)}
        edges = []
        for i in range(width):
            if mask >> i & 1:
                a, b = pairs[i]
                adj[a].add(b)
                adj[b].add(a)
                edges.append(pairs[i])
        comp, stack = {0}, [0]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in comp:
                    comp.add(y)
                    stack.append(y)
        if len(comp) == n:
            reps.append(edges)
    return reps


# ---------------------------------------------------------------------------
# Random seven-path systems
# ---------------------------------------------------------------------------


def random_q_system(G, u1, u2, u3, u4, rng):
    """Randomly draw seven anchor paths with pairwise disjoint interiors.

    One u1-u3 path, then three u1-u2 and three u2-u3 paths; interiors
    avoid all four anchors, and at most one path per end pair may be a
    bare edge (duplicate routes are not valid).  Candidates are capped
    at two interior vertices, shuffled within each length class, and
    assigned with backtracking; None means no system fits that cap.
    """
    anchors = (u1, u2, u3, u4)
    plan = [(u1, u3, True)]
    plan += [(u1, u2, i == 0) for i in range(3)]
    plan += [(u2, u3, i == 0) for i in range(3)]
    used = set()
    out = []

    def candidates(s, t, direct_ok):
        direct = [(s, t)] if direct_ok and G.has_edge(s, t) else []
        free = [w for w in range(G.n) if w not in anchors and w not in used]
        three = [(s, w, t) for w in free if G.has_edge(s, w) and G.has_edge(w, t)]
        four = [
            (s, w, z, t)
            for w in free if G.has_edge(s, w)
            for z in free if z != w and G.has_edge(w, z) and G.has_edge(z, t)
        ]
        rng.shuffle(three)
        rng.shuffle(four)
        return direct + three + four

    def place(i):
        if i == len(plan):
            return True
        s, t, direct_ok = plan[i]
        for cand in candidates(s, t, direct_ok):
            inner = cand[1:-1]
            used.update(inner)
            out.append(cand)
            if place(i + 1):
                return True
            out.pop()
            used.difference_update(inner)
        return False

    return tuple(out) if place(0) else None


# ---------------------------------------------------------------------------
# Separating pairs from the definition
# ---------------------------------------------------------------------------


def brute_pair_weight(G, cycle, u1, u2, A):
    """Minimum |R1| + |R2| over all separating pairs, from the definition.

    Enumerates both orientations of the cycle, every contiguous window
    of each arc (empty ones included), and checks attachment cover and
    the interior-edge condition directly on adjacency.
    """
    A = set(A)
    att = set()
    for a in A:
        att.update(G.neighbors(a))
    att -= A
    cyc = set(cycle)

    def windows(arc):
        yield ()
        for i in range(len(arc)):
            for j in range(i, len(arc)):
                yield tuple(arc[i : j + 1])

    best = None
    for orient in (tuple(cycle), tuple(reversed(cycle))):
        i1, i2 = orient.index(u1), orient.index(u2)
        size = len(orient)
        arc1 = tuple(orient[(i1 + t) % size] for t in range((i2 - i1) % size + 1))
        arc2 = tuple(orient[(i2 + t) % size] for t in range((i1 - i2) % size + 1))
        need1 = att & set(arc1)
        need2 = att & set(arc2)
        for R1 in windows(arc1):
            if not need1 <= set(R1):
                continue
            for R2 in windows(arc2):
                if not need2 <= set(R2):
                    continue
                w = len(R1) + len(R2)
                if best is not None and w >= best:
                    continue
                inner = set(R1[1:-1]) | set(R2[1:-1])
                outside = cyc - set(R1) - set(R2)
                if any(
                    y in outside
                    for x in inner
                    for y in G.neighbors(x)
                ):
                    continue
                best = w
    return best

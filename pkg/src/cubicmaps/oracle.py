"""Brute-force enumeration of rooted cubic planar maps.

A rooted map is a pair of permutations on darts 0..2E-1: the fixed
vertex rotation sigma0 (consecutive triples, cyclically) and an edge
involution alpha.  Canonical labeling is breadth-first from the root
dart 0: whenever the search reaches an unmatched dart in label order it
either opens the next fresh vertex or closes against an already-labeled
unmatched dart, so every rooted map is generated exactly once and the
relabeling invariant never needs a separate check.

Planarity is enforced by Euler's formula and pruned during the search by
tracking partial face chains: each edge insertion can close at most two
face cycles, so branches that cannot reach F = E - V + 2 faces die early.
"""

from __future__ import annotations

from dataclasses import dataclass, field


def _sigma(d):
    return d - d % 3 + (d + 1) % 3


@dataclass(frozen=True)
class RotationMap:
    """Canonical rooted cubic map: alpha as a tuple, root dart 0."""

    alpha: tuple

    @property
    def edges(self):
        return len(self.alpha) // 2

    @property
    def vertices(self):
        return len(self.alpha) // 3

    def vertex_of(self, dart):
        return dart // 3

    def edge_list(self):
        """Multigraph edges (u, v) with u <= v, one per dart pair."""
        out = []
        for d, e in enumerate(self.alpha):
            if d < e:
                out.append((d // 3, e // 3))
            elif d == e:
                raise ValueError("alpha has a fixed point")
        return out

    def faces(self):
        """Face orbits of sigma∘alpha, starting each at its least dart."""
        seen = [False] * len(self.alpha)
        out = []
        for d0 in range(len(self.alpha)):
            if seen[d0]:
                continue
            cyc = []
            d = d0
            while not seen[d]:
                seen[d] = True
                cyc.append(d)
                d = _sigma(self.alpha[d])
            out.append(cyc)
        return out

    def genus(self):
        f = len(self.faces())
        return (2 - self.vertices + self.edges - f) // 2

    def is_canonical(self):
        """Re-run the breadth-first relabeling and check it is trivial."""
        alpha = self.alpha
        label = {}
        nxt = 0

        def open_vertex(d):
            nonlocal nxt
            base = d - d % 3
            for i in range(3):
                label[base + (d % 3 + i) % 3] = nxt + i
            nxt += 3

        open_vertex(0)
        order = 0
        proc = [0, 1, 2]
        while order < len(proc):
            d = proc[order]
            order += 1
            e = alpha[d]
            if e not in label:
                start = len(proc)
                open_vertex(e)
                for i in range(3):
                    proc.append(e - e % 3 + (e % 3 + i) % 3)
                if label[e] != start:
                    return False
            if label[e] < label[d] and alpha[e] != d:
                return False
        return all(label[d] == d for d in range(len(alpha))) and len(label) == len(
            alpha
        )


def enumerate_maps(n_edges, genus=0):
    """All canonical rooted cubic maps with the given edge count and genus.

    Desk-scale only: n_edges must be a multiple of 3 (cubic maps have
    3(f-2) edges); 3..12 run in seconds, 15 takes a few minutes.
    """
    if n_edges % 3 != 0 or n_edges <= 0:
        raise ValueError("cubic maps need a positive multiple of 3 edges")
    nd = 2 * n_edges
    nv = nd // 3
    f_target = n_edges - nv + 2 + 2 * genus  # faces needed (Euler)
    alpha = [-1] * nd
    # face-chain bookkeeping: fwd[d] = sigma(alpha[d]) once alpha[d] set;
    # start[e]/end[s] pair up the open chain with endpoints s..e
    start = list(range(nd))
    end = list(range(nd))
    results = []
    closed = 0

    def link(d, f):
        """Declare fwd[d] = f; returns (closed_face?, undo record)."""
        nonlocal closed
        s, e = start[d], end[f]
        if s == f:
            closed += 1
            return ("c",)
        rec = ("m", s, e, start[d], end[f], start[e], end[s])
        start[e] = s
        end[s] = e
        return rec

    def unlink(rec):
        nonlocal closed
        if rec[0] == "c":
            closed -= 1
        else:
            _, s, e, sd, ef, se, es = rec
            start[e] = se
            end[s] = es

    def search(d, opened, assigned):
        nonlocal closed
        if d == nd:
            if closed == f_target:
                results.append(RotationMap(tuple(alpha)))
            return
        if alpha[d] >= 0:
            search(d + 1, opened, assigned)
            return
        pairs_left = n_edges - assigned
        # each remaining edge closes at most two faces
        if closed + 2 * pairs_left < f_target or closed > f_target:
            return
        # fresh vertex
        if opened < nv:
            e = 3 * opened
            alpha[d] = e
            alpha[e] = d
            r1 = link(d, _sigma(e))
            r2 = link(e, _sigma(d))
            search(d + 1, opened + 1, assigned + 1)
            unlink(r2)
            unlink(r1)
            alpha[d] = alpha[e] = -1
        # close against a labeled unmatched dart
        limit = 3 * opened
        for e in range(d + 1, limit):
            if alpha[e] >= 0:
                continue
            alpha[d] = e
            alpha[e] = d
            r1 = link(d, _sigma(e))
            r2 = link(e, _sigma(d))
            search(d + 1, opened, assigned + 1)
            unlink(r2)
            unlink(r1)
            alpha[d] = alpha[e] = -1

    search(0, 1, 0)
    return results


# ---------------------------------------------------------------------------
# structural parameters
# ---------------------------------------------------------------------------


@dataclass
class MapParameters:
    n_edges: int
    n_faces: int
    root_face_degree: int
    is_simple: bool
    has_three_cycle: bool          # triangle as a subgraph on 3 vertices
    has_degree3_face: bool         # face bounded by three edge sides
    is_two_connected: bool
    is_three_connected: bool
    isthmus_count: int
    cut_vertex_count: int
    block_edge_sizes: list
    largest_block: int
    largest_cubic_block: int
    two_core: tuple                # (edges t, degree-2 vertices m); (0, 0) if none
    three_core: tuple | None       # (core edges, replaced-edge count) or None


class _Multigraph:
    """Tiny mutable multigraph with edge identities (loops allowed)."""

    def __init__(self, n, edges):
        self.n = n
        self.edges = list(edges)  # (u, v) pairs, id = index into list
        self.alive = [True] * len(edges)

    def degree(self, v):
        d = 0
        for i, (a, b) in enumerate(self.edges):
            if not self.alive[i]:
                continue
            if a == v:
                d += 1
            if b == v:
                d += 1
        return d

    def incident(self, v):
        for i, (a, b) in enumerate(self.edges):
            if self.alive[i] and (a == v or b == v):
                yield i

    def live_edges(self):
        return [i for i in range(len(self.edges)) if self.alive[i]]

    def component_of(self, v0, skip=()):
        """Vertex set reachable from v0 using live edges not in ``skip``."""
        seen = {v0}
        stack = [v0]
        while stack:
            v = stack.pop()
            for i, (a, b) in enumerate(self.edges):
                if not self.alive[i] or i in skip:
                    continue
                if a == v and b not in seen:
                    seen.add(b)
                    stack.append(b)
                elif b == v and a not in seen:
                    seen.add(a)
                    stack.append(a)
        return seen

    def live_vertices(self):
        out = set()
        for i, (a, b) in enumerate(self.edges):
            if self.alive[i]:
                out.add(a)
                out.add(b)
        return out


def _bridges(n, edges, alive=None):
    """Bridge edge ids of a multigraph via DFS lowpoints."""
    alive = alive if alive is not None else [True] * len(edges)
    adj = [[] for _ in range(n)]
    for i, (u, v) in enumerate(edges):
        if not alive[i] or u == v:
            continue
        adj[u].append((v, i))
        adj[v].append((u, i))
    disc = [-1] * n
    low = [0] * n
    out = []
    timer = 0

    for s in range(n):
        if disc[s] != -1 or not adj[s]:
            continue
        stack = [(s, -1, iter(adj[s]))]
        disc[s] = low[s] = timer
        timer += 1
        while stack:
            v, pe, it = stack[-1]
            advanced = False
            for w, i in it:
                if i == pe:
                    continue
                if disc[w] == -1:
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, i, iter(adj[w])))
                    advanced = True
                    break
                low[v] = min(low[v], disc[w])
            if not advanced:
                stack.pop()
                if stack:
                    u, _, _ = stack[-1]
                    low[u] = min(low[u], low[v])
                    if low[v] > disc[u]:
                        out.append(pe)
        # restart iterators properly: handled by explicit stack above
    return out


def _articulation_points(n, edges):
    """Cut vertices of a multigraph (loops ignored, parallels kept)."""
    adj = [[] for _ in range(n)]
    for i, (u, v) in enumerate(edges):
        if u == v:
            continue
        adj[u].append((v, i))
        adj[v].append((u, i))
    disc = [-1] * n
    low = [0] * n
    cuts = set()
    timer = 0
    for s in range(n):
        if disc[s] != -1:
            continue
        root_children = 0
        stack = [(s, -1, iter(adj[s]))]
        disc[s] = low[s] = timer
        timer += 1
        while stack:
            v, pe, it = stack[-1]
            advanced = False
            for w, i in it:
                if i == pe:
                    continue
                if disc[w] == -1:
                    disc[w] = low[w] = timer
                    timer += 1
                    if v == s:
                        root_children += 1
                    stack.append((w, i, iter(adj[w])))
                    advanced = True
                    break
                low[v] = min(low[v], disc[w])
            if not advanced:
                stack.pop()
                if stack:
                    u, _, _ = stack[-1]
                    low[u] = min(low[u], low[v])
                    if u != s and low[v] >= disc[u]:
                        cuts.add(u)
        if root_children >= 2:
            cuts.add(s)
    return cuts


def _blocks(n, edges):
    """Biconnected components as lists of edge ids; loops are their own
    blocks."""
    adj = [[] for _ in range(n)]
    loops = []
    for i, (u, v) in enumerate(edges):
        if u == v:
            loops.append([i])
            continue
        adj[u].append((v, i))
        adj[v].append((u, i))
    disc = [-1] * n
    low = [0] * n
    estack = []
    out = []
    timer = 0
    for s in range(n):
        if disc[s] != -1:
            continue
        stack = [(s, -1, iter(adj[s]))]
        disc[s] = low[s] = timer
        timer += 1
        while stack:
            v, pe, it = stack[-1]
            advanced = False
            for w, i in it:
                if i == pe:
                    continue
                if disc[w] == -1:
                    disc[w] = low[w] = timer
                    timer += 1
                    estack.append(i)
                    stack.append((w, i, iter(adj[w])))
                    advanced = True
                    break
                if disc[w] < disc[v]:
                    estack.append(i)
                low[v] = min(low[v], disc[w])
            if not advanced:
                stack.pop()
                if stack:
                    u, _, _ = stack[-1]
                    low[u] = min(low[u], low[v])
                    if low[v] >= disc[u]:
                        blk = []
                        while estack:
                            e = estack.pop()
                            blk.append(e)
                            if e == pe:
                                break
                        if blk:
                            out.append(blk)
    return out + loops


def parameters(m: RotationMap) -> MapParameters:
    alpha = m.alpha
    n_e = m.edges
    n_v = m.vertices
    edges = m.edge_list()
    dart_edge = {}
    pairs = []
    for d, e in enumerate(alpha):
        if d < e:
            dart_edge[d] = dart_edge[e] = len(pairs)
            pairs.append((d // 3, e // 3))

    faces = m.faces()
    root_face = next(f for f in faces if 0 in f)

    loops = [i for i, (u, v) in enumerate(pairs) if u == v]
    seen_pairs = {}
    multi = False
    for i, (u, v) in enumerate(pairs):
        if u == v:
            continue
        key = (min(u, v), max(u, v))
        if key in seen_pairs:
            multi = True
        seen_pairs[key] = i
    simple = not loops and not multi

    # triangle as a subgraph: three distinct pairwise-adjacent vertices
    adjset = [set() for _ in range(n_v)]
    for u, v in pairs:
        if u != v:
            adjset[u].add(v)
            adjset[v].add(u)
    has_cycle3 = any(
        c in adjset[a] and c in adjset[b]
        for a in range(n_v)
        for b in adjset[a]
        if b > a
        for c in adjset[b]
        if c > b
    )
    has_face3 = any(len(f) == 3 for f in faces)

    bridges = _bridges(n_v, pairs)
    cuts = _articulation_points(n_v, pairs)
    two_conn = n_v >= 2 and not loops and not cuts
    three_conn = simple and n_v >= 4 and _is_three_connected(n_v, pairs)

    blocks = _blocks(n_v, pairs)
    block_sizes = sorted(len(b) for b in blocks)
    cubic_sizes = []
    for blk in blocks:
        deg = {}
        for i in blk:
            u, v = pairs[i]
            deg[u] = deg.get(u, 0) + 1
            deg[v] = deg.get(v, 0) + (1 if u != v else 1)
        v2 = sum(1 for d in deg.values() if d == 2)
        if all(d == 2 for d in deg.values()):
            cubic_sizes.append(0)  # cycle block collapses entirely
        else:
            cubic_sizes.append(len(blk) - v2)

    root_edge = dart_edge[0]
    two_core = _two_core(n_v, pairs, bridges, root_edge)
    three_core = _three_core(n_v, pairs, bridges, root_edge, root_tail=0 // 3,
                             alpha=alpha, dart_edge=dart_edge)

    return MapParameters(
        n_edges=n_e,
        n_faces=len(faces),
        root_face_degree=len(root_face),
        is_simple=simple,
        has_three_cycle=has_cycle3,
        has_degree3_face=has_face3,
        is_two_connected=two_conn,
        is_three_connected=three_conn,
        isthmus_count=len(bridges),
        cut_vertex_count=len(cuts),
        block_edge_sizes=block_sizes,
        largest_block=max(block_sizes),
        largest_cubic_block=max(cubic_sizes),
        two_core=two_core,
        three_core=three_core,
    )


def _is_three_connected(n, pairs):
    """No vertex 2-cut, by brute force (tiny graphs only)."""
    if n < 4:
        return False
    verts = range(n)
    for a in verts:
        for b in verts:
            if b <= a:
                continue
            seen = set()
            comp = 0
            for s in verts:
                if s in (a, b) or s in seen:
                    continue
                comp += 1
                if comp > 1:
                    return False
                stack = [s]
                seen.add(s)
                while stack:
                    v = stack.pop()
                    for u, w in pairs:
                        if u == v and w not in seen and w not in (a, b):
                            seen.add(w)
                            stack.append(w)
                        elif w == v and u not in seen and u not in (a, b):
                            seen.add(u)
                            stack.append(u)
    return True


def _two_core(n_v, pairs, bridges, root_edge):
    """(edges, degree-2 vertices) of the root 2-edge-connected piece."""
    if root_edge in bridges:
        return (0, 0)
    alive = [True] * len(pairs)
    for i in bridges:
        alive[i] = False
    # component of the root edge in the bridgeless remainder
    u0 = pairs[root_edge][0]
    seen = {u0}
    stack = [u0]
    while stack:
        v = stack.pop()
        for i, (a, b) in enumerate(pairs):
            if not alive[i]:
                continue
            if a == v and b not in seen:
                seen.add(b)
                stack.append(b)
            elif b == v and a not in seen:
                seen.add(a)
                stack.append(a)
    core_edges = [
        i for i, (a, b) in enumerate(pairs) if alive[i] and a in seen and b in seen
    ]
    deg = {}
    for i in core_edges:
        a, b = pairs[i]
        deg[a] = deg.get(a, 0) + 1
        deg[b] = deg.get(b, 0) + 1
    m = sum(1 for d in deg.values() if d == 2)
    return (len(core_edges), m)


def _three_core(n_v, pairs, bridges, root_edge, root_tail, alpha, dart_edge):
    """(core edges, replaced-edge count) or None.

    Reduce the root 2-edge-connected piece: smooth degree-2 vertices
    (flagging the merged edges), then repeatedly excise two-edge-cut
    sides, splicing in a flagged edge.  When a cut contains the root edge
    both sides are candidate cores (the root path joins two chunks);
    whichever side reduces to a 3-connected map wins, the root-tail side
    being preferred when both do.
    """
    t, _m = _two_core(n_v, pairs, bridges, root_edge)
    if t == 0:
        return None
    u0 = pairs[root_edge][0]
    alive = [True] * len(pairs)
    for i in bridges:
        alive[i] = False
    seen = {u0}
    stack = [u0]
    while stack:
        v = stack.pop()
        for i, (a, b) in enumerate(pairs):
            if not alive[i]:
                continue
            if a == v and b not in seen:
                seen.add(b)
                stack.append(b)
            elif b == v and a not in seen:
                seen.add(a)
                stack.append(a)
    edges = []
    root_idx = None
    for i, (a, b) in enumerate(pairs):
        if alive[i] and a in seen and b in seen:
            if i == root_edge:
                root_idx = len(edges)
            edges.append((a, b, False))
    if root_idx is None:
        return None
    deg = {}
    for u, v, _f in edges:
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
    if all(d == 2 for d in deg.values()):
        return None  # bare cycle: no cubic 2-core, hence no 3-core
    return _reduce_to_core(edges, root_idx, root_tail)


def _smooth(edges, root_idx, root_tail):
    """Suppress degree-2 vertices, flagging merged edges; returns
    (edges, root_idx, root_tail) or None when the root collapses badly."""
    edges = list(edges)
    while True:
        deg = {}
        for u, v, _f in edges:
            deg[u] = deg.get(u, 0) + 1
            deg[v] = deg.get(v, 0) + 1
        target = next((v for v, d in deg.items() if d == 2), None)
        if target is None:
            return edges, root_idx, root_tail
        inc = [i for i, (a, b, _f) in enumerate(edges) if target in (a, b)]
        if len(inc) == 1:
            return None  # loop on a degree-2 vertex: cycle remnant
        i, j = inc
        a = edges[i][0] if edges[i][1] == target else edges[i][1]
        b = edges[j][0] if edges[j][1] == target else edges[j][1]
        was_root = root_idx in (i, j)
        if was_root and root_tail == target:
            # the dart pointed from the suppressed vertex toward its head;
            # the merged edge keeps that head, so the tail is the far end
            head = a if root_idx == j else b
            root_tail = b if root_idx == j else a
            # (head unused; tail set to the endpoint away from the old head)
        old_root = edges[root_idx] if not was_root else None
        merged = (a, b, True)
        edges = [e for k, e in enumerate(edges) if k not in (i, j)]
        edges.append(merged)
        if was_root:
            root_idx = len(edges) - 1
        else:
            root_idx = edges.index(old_root)
        if a == b and len(edges) == 1:
            return None  # collapsed to a loop


def _reduce_to_core(edges, root_idx, root_tail):
    smoothed = _smooth(edges, root_idx, root_tail)
    if smoothed is None:
        return None
    edges, root_idx, root_tail = smoothed
    while True:
        verts = sorted({v for e in edges for v in e[:2]})
        if len(edges) < 2:
            return None
        cut = _find_two_cut(edges, verts)
        if cut is None:
            break
        i, j, sideA = cut
        sideB = set(verts) - sideA
        ru, rv, _rf = edges[root_idx]
        if root_idx not in (i, j):
            keep = sideA if (ru in sideA and rv in sideA) else sideB
            edges, root_idx, root_tail = _excise(
                edges, (i, j), keep, root_idx, root_tail
            )
            smoothed = _smooth(edges, root_idx, root_tail)
            if smoothed is None:
                return None
            edges, root_idx, root_tail = smoothed
            continue
        # the cut contains the root edge: both flanks are candidate cores
        tail_side = sideA if root_tail in sideA else sideB
        head_side = sideB if tail_side is sideA else sideA
        for keep in (tail_side, head_side):
            sub = _excise(edges, (i, j), keep, root_idx, root_tail)
            result = _reduce_to_core(*sub)
            if result is not None:
                return result
        return None
    verts = sorted({v for e in edges for v in e[:2]})
    relab = {v: k for k, v in enumerate(verts)}
    plain = [(relab[u], relab[v]) for u, v, _f in edges]
    if len(verts) >= 4 and _is_simple_pairs(plain) and _is_three_connected(
        len(verts), plain
    ):
        flagged = sum(1 for e in edges if e[2])
        return (len(edges), flagged)
    return None


def _find_two_cut(edges, verts):
    ne = len(edges)
    for i in range(ne):
        for j in range(i + 1, ne):
            comp = _component_without(edges, verts[0], (i, j))
            if len(comp) < len(verts):
                return i, j, comp
    return None


def _excise(edges, cut, keep, root_idx, root_tail):
    """Replace the non-kept side by a flagged edge between the kept
    endpoints of the two cut edges; reseat and orient the root if it was a
    cut edge."""
    i, j = cut
    ends = []
    root_end = None
    for k in (i, j):
        a, b, _f = edges[k]
        e_in = a if a in keep else b
        ends.append(e_in)
        if k == root_idx:
            root_end = e_in
    was_root = root_idx in (i, j)
    old_root = edges[root_idx] if not was_root else None
    new_edges = [
        e for k, e in enumerate(edges)
        if k not in (i, j) and e[0] in keep and e[1] in keep
    ]
    new_edges.append((ends[0], ends[1], True))
    if was_root:
        new_root = len(new_edges) - 1
        other_end = ends[1] if root_end == ends[0] else ends[0]
        if root_tail in keep:
            new_tail = root_tail  # path-start reading: tail is preserved
        else:
            new_tail = other_end  # path-end reading: tail is the far end
        return new_edges, new_root, new_tail
    return new_edges, new_edges.index(old_root), root_tail


def _reindex(idx, removed_desc, _new_last):
    shift = sum(1 for r in removed_desc if r < idx)
    return idx - shift


def _component_without(edges, v0, skip):
    seen = {v0}
    stack = [v0]
    while stack:
        v = stack.pop()
        for k, (a, b, _f) in enumerate(edges):
            if k in skip:
                continue
            if a == v and b not in seen:
                seen.add(b)
                stack.append(b)
            elif b == v and a not in seen:
                seen.add(a)
                stack.append(a)
    return seen


def _root_tail_side(edges, root_idx, sides, root_tail):
    a, b, _f = edges[root_idx]
    tail = a  # orientation bookkeeping: see note in parameters()
    return 0 if tail in sides[0] else 1


def _is_simple_pairs(pairs):
    seen = set()
    for u, v in pairs:
        if u == v:
            return False
        key = (min(u, v), max(u, v))
        if key in seen:
            return False
        seen.add(key)
    return True

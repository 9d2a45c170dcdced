"""Exhaustive generation of small connected regular graphs up to isomorphism.

The generator grows adjacency for the smallest unsaturated vertex with
increasing partner indices, touches fresh vertices in index order, and
skips any partner candidate that duplicates a lower-indexed vertex's
adjacency mask (the two are swappable by a transposition automorphism,
so the lower branch already covers the upper one).  Relabelings that
survive those cuts are discarded at the leaves by bucketing on per-vertex
invariants and testing isomorphism against each stored representative,
so every class of connected r-regular graphs on n vertices surfaces
exactly once.  Classification then counts, per class, how many vertices
leave the Wiener index unchanged when deleted.
"""

from __future__ import annotations

from .core import Graph, _bfs_raw, soltes_report

_SCALE_CAPS = {3: 16, 4: 13}


class CanonicalForm:
    """Relabeling-invariant adjacency encoding; equal iff isomorphic."""

    __slots__ = ("bytes",)

    def __init__(self, data: bytes):
        self.bytes = data

    def __eq__(self, other):
        if not isinstance(other, CanonicalForm):
            return NotImplemented
        return self.bytes == other.bytes

    def __hash__(self):
        return hash(self.bytes)

    def __repr__(self):
        return f"CanonicalForm({self.bytes.hex()})"


class TableRow:
    """One census row: how many graphs have exactly k removable vertices."""

    __slots__ = ("n", "r", "total", "counts")

    def __init__(self, n, r, total, counts):
        self.n = n
        self.r = r
        self.total = total
        self.counts = dict(counts)
        assert sum(self.counts.values()) <= total

    def __eq__(self, other):
        if not isinstance(other, TableRow):
            return NotImplemented
        return (self.n, self.r, self.total, self.counts) == \
            (other.n, other.r, other.total, other.counts)

    def __repr__(self):
        return (f"TableRow(n={self.n}, r={self.r}, total={self.total}, "
                f"counts={self.counts})")


def _refine(adj, colors):
    n = len(colors)
    while True:
        keys = [(colors[v], tuple(sorted(colors[u] for u in adj[v])))
                for v in range(n)]
        rank = {k: i for i, k in enumerate(sorted(set(keys)))}
        nxt = [rank[keys[v]] for v in range(n)]
        if nxt == colors:
            return colors
        colors = nxt


def _cert_bits(adj, colors):
    n = len(colors)
    pos = [0] * n
    for v in range(n):
        pos[colors[v]] = v
    bits = 0
    k = 0
    for i in range(n):
        vi = pos[i]
        row = adj[vi]
        for j in range(i + 1, n):
            bits = (bits << 1) | (1 if pos[j] in row else 0)
            k += 1
    return bits.to_bytes((k + 7) // 8 or 1, "big")


def canonical_form(g: Graph) -> CanonicalForm:
    """Canonical adjacency bytes via refinement with individualization.

    The starting invariant is each vertex's sorted distance row, which
    already separates most vertices; remaining ties are broken by trying
    every vertex of the first non-singleton class and keeping the
    lexicographically smallest adjacency encoding over all completions.
    """
    n = g.n
    if n > 20:
        raise ValueError("canonical_form is limited to n <= 20")
    if n == 0:
        return CanonicalForm(b"\x00")
    adj = [set(nbrs) for nbrs in g.adj]
    rows = [tuple(sorted(_bfs_raw(g.adj, n, v))) for v in range(n)]
    rank = {k: i for i, k in enumerate(sorted(set(rows)))}
    start = [rank[rows[v]] for v in range(n)]
    best = None

    stack = [start]
    while stack:
        colors = _refine(adj, stack.pop())
        cell = None
        for c in range(n):
            members = [v for v in range(n) if colors[v] == c]
            if len(members) > 1:
                cell = members
                break
            if not members:
                break
        if cell is None:
            cert = _cert_bits(adj, colors)
            if best is None or cert < best:
                best = cert
            continue
        for v in cell:
            child = [2 * c for c in colors]
            child[v] -= 1
            stack.append(child)
    return CanonicalForm(best)


def _mask_keys(n, masks, intern):
    """Per-vertex invariant: distance level profile + shared-neighbour counts.

    The level profile is the number of vertices at each BFS distance; the
    second part sorts |N(v) ∩ N(u)| over every u (u = v contributes the
    degree).  Together they separate most vertices of same-degree graphs,
    which keeps the matching below cheap and the buckets nearly pure.  Each
    distinct profile is interned through the shared dict so the returned
    keys are small ints that compare and hash in one step.
    """
    keys = []
    for v in range(n):
        seen = frontier = 1 << v
        levels = []
        while frontier:
            nxt = 0
            f = frontier
            while f:
                b = f & -f
                f ^= b
                nxt |= masks[b.bit_length() - 1]
            frontier = nxt & ~seen
            seen |= frontier
            if frontier:
                levels.append(frontier.bit_count())
        mv = masks[v]
        shared = sorted(map(int.bit_count, map(mv.__and__, masks)))
        key = (tuple(levels), tuple(shared))
        kid = intern.get(key)
        if kid is None:
            kid = len(intern)
            intern[key] = kid
        keys.append(kid)
    return keys


def _isomorphic(n, a1, keys1, a2, keys2):
    """Adjacency-preserving bijection search between same-bucket graphs.

    a1/a2 are neighbour bitmasks, keys per-vertex invariants; a vertex may
    only map to one with an identical key.  The partial map is extended in
    breadth-first order from the most constrained vertex, and one bitmask
    comparison per candidate checks consistency with everything mapped so
    far.
    """
    by_key = {}
    for u, k in enumerate(keys2):
        by_key.setdefault(k, []).append(u)
    cand = [by_key.get(k, ()) for k in keys1]
    start = min(range(n), key=lambda v: len(cand[v]))
    order = [start]
    reached = 1 << start
    k = 0
    while k < len(order):
        f = a1[order[k]] & ~reached
        reached |= f
        while f:
            b = f & -f
            f ^= b
            order.append(b.bit_length() - 1)
        k += 1
    order.extend(v for v in range(n) if not reached >> v & 1)
    image = [-1] * n

    def place(k, used):
        if k == n:
            return True
        v = order[k]
        nimg = 0
        f = a1[v]
        while f:
            b = f & -f
            f ^= b
            w = image[b.bit_length() - 1]
            if w >= 0:
                nimg |= 1 << w
        for u in cand[v]:
            if used >> u & 1:
                continue
            if a2[u] & used == nimg:
                image[v] = u
                if place(k + 1, used | (1 << u)):
                    return True
                image[v] = -1
        return False

    return place(0, 0)


def gen_regular(n, r):
    """Yield one representative per class of connected r-regular graphs."""
    if n <= r:
        raise ValueError("need n > r")
    if (n * r) % 2:
        raise ValueError(f"no {r}-regular graph on {n} vertices: odd n*r")

    adjm = [0] * n
    deg = [0] * n
    buckets = {}
    intern = {}
    found = []
    full = (1 << n) - 1

    def closed_small_component(v):
        comp = frontier = 1 << v
        while frontier:
            x = frontier & -frontier
            frontier ^= x
            xi = x.bit_length() - 1
            if deg[xi] < r:
                return False
            new = adjm[xi] & ~comp
            comp |= new
            frontier |= new
        return comp != full

    def rec(prev, lo):
        v = -1
        for x in range(n):
            if deg[x] < r:
                v = x
                break
        if v < 0:
            seen = frontier = 1
            while frontier:
                nxt = 0
                f = frontier
                while f:
                    b = f & -f
                    f ^= b
                    nxt |= adjm[b.bit_length() - 1]
                frontier = nxt & ~seen
                seen |= frontier
            if seen != full:
                return
            keys = _mask_keys(n, adjm, intern)
            bucket = buckets.setdefault(tuple(sorted(keys)), [])
            for i, (ha, hkeys) in enumerate(bucket):
                if _isomorphic(n, adjm, keys, ha, hkeys):
                    if i:
                        # duplicates arrive in runs; keep the hot
                        # representative in front
                        bucket.insert(0, bucket.pop(i))
                    break
            else:
                bucket.append((adjm.copy(), keys))
                edges = [(a, b) for a in range(n) for b in range(a + 1, n)
                         if adjm[a] >> b & 1]
                found.append(Graph(n, edges))
            return
        if v != prev:
            lo = v + 1
        fresh = -1
        for x in range(n):
            if deg[x] == 0 and x != v:
                fresh = x
                break
        av = adjm[v]
        for u in range(lo, n):
            if deg[u] >= r or av >> u & 1:
                continue
            if deg[u] == 0 and u != fresh:
                continue
            # identical masks make u and the earlier vertex swappable by a
            # transposition automorphism, so that branch already covers
            # this one
            au = adjm[u]
            skip = False
            for up in range(u):
                if adjm[up] == au and up != v:
                    skip = True
                    break
            if skip:
                continue
            adjm[v] |= 1 << u
            adjm[u] |= 1 << v
            deg[v] += 1
            deg[u] += 1
            if not (deg[v] == r and closed_small_component(v)):
                rec(v, u + 1)
            adjm[v] &= ~(1 << u)
            adjm[u] &= ~(1 << v)
            deg[v] -= 1
            deg[u] -= 1

    rec(-1, 0)
    yield from found


def classify_table(n, r) -> TableRow:
    """Census row over gen_regular(n, r) with per-k removable-vertex counts."""
    cap = _SCALE_CAPS.get(r, 12)
    if n > cap:
        raise ValueError(f"n={n} exceeds the r={r} scale cap of {cap}")
    total = 0
    counts = {}
    for g in gen_regular(n, r):
        total += 1
        k = len(soltes_report(g).soltes_set)
        if k:
            counts[k] = counts.get(k, 0) + 1
    return TableRow(n, r, total, counts)

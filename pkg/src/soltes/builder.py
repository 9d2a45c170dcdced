"""Assemble cubic 2-connected graphs whose deletion gap is cancelled exactly.

Starting from a double-chain base, two trees are grown from the leaves v1
and v2 with prescribed level sizes, then inter-level (red) and same-level
(blue) edges complete every vertex to degree three.  The level sizes are
chosen so the attachment's weighted distance total equals the base's
deletion gap, which makes the far pair (or every chain center) removable
without changing the Wiener index.
"""

from __future__ import annotations

from .core import (Graph, bfs_distances, contract_set, delete_vertex,
                   is_biconnected, wiener)
from .families import LabeledGraph, g_t, g_t_r
from .plan import (LayerSequence, PlanConstants, d_max, d_min, f_poly,
                   q_range, sequence_for)


class ConstructionPlan:
    """Working record of one build: trees, red/blue edges, contraction."""

    def __init__(self, base: LabeledGraph, constants: PlanConstants,
                 L: LayerSequence, r=1):
        self.base = base
        self.constants = constants
        self.L = L
        self.r = r
        self.tree_parents = {}
        self.red_edges = []
        self.blue_edges = []
        self.contraction = None
        self.levels = []
        self.build_layers = None
        self.expected_order = base.graph.n + 2 * L.q
        self._adj = None
        self._free = None
        self._children = None
        self._next_id = None
        self._new_edges = None
        self._contract_last = L.layers[-1] == 1

    @property
    def labels(self):
        return self.base.labels

    def to_dict(self):
        return {
            "t": self.constants.t,
            "r": self.r,
            "q": self.L.q,
            "delta": self.constants.delta,
            "layers": list(self.L.layers),
            "order": self.expected_order,
            "tree_parents": sorted(
                [v, p, lvl, tr] for v, (p, lvl, tr) in self.tree_parents.items()),
            "red_edges": [list(e) for e in self.red_edges],
            "blue_edges": [list(e) for e in self.blue_edges],
            "contraction": list(self.contraction) if self.contraction else None,
            "labels": {k: (list(v) if isinstance(v, tuple) else v)
                       for k, v in self.base.labels.items()},
        }


def _add_edge(plan, a, b):
    assert a != b and b not in plan._adj[a], f"parallel edge ({a},{b})"
    plan._adj[a].add(b)
    plan._adj[b].add(a)
    plan._new_edges.append((a, b))
    plan._free[a] -= 1
    plan._free[b] -= 1
    assert plan._free[a] >= 0 and plan._free[b] >= 0, f"degree overflow at ({a},{b})"


def realize_trees(base: LabeledGraph, constants: PlanConstants,
                  L: LayerSequence) -> ConstructionPlan:
    """Grow the two level trees from v1 and v2 (phase one of three).

    Level counts split as ceil/floor between the trees; children go one per
    parent first, then the earliest parents take a second child, which keeps
    the per-level number of degree-3 tree vertices minimal.  A final layer
    of one is built as a layer of three and contracted later.
    """
    plan = ConstructionPlan(base, constants, L)
    layers = list(L.layers)
    if plan._contract_last:
        if len(layers) < 2 or layers[-2] < 3:
            raise ValueError("a final layer of 1 needs at least 3 above it")
        layers[-1] = 3
    plan.build_layers = tuple(layers)

    g = base.graph
    v1, v2 = base["v1"], base["v2"]
    plan._adj = [set(nbrs) for nbrs in g.adj]
    plan._free = {v1: 2, v2: 2}
    plan._children = {v1: 0, v2: 0}
    plan._new_edges = []
    plan.levels = [([v1], [v2])]
    nxt = g.n
    for i, l in enumerate(plan.build_layers, start=1):
        counts = ((l + 1) // 2, l // 2)
        row = ([], [])
        for tr in (0, 1):
            parents = plan.levels[i - 1][tr]
            need = counts[tr]
            if need > 2 * len(parents):
                raise ValueError(
                    f"level {i}: {need} vertices cannot hang under "
                    f"{len(parents)} parents")
            single = min(need, len(parents))
            assign = parents[:single] + parents[:need - single]
            for p in assign:
                plan._adj.append(set())
                plan._free[nxt] = 3
                plan._children[nxt] = 0
                plan.tree_parents[nxt] = (p, i, tr + 1)
                row[tr].append(nxt)
                plan._children[p] += 1
                _add_edge(plan, p, nxt)
                nxt += 1
        plan.levels.append(row)
    plan._next_id = nxt
    return plan


def _level_leaves(plan, i):
    t1, t2 = plan.levels[i]
    if i == 0:
        return [], []
    return ([v for v in t1 if plan._children[v] == 0],
            [v for v in t2 if plan._children[v] == 0])


def _first_free_nonleaf(plan, row):
    for v in row:
        if plan._children[v] > 0 and plan._free[v] > 0:
            return v
    return None


def _red_options(plan, i, side):
    """Candidate endpoints at level i for a red edge, preference-ordered.

    side is "down" when the edge continues to level i+1 and "up" when it
    arrives from level i-1.  Leaves are spent on red edges when there are
    at most two of them and shielded when a same-level cycle will need
    them; the blue anchors of the sparse-leaf cases stay protected.
    """
    t1, t2 = plan.levels[i]
    leaves1, leaves2 = _level_leaves(plan, i)
    leaves = leaves1 + leaves2
    pref = []
    protected = set()
    if len(leaves) >= 3:
        protected = set(leaves)
        b1 = _first_free_nonleaf(plan, t1)
        b2 = _first_free_nonleaf(plan, t2)
        pref = [b1, b2] if side == "down" else [b2, b1]
    elif len(leaves) == 2 and leaves1 and leaves2:
        a1, a2 = leaves1[0], leaves2[0]
        for row in (t1, t2):
            b = _first_free_nonleaf(plan, row)
            if b is not None:
                protected.add(b)
        pref = [a1, a2] if side == "down" else [a2, a1]
    elif len(leaves) == 1:
        a = leaves[0]
        own, other = (t1, t2) if leaves1 else (t2, t1)
        b_same = _first_free_nonleaf(plan, own)
        b_other = _first_free_nonleaf(plan, other)
        if b_other is not None:
            protected.add(b_other)
        pref = [b_same, a] if side == "down" else [a, b_same]
    pref = [v for v in pref if v is not None]
    rest = [v for v in t1 + t2 if v not in protected and v not in pref]
    return pref + rest


def place_red_edges(plan: ConstructionPlan) -> ConstructionPlan:
    """Add one inter-level edge below every odd cumulative level count."""
    prefix = 2
    for i, l in enumerate(plan.build_layers, start=1):
        prefix += l
        if prefix % 2 == 0:
            continue
        placed = False
        for x in _red_options(plan, i - 1, "down"):
            if plan._free[x] < 1:
                continue
            for y in _red_options(plan, i, "up"):
                if plan._free[y] < 1 or x in plan._adj[y]:
                    continue
                _add_edge(plan, x, y)
                plan.red_edges.append((x, y))
                placed = True
                break
            if placed:
                break
        assert placed, f"no red edge placement between levels {i - 1} and {i}"
    return plan


def _interleave(a, b):
    out = []
    for x, y in zip(a, b):
        out.extend((x, y))
    shorter = min(len(a), len(b))
    out.extend(a[shorter:] or b[shorter:])
    return out


def _pool_match(plan, vertices):
    while True:
        live = [v for v in vertices if plan._free[v] > 0]
        if not live:
            return
        v = live[0]
        partner = next((u for u in live[1:] if u not in plan._adj[v]), None)
        assert partner is not None, f"blue matching stuck at vertex {v}"
        _add_edge(plan, v, partner)
        plan.blue_edges.append((v, partner))


def _blue_interior(plan, i):
    t1, t2 = plan.levels[i]
    leaves1, leaves2 = _level_leaves(plan, i)
    if i > 0 and i < len(plan.levels) - 1:
        assert abs(len(leaves1) - len(leaves2)) <= 1, f"leaf skew at level {i}"
    leaves = leaves1 + leaves2

    def anchor(a, target_row):
        b = _first_free_nonleaf(plan, target_row)
        if b is not None and plan._free[a] > 0 and b not in plan._adj[a]:
            _add_edge(plan, a, b)
            plan.blue_edges.append((a, b))

    if len(leaves) >= 3:
        order = _interleave(leaves1, leaves2)
        for v in order:
            assert plan._free[v] == 2, f"level-{i} leaf {v} lost valency to red"
        for a, b in zip(order, order[1:] + order[:1]):
            _add_edge(plan, a, b)
            plan.blue_edges.append((a, b))
    elif len(leaves) == 2 and leaves1 and leaves2:
        anchor(leaves1[0], t2)
        anchor(leaves2[0], t1)
    elif len(leaves) == 1:
        other = t2 if leaves1 else t1
        anchor(leaves[0], other)

    parity = sum(plan._free[v] for v in t1 + t2)
    assert parity % 2 == 0, f"odd free valency total at level {i}"
    _pool_match(plan, t1 + t2)


def _blue_last_cycle(plan):
    t1, t2 = plan.levels[-1]
    order = _interleave(t1, t2)
    assert len(order) >= 3
    for v in order:
        assert plan._free[v] == 2
    for a, b in zip(order, order[1:] + order[:1]):
        _add_edge(plan, a, b)
        plan.blue_edges.append((a, b))


def _blue_joint_tail(plan):
    """Close a final layer of two together with the layer above it."""
    (y1,), (y2,) = plan.levels[-1][0], plan.levels[-1][1]
    up1, up2 = plan.levels[-2]
    w1 = plan.tree_parents[y1][0]
    w2 = plan.tree_parents[y2][0]
    leaves = [v for v in up1 + up2 if plan._children[v] == 0]
    if not leaves:
        for a, b in ((w1, y2), (w2, y1), (y1, y2)):
            _add_edge(plan, a, b)
            plan.blue_edges.append((a, b))
    else:
        x = leaves[0]
        for a, b in ((x, y1), (x, y2), (y1, y2)):
            _add_edge(plan, a, b)
            plan.blue_edges.append((a, b))
        chain = [w1] + leaves[1:] + [w2]
        for a, b in zip(chain, chain[1:]):
            _add_edge(plan, a, b)
            plan.blue_edges.append((a, b))
    for v in list(up1) + list(up2) + [y1, y2]:
        assert plan._free[v] == 0, f"unfilled valency at {v} in tail closure"


def place_blue_edges(plan: ConstructionPlan) -> ConstructionPlan:
    """Complete every vertex to degree three with same-level edges."""
    d = len(plan.build_layers)
    joint = plan.build_layers[-1] == 2
    last_interior = d - 2 if joint else d - 1
    for i in range(last_interior + 1):
        _blue_interior(plan, i)
    if joint:
        _blue_joint_tail(plan)
    else:
        _blue_last_cycle(plan)
    return plan


def assemble(plan: ConstructionPlan) -> Graph:
    """Materialize the plan as a Graph, applying the final contraction."""
    edges = list(plan.base.graph.edges()) + plan._new_edges
    h = Graph(plan._next_id, edges)
    assert h.m == len(edges), "duplicate edge slipped into the build"
    if plan._contract_last:
        triple = plan.levels[-1][0] + plan.levels[-1][1]
        assert len(triple) == 3
        parents = {plan.tree_parents[v][0] for v in triple}
        assert len(parents) == 3, "contraction triple shares a parent"
        assert min(triple) == h.n - 3
        plan.contraction = tuple(triple)
        h = contract_set(h, triple)
        plan.levels[-1] = ([min(triple)], [])
    assert h.n == plan.expected_order
    assert all(h.degree(v) == 3 for v in range(h.n)), "not cubic"
    return h


def _build(base, constants, L, r):
    plan = realize_trees(base, constants, L)
    plan.r = r
    place_red_edges(plan)
    place_blue_edges(plan)
    h = assemble(plan)
    return h, plan


def build_two_soltes(t, q=None):
    """Cubic 2-connected graph whose two far centers are removable.

    Removable means deleting the vertex keeps the Wiener index; both
    centers of the base ring qualify in the returned graph.
    """
    if t < 3:
        raise ValueError("build_two_soltes needs t >= 3")
    lo, hi = q_range(t)
    if q is None:
        q = lo
    elif not lo <= q <= hi:
        raise ValueError(f"q outside [{lo},{hi}]")
    base = g_t(t)
    constants = PlanConstants(t)
    L = sequence_for(f_poly(t), q, constants)
    return _build(base, constants, L, 1)


def build_many_soltes(t, r, q=None):
    """Cubic 2-connected graph where all 2^r chain centers are removable.

    The deletion gap is measured on the fanned base by brute force, never
    extrapolated from the r=1 polynomial.  Raises ValueError naming the gap
    and the searched interval when no attachment size fits.
    """
    if t < 1 or r < 1:
        raise ValueError("build_many_soltes needs t >= 1 and r >= 1")
    base = g_t_r(t, r)
    delta = bfs_distances(base.graph, base["v1"])[base["u1"]]
    constants = PlanConstants(t, delta)
    w0 = wiener(base.graph)
    gap = wiener(delete_vertex(base.graph, base["u1"])) - w0
    feasible = []
    qq = 1
    while d_min(qq, constants) <= gap:
        if gap <= d_max(qq, constants):
            feasible.append(qq)
        qq += 1
    if not feasible:
        raise ValueError(
            f"infeasible: gap {gap} at t={t}, r={r} fits no q in [1, {qq - 1}]")
    if q is None:
        q = feasible[0]
    elif q not in feasible:
        raise ValueError(
            f"infeasible: gap {gap} needs q in {feasible}, got {q}")
    L = sequence_for(gap, q, constants)
    return _build(base, constants, L, r)


def verify_construction(h: Graph, plan: ConstructionPlan) -> dict:
    """Aggregate postcondition checks for a finished build."""
    base = plan.base
    d_v1 = bfs_distances(h, base["v1"])
    d_v2 = bfs_distances(h, base["v2"])
    layering = True
    for i, (t1, t2) in enumerate(plan.levels):
        for v in t1 + t2:
            if min(d_v1[v], d_v2[v]) != i:
                layering = False
    w = wiener(h)
    centers = base.labels.get("centers", (base["u1"], base["u2"]))
    per_center = {c: wiener(delete_vertex(h, c)) for c in centers}
    report = {
        "order": h.n == plan.expected_order,
        "regular": all(h.degree(v) == 3 for v in range(h.n)),
        "biconnected": is_biconnected(h),
        "layering": layering,
        "centers": {c: per_center[c] == w for c in centers},
        "wiener_gap": w - per_center[base["u1"]],
    }
    report["ok"] = (report["order"] and report["regular"]
                    and report["biconnected"] and report["layering"]
                    and all(report["centers"].values()))
    return report

"""Closed forms and layer-sequence calculus for the tree-attachment plans.

A layer sequence (l_1, ..., l_d) prescribes how many attached vertices sit
at each distance i from the two attachment leaves.  The weighted total
d_of(L) = sum (delta + i) * l_i is the amount the attachment adds to the
deletion gap, so hitting a target gap means finding a sequence with the
right weighted total; the modify step walks the whole range one unit at a
time, from the binary-tree-like profile up to the all-twos chain.
"""

from __future__ import annotations

import math


class SequenceExhausted(Exception):
    """modify() found no applicable index (the all-twos profile is terminal)."""


class LayerSequence:
    """Positive layer counts satisfying the growth and cap conditions.

    With d = len(layers): sum is even (2q); 2 <= l_i <= 2^(i+1) for i < d;
    1 <= l_d <= 2^(d+1); and l_{i+1} <= 2 * l_i.
    """

    __slots__ = ("layers", "q")

    def __init__(self, layers):
        layers = tuple(int(x) for x in layers)
        if not layers:
            raise ValueError("layer sequence must be non-empty")
        total = sum(layers)
        if total % 2:
            raise ValueError(f"layer counts sum to odd total {total}")
        d = len(layers)
        for i, l in enumerate(layers, start=1):
            lo = 1 if i == d else 2
            if not (lo <= l <= 2 ** (i + 1)):
                raise ValueError(
                    f"layer {i} count {l} outside [{lo}, {2 ** (i + 1)}]")
            if i < d and layers[i] > 2 * l:
                raise ValueError(
                    f"layer {i + 1} grows faster than doubling ({layers[i]} > 2*{l})")
        self.layers = layers
        self.q = total // 2

    @property
    def depth(self):
        return len(self.layers)

    def __iter__(self):
        return iter(self.layers)

    def __len__(self):
        return len(self.layers)

    def __getitem__(self, i):
        return self.layers[i]

    def __eq__(self, other):
        if isinstance(other, LayerSequence):
            return self.layers == other.layers
        if isinstance(other, tuple):
            return self.layers == other
        return NotImplemented

    def __hash__(self):
        return hash(self.layers)

    def __repr__(self):
        return f"LayerSequence{self.layers}"

    def __str__(self):
        return "(" + ",".join(str(x) for x in self.layers) + ")"


class PlanConstants:
    """Chain parameter t and the distance delta from the far pair to a leaf."""

    __slots__ = ("t", "delta")

    def __init__(self, t, delta=None):
        if t < 1:
            raise ValueError("t must be at least 1")
        self.t = t
        self.delta = 3 * t + 3 if delta is None else delta
        if self.delta < 1:
            raise ValueError("delta must be positive")

    def __repr__(self):
        return f"PlanConstants(t={self.t}, delta={self.delta})"


def tree_depth(q):
    """floor(log2(2q + 3)); depth parameter of the densest profile for q."""
    if q < 1:
        raise ValueError("q must be at least 1")
    return (2 * q + 3).bit_length() - 1


def f_poly(t):
    """Deletion gap of the bare double-chain construction: 16t^3-8t^2-26t-14."""
    if t < 1:
        raise ValueError("t must be at least 1")
    return ((16 * t - 8) * t - 26) * t - 14


def d_of(L: LayerSequence, c: PlanConstants):
    return sum((c.delta + i) * l for i, l in enumerate(L.layers, start=1))


def short_sequence(q) -> LayerSequence:
    """Densest profile: full binary growth, remainder in the last layer."""
    a = tree_depth(q)
    layers = [2 ** (i + 1) for i in range(1, a - 1)]
    layers.append(2 * q - 2 ** a + 4)
    return LayerSequence(layers)


def long_sequence(q) -> LayerSequence:
    """Sparsest profile: q layers of two."""
    if q < 1:
        raise ValueError("q must be at least 1")
    return LayerSequence((2,) * q)


def d_min(q, c: PlanConstants):
    a = tree_depth(q)
    return 2 * q * (c.delta + a - 1) - 2 ** (a + 1) + 4 * a


def d_max(q, c: PlanConstants):
    return 2 * q * c.delta + q * q + q


def q_range(t):
    """Smallest and largest q whose [d_min, d_max] window contains f_poly(t)."""
    if t < 3:
        raise ValueError("q_range requires t >= 3")
    c = PlanConstants(t)
    target = f_poly(t)
    bound = 16 * t * math.isqrt(t - 1) + 16 * t
    hits = [q for q in range(1, bound + 1)
            if d_min(q, c) <= target <= d_max(q, c)]
    if not hits:
        raise ValueError(f"no q admits target {target} for t={t}")
    # d_min and d_max are both increasing in q, so the hit set is an interval
    assert hits == list(range(hits[0], hits[-1] + 1))
    return hits[0], hits[-1]


def modify(L: LayerSequence) -> LayerSequence:
    """Move one unit of layer mass one level deeper.

    The chosen index is the smallest i with l_i >= 3 and either
    2(l_i - 1) > l_{i+1} + 1 or l_i = l_{i+1} = 3, reading l_{d+1} = 0.
    Raises SequenceExhausted when no index qualifies.
    """
    layers = L.layers
    d = len(layers)
    for i in range(d):
        li = layers[i]
        nxt = layers[i + 1] if i + 1 < d else 0
        if li >= 3 and (2 * (li - 1) > nxt + 1 or (li == 3 and nxt == 3)):
            out = list(layers)
            out[i] -= 1
            if i + 1 < d:
                out[i + 1] += 1
            else:
                out.append(1)
            return LayerSequence(out)
    raise SequenceExhausted(str(L))


def sequence_for(D, q, c: PlanConstants) -> LayerSequence:
    """The modify-walk sequence with weighted total exactly D."""
    lo, hi = d_min(q, c), d_max(q, c)
    if not lo <= D <= hi:
        raise ValueError(f"D={D} outside [{lo}, {hi}] for q={q}")
    L = short_sequence(q)
    for _ in range(D - lo):
        L = modify(L)
    assert d_of(L, c) == D
    return L


def enumerate_chain(q):
    """All sequences on the modify walk from short to exhaustion, in order."""
    c = PlanConstants(1)
    cap = d_max(q, c) - d_min(q, c) + 1
    L = short_sequence(q)
    out = [L]
    for _ in range(cap):
        try:
            L = modify(L)
        except SequenceExhausted:
            return out
        out.append(L)
    raise RuntimeError(f"modify walk for q={q} exceeded {cap} steps")

"""graph6 encoding/decoding, cycle-notation parsing, report serialization."""

from __future__ import annotations

import json

from .cayley import Permutation
from .core import Graph

_HEADER = ">>graph6<<"
_MAX_N = 10 ** 6


def _size_field(n):
    if n <= 62:
        return chr(n + 63)
    if n <= 262143:
        return "~" + "".join(
            chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(
        chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def encode_graph6(g: Graph) -> str:
    """Header-free graph6 text for g."""
    if g.n > _MAX_N:
        raise ValueError(f"graph too large to encode (n={g.n})")
    # One bitmask per column of the upper triangle: bit (v-1-u) of masks[v]
    # is the edge (u, v), so the mask already holds column v's bits in
    # stream order (u = 0 lands on the most significant end).
    masks = [0] * g.n
    for u, v in g.edges():
        masks[v] |= 1 << (v - 1 - u)
    big = 0
    for j in range(1, g.n):
        big = (big << j) | masks[j]
    nbits = g.n * (g.n - 1) // 2
    need = (nbits + 5) // 6
    big <<= need * 6 - nbits
    chars = [""] * need
    for k in range(need - 1, -1, -1):
        chars[k] = chr((big & 63) + 63)
        big >>= 6
    return _size_field(g.n) + "".join(chars)


def decode_graph6(s: str) -> Graph:
    """Parse one graph6 line (optionally ">>graph6<<"-prefixed)."""
    if s.startswith(_HEADER):
        s = s[len(_HEADER):]
    if not s:
        raise ValueError("empty graph6 string")
    lo, hi = min(s), max(s)
    if ord(lo) < 63 or ord(hi) > 126:
        ch = lo if ord(lo) < 63 else hi
        raise ValueError(f"character {ch!r} outside graph6 range 63..126")
    if s[0] != "~":
        n = ord(s[0]) - 63
        body = s[1:]
    elif len(s) >= 2 and s[1] != "~":
        if len(s) < 4:
            raise ValueError("truncated graph6 size field")
        n = 0
        for ch in s[1:4]:
            n = (n << 6) | (ord(ch) - 63)
        body = s[4:]
    else:
        if len(s) < 8:
            raise ValueError("truncated graph6 size field")
        n = 0
        for ch in s[2:8]:
            n = (n << 6) | (ord(ch) - 63)
        body = s[8:]
    if n > _MAX_N:
        raise ValueError(f"graph6 order {n} exceeds supported maximum {_MAX_N}")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) != need:
        raise ValueError(
            f"graph6 body has {len(body)} characters, expected {need} for n={n}")
    big = 0
    for ch in body:
        big = (big << 6) | (ord(ch) - 63)
    big >>= need * 6 - nbits
    # Columns come off the bottom of the integer in reverse stream order;
    # reversing at the end restores lexicographic (u, v) edge order.
    edges = []
    for j in range(n - 1, 0, -1):
        row = big & ((1 << j) - 1)
        big >>= j
        while row:
            low = row & -row
            row ^= low
            edges.append((j - low.bit_length(), j))
    edges.reverse()
    return Graph(n, edges)


def parse_permutation(s: str, degree: int) -> Permutation:
    """Parse 1-based disjoint cycles like "(2,4)(6,12,17)" on 1..degree.

    The result acts on 0..degree-1.  "()" is the identity.
    """
    if degree < 1:
        raise ValueError("degree must be positive")
    text = s.replace(" ", "")
    if not text:
        raise ValueError("empty permutation text")
    cycles = []
    pos = 0
    while pos < len(text):
        if text[pos] != "(":
            raise ValueError(f"expected '(' at position {pos} in {s!r}")
        end = text.find(")", pos)
        if end < 0:
            raise ValueError(f"unclosed cycle in {s!r}")
        inner = text[pos + 1:end]
        if inner:
            try:
                entries = [int(tok) for tok in inner.split(",")]
            except ValueError:
                raise ValueError(f"malformed cycle {text[pos:end + 1]!r}") from None
            cycles.append(entries)
        pos = end + 1
    mapping = list(range(degree))
    used = set()
    for cyc in cycles:
        for x in cyc:
            if not (1 <= x <= degree):
                raise ValueError(f"entry {x} outside 1..{degree}")
            if x in used:
                raise ValueError(f"entry {x} repeated")
            used.add(x)
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            mapping[a - 1] = b - 1
    return Permutation(mapping)


def write_report(report, g_id: str) -> str:
    """One JSON line per graph: id, n, wiener, soltes_count, soltes_vertices, alpha."""
    count = len(report.soltes_set)
    if count == 0:
        alpha = f"0/{report.n}"
    else:
        alpha = f"{report.alpha.numerator}/{report.alpha.denominator}"
    return json.dumps({
        "id": g_id,
        "n": report.n,
        "wiener": report.wiener,
        "soltes_count": count,
        "soltes_vertices": list(report.soltes_set),
        "alpha": alpha,
    })

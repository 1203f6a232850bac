"""graph6 / sparse6 interchange and DOT export.

graph6 packs the upper triangle of the adjacency matrix column by column
into 6-bit groups offset by 63; sparse6 (':' prefix) is an edge stream with
a run-length flavored vertex counter. Both formats follow the de-facto
standard used by the common generator tools, so corpora produced elsewhere
load directly. Encoding emits graph6 only; sparse6 is accepted on input.
"""

from __future__ import annotations

from .errors import InputError
from .graphs import Graph

GRAPH6_HEADER = ">>graph6<<"
SPARSE6_HEADER = ">>sparse6<<"


def _vals(s: str) -> list[int]:
    vals = []
    for ch in s:
        v = ord(ch) - 63
        if not 0 <= v <= 63:
            raise InputError(f"byte {ch!r} outside the graph6 alphabet")
        vals.append(v)
    return vals


def _parse_n(vals: list[int]) -> tuple[int, int]:
    """Decode the leading vertex-count field; return (n, chars consumed)."""
    if not vals:
        raise InputError("empty graph text")
    if vals[0] < 63:
        return vals[0], 1
    if len(vals) >= 2 and vals[1] < 63:
        if len(vals) < 4:
            raise InputError("truncated vertex count")
        return (vals[1] << 12) | (vals[2] << 6) | vals[3], 4
    if len(vals) < 8:
        raise InputError("truncated vertex count")
    n = 0
    for v in vals[2:8]:
        n = n << 6 | v
    return n, 8


def _encode_n(n: int) -> str:
    if n < 0:
        raise InputError("vertex count must be non-negative")
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr((n >> s & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr((n >> s & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise InputError("vertex count too large for graph6")


def decode_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    vals = _vals(s)
    n, at = _parse_n(vals)
    body = vals[at:]
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise InputError(
            f"graph6 body has {len(body)} groups, expected {(nbits + 5) // 6} for n={n}"
        )
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(n, tuple(adj))


def encode_graph6(g: Graph) -> str:
    out = [_encode_n(g.n)]
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        for i in range(j):
            acc = acc << 1 | (g.adj[i] >> j & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def decode_sparse6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(SPARSE6_HEADER):
        s = s[len(SPARSE6_HEADER):]
    if not s.startswith(":"):
        raise InputError("sparse6 text must start with ':'")
    vals = _vals(s[1:])
    n, at = _parse_n(vals)
    body = vals[at:]
    k = 1
    while 1 << k < n:
        k += 1

    def pairs():
        d = dlen = 0
        pos = 0
        while True:
            if dlen < 1:
                if pos == len(body):
                    return
                d = body[pos]
                pos += 1
                dlen = 6
            dlen -= 1
            b = d >> dlen & 1
            x = d & ((1 << dlen) - 1)
            xlen = dlen
            while xlen < k:
                if pos == len(body):
                    return
                d = body[pos]
                pos += 1
                x = x << 6 | d
                xlen += 6
            dlen = xlen - k
            yield b, x >> dlen

    adj = [0] * n
    v = 0
    for b, x in pairs():
        if b:
            v += 1
        if x >= n or v >= n:
            break
        if x > v:
            v = x
        else:
            if x == v:
                raise InputError(f"sparse6 stream encodes a loop at {v}")
            adj[x] |= 1 << v
            adj[v] |= 1 << x
    return Graph(n, tuple(adj))


def parse_graph(text: str) -> Graph:
    """Decode either format, sniffing the sparse6 ':' marker and headers."""
    s = text.strip()
    if s.startswith(SPARSE6_HEADER) or s.startswith(":"):
        return decode_sparse6(s)
    return decode_graph6(s)


def to_dot(g: Graph, name: str = "G") -> str:
    """Adjacency-only DOT text; no layout attributes."""
    lines = [f"graph {name} {{"]
    lines += [f"  {v};" for v in range(g.n)]
    lines += [f"  {u} -- {v};" for u, v in g.edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"

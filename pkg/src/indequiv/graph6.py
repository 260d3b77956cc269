"""graph6 interchange format (canonical variant: n <= 62, no header) and a
human-readable edge-list text format for debugging."""
from __future__ import annotations

from .graphs import Graph


class Graph6Error(ValueError):
    """Malformed graph6 input; carries the byte offset of the problem."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def emit_graph6(g: Graph) -> str:
    """Standard graph6 encoding of the given labelled graph."""
    n = g.n
    if n > 62:
        raise ValueError(f"graph6 single-byte size field supports n <= 62, got {n}")
    out = [chr(n + 63)]
    bit = 5
    acc = 0
    for v in range(1, n):
        for u in range(v):
            if g.has_edge(u, v):
                acc |= 1 << bit
            if bit == 0:
                out.append(chr(acc + 63))
                acc, bit = 0, 5
            else:
                bit -= 1
    if bit != 5:
        out.append(chr(acc + 63))
    return "".join(out)


def parse_graph6(s: str) -> Graph:
    """Decode a graph6 string (n <= 62, zero padding required)."""
    if not s:
        raise Graph6Error("empty graph6 string", 0)
    n = ord(s[0]) - 63
    if not 0 <= n <= 62:
        raise Graph6Error(f"size byte {s[0]!r} out of range", 0)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(s) - 1 != need:
        raise Graph6Error(
            f"expected {need} data bytes for n={n}, got {len(s) - 1}", min(len(s), 1)
        )
    bits = []
    for i, ch in enumerate(s[1:], start=1):
        val = ord(ch) - 63
        if not 0 <= val < 64:
            raise Graph6Error(f"invalid data byte {ch!r}", i)
        bits.extend((val >> k) & 1 for k in range(5, -1, -1))
    if any(bits[nbits:]):
        raise Graph6Error("nonzero padding bits", len(s) - 1)
    edges = []
    idx = 0
    for v in range(1, n):
        for u in range(v):
            if bits[idx]:
                edges.append((u, v))
            idx += 1
    return Graph(n, edges)


def emit_edge_list(g: Graph) -> str:
    """Debug format: "n_vertices; u-v, u-v, ..."."""
    pairs = ", ".join(f"{u}-{v}" for u, v in g.sorted_edges())
    return f"{g.n}; {pairs}" if pairs else f"{g.n};"


def parse_edge_list(s: str) -> Graph:
    head, _, rest = s.partition(";")
    try:
        n = int(head.strip())
    except ValueError:
        raise ValueError(f"bad vertex count {head.strip()!r}") from None
    edges = []
    for part in rest.split(","):
        part = part.strip()
        if not part:
            continue
        u, _, v = part.partition("-")
        edges.append((int(u), int(v)))
    return Graph(n, edges)

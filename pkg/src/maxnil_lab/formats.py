"""Serialization: the graph6 codec and DOT text export.

graph6 follows the published standard: N(n) header, then the upper
triangle of the adjacency matrix in column order, packed 6 bits per
byte with an offset of 63. Decoding is strict (bad characters, size
mismatches and nonzero padding are all rejected) and reports the byte
offset of the failure within the record, after any ``>>graph6<<``
header.
"""

from __future__ import annotations

from .errors import Graph6Error
from .graph import Graph

_HEADER = ">>graph6<<"


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr((n >> s & 63) + 63) for s in (12, 6, 0))
    raise Graph6Error(f"order {n} exceeds the supported graph6 range")


def graph6_encode(g: Graph) -> str:
    out = [_encode_n(g.n)]
    acc = cnt = 0
    for j in range(1, g.n):
        for i in range(j):
            acc = acc << 1 | (1 if g.has_edge(i, j) else 0)
            cnt += 1
            if cnt == 6:
                out.append(chr(acc + 63))
                acc = cnt = 0
    if cnt:
        out.append(chr((acc << (6 - cnt)) + 63))
    return "".join(out)


def graph6_decode(s: str) -> Graph:
    record = s.strip()
    if record.startswith(_HEADER):
        record = record[len(_HEADER):]
    if not record:
        raise Graph6Error("empty graph6 record", offset=0)
    vals = []
    for pos, ch in enumerate(record):
        code = ord(ch)
        if not 63 <= code <= 126:
            raise Graph6Error(f"invalid graph6 character {ch!r} at byte {pos}", offset=pos)
        vals.append(code - 63)
    if vals[0] == 63:
        if len(vals) < 4:
            raise Graph6Error("truncated graph6 order field", offset=len(record))
        if vals[1] == 63:
            raise Graph6Error("graph6 orders above 258047 are not supported", offset=1)
        n = vals[1] << 12 | vals[2] << 6 | vals[3]
        data, base = vals[4:], 4
    else:
        n = vals[0]
        data, base = vals[1:], 1
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(data) < need:
        raise Graph6Error(
            f"truncated graph6 record: expected {need} data bytes, got {len(data)}",
            offset=len(record),
        )
    if len(data) > need:
        raise Graph6Error("trailing bytes after graph6 record", offset=base + need)
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if data[idx // 6] >> (5 - idx % 6) & 1:
                edges.append((i, j))
            idx += 1
    # padding bits must be zero per the standard
    if need and data[-1] & ((1 << (need * 6 - nbits)) - 1):
        raise Graph6Error("nonzero padding bits in graph6 record", offset=base + need - 1)
    return Graph(n, edges)


def dot_export(g: Graph) -> str:
    """Undirected DOT text with label attributes where present."""
    lines = ["graph G {"]
    labels = g.label_map()
    for v in range(g.n):
        if v in labels:
            lines.append(f'  {v} [label="{labels[v]}"];')
        elif g.degree(v) == 0:
            lines.append(f"  {v};")
    for u, v in g.edges:
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"

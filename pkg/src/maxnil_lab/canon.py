"""Canonical labeling and isomorphism for small graphs.

The canonical form is computed by equitable color refinement followed by
full individualization of the first non-singleton color class, taking
the lexicographically least adjacency encoding over all leaves of the
search tree. Equal byte strings are therefore equivalent to isomorphism.
Exhaustive branching is fine at the orders handled here (n below ~40,
and the dense worst cases never exceed n = 10).
"""

from __future__ import annotations

from functools import lru_cache
from typing import Optional, Sequence, Tuple

from .graph import Graph


def _refine(adj: Sequence[frozenset], coloring: list) -> list:
    n = len(adj)
    colors = list(coloring)
    while True:
        sig = [(colors[v], tuple(sorted(colors[u] for u in adj[v]))) for v in range(n)]
        order = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [order[sig[v]] for v in range(n)]
        if new == colors:
            return colors
        colors = new


def _encode(g: Graph, perm: Sequence[int]) -> bytes:
    # perm[v] = position of v in the canonical order
    n = g.n
    inv = [0] * n
    for v, p in enumerate(perm):
        inv[p] = v
    bits = bytearray()
    acc = cnt = 0
    for j in range(1, n):
        for i in range(j):
            acc = acc << 1 | (1 if g.has_edge(inv[i], inv[j]) else 0)
            cnt += 1
            if cnt == 8:
                bits.append(acc)
                acc = cnt = 0
    if cnt:
        bits.append(acc << (8 - cnt))
    return bytes([n]) + bytes(bits)


def _interchangeable(adj: Sequence[frozenset], cell: list) -> bool:
    # every permutation of the cell is an automorphism: the members share
    # one outside neighborhood and induce a complete or an empty subgraph
    members = set(cell)
    outside = adj[cell[0]] - members
    inner = len(adj[cell[0]] & members)
    if inner not in (0, len(cell) - 1):
        return False
    for v in cell[1:]:
        if adj[v] - members != outside or len(adj[v] & members) != inner:
            return False
    return True


def _search(g: Graph, coloring: list) -> bytes:
    coloring = _refine(g._adj, coloring)
    cells: dict = {}
    for v, c in enumerate(coloring):
        cells.setdefault(c, []).append(v)
    target = None
    for c in sorted(cells):
        if len(cells[c]) > 1:
            target = cells[c]
            break
    if target is None:
        return _encode(g, coloring)
    if _interchangeable(g._adj, target):
        target = target[:1]
    best: Optional[bytes] = None
    for v in target:
        child = [2 * c for c in coloring]
        child[v] -= 1
        enc = _search(g, child)
        if best is None or enc < best:
            best = enc
    return best


def canonical_form(g: Graph, colors: Optional[Sequence[int]] = None) -> bytes:
    """Canonical byte string; equal strings iff isomorphic.

    ``colors`` is an optional initial partition (smaller color first);
    two colored graphs get the same form iff a color-preserving
    isomorphism exists.
    """
    if g.n == 0:
        return b"\x00"
    init = list(colors) if colors is not None else [0] * g.n
    if len(init) != g.n:
        raise ValueError(f"expected {g.n} colors, got {len(init)}")
    return _search(g, init)


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or g1.m != g2.m:
        return False
    if g1.degree_sequence() != g2.degree_sequence():
        return False
    return canonical_form(g1) == canonical_form(g2)


@lru_cache(maxsize=1024)
def automorphism_orbits(g: Graph) -> Tuple[int, ...]:
    """Orbit representative (smallest member) for each vertex.

    Vertices u, v lie in one orbit iff marking u and marking v yield the
    same canonical form, so the computation is exact, not heuristic.
    """
    keys = {}
    reps = [0] * g.n
    for v in range(g.n):
        colors = [0] * g.n
        colors[v] = 1
        key = canonical_form(g, colors)
        if key in keys:
            reps[v] = keys[key]
        else:
            keys[key] = v
            reps[v] = v
    return tuple(reps)

"""Minor containment with certificates.

A pattern P is a minor of a host H iff H carries disjoint connected
branch sets, one per pattern vertex, with a host edge between the two
sets of every pattern edge. Two complementary engines live here.

``find_minor`` grows branch sets by connector paths: it seeds one
pattern vertex, then repeatedly picks an unwitnessed pattern edge with a
seeded endpoint and branches over all chordless free paths that either
join the two fragments or found the missing one, splitting each path
prefix/suffix between the two classes. Restricting to chordless
connectors is complete: any valid connector inside a model shortcuts
down to a chordless one that stays inside the same two branch sets.

``lattice_search`` answers "does the host contain any of these patterns
as a minor" for small connected hosts by breadth-first search over
contraction partitions: partitions of the host vertices into connected
blocks, refined one merge of adjacent blocks at a time. For a connected
host, P is a minor iff some partition into exactly n(P) blocks has P as
a spanning subgraph of its quotient (absorb unused vertices into
adjacent branch sets), so each partition is tested once against every
pattern of matching order, whatever their number. Partitions are keyed
by their block bitmasks, which makes deduplication exact without any
isomorphism work.

Pruning uses the free-vertex components: every unwitnessed pair of
seeded fragments needs a free component adjacent to both, every unseeded
pattern vertex needs a free component adjacent to all of its seeded
neighbors, and adjacent unseeded vertices must share a feasible
component. Connector enumeration is confined to the components that can
actually reach the goal. The first seed is restricted to host orbit
representatives, which is sound because any model maps to an equivalent
one along an automorphism. States are keyed by their fragment tuple,
minimized over pattern and host automorphisms in one batched pass, and
failed states are memoized; this collapses the many connector orders
that converge on the same partial model and the assignments that differ
only by a symmetry of either side.

Everything is deterministic: goals are chosen fail-first with fixed tie
breaks, vertices ascend, path enumeration is lexicographic. ``budget``
bounds the number of search steps (state expansions plus path
extensions) and turns exhaustion into UndecidedError instead of a wrong
answer.
"""

from __future__ import annotations

import sys
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, Iterator, Optional, Sequence, Tuple

import numpy as np

from .canon import automorphism_orbits
from .errors import UndecidedError
from .formats import graph6_decode, graph6_encode
from .graph import Edge, Graph

__all__ = ["MinorModel", "find_minor", "lattice_search", "verify_minor_model",
           "model_to_json_dict", "model_from_json_dict"]


@dataclass(frozen=True, eq=False)
class MinorModel:
    """Witness that ``pattern`` is a minor of a host graph.

    branch_sets maps each pattern vertex to its host vertex set and
    edge_witnesses maps each pattern edge (i, j) with i < j to a host
    edge (a, b) with a in the branch set of i and b in that of j.
    """

    branch_sets: Dict[int, frozenset]
    edge_witnesses: Dict[Edge, Edge]
    pattern: Optional[Graph] = field(default=None, compare=False)


def verify_minor_model(host: Graph, pattern: Graph, model: MinorModel) -> bool:
    """Check every invariant of the model, independent of any search."""
    try:
        if set(model.branch_sets) != set(range(pattern.n)):
            return False
        used: set = set()
        for p, bs in model.branch_sets.items():
            if not bs:
                return False
            for v in bs:
                if not (isinstance(v, int) and 0 <= v < host.n) or v in used:
                    return False
                used.add(v)
            # connectivity of the branch set inside the host
            bs = set(bs)
            seen = {min(bs)}
            queue = [min(bs)]
            while queue:
                v = queue.pop()
                for w in host.neighbors(v):
                    if w in bs and w not in seen:
                        seen.add(w)
                        queue.append(w)
            if seen != bs:
                return False
        for (i, j) in pattern.edges:
            if (i, j) not in model.edge_witnesses:
                return False
            a, b = model.edge_witnesses[(i, j)]
            if a not in model.branch_sets[i] or b not in model.branch_sets[j]:
                return False
            if not host.has_edge(a, b):
                return False
        return True
    except Exception:
        return False


def model_to_json_dict(model: MinorModel) -> dict:
    out = {
        "branch_sets": {str(p): sorted(bs) for p, bs in sorted(model.branch_sets.items())},
        "edge_witnesses": {f"{i}-{j}": list(model.edge_witnesses[(i, j)])
                           for (i, j) in sorted(model.edge_witnesses)},
    }
    if model.pattern is not None:
        out["pattern"] = graph6_encode(model.pattern)
    return out


def model_from_json_dict(d: dict) -> MinorModel:
    branch = {int(p): frozenset(vs) for p, vs in d["branch_sets"].items()}
    wit = {}
    for key, (a, b) in d["edge_witnesses"].items():
        i, j = key.split("-")
        wit[(int(i), int(j))] = (a, b)
    pat = graph6_decode(d["pattern"]) if "pattern" in d else None
    return MinorModel(branch, wit, pat)


@lru_cache(maxsize=256)
def _automorphisms(g: Graph, limit: Optional[int] = None) -> Tuple[Tuple[int, ...], ...]:
    """Adjacency-preserving vertex permutations, by backtracking.

    With ``limit``, enumeration stops after that many permutations. Any
    deterministic subset keeps the symmetry dedup sound: states with
    equal canonical keys are still related by a true automorphism.
    """
    n = g.n
    deg = [g.degree(v) for v in range(n)]
    perms: list = []
    assign = [-1] * n
    used = [False] * n

    def rec(p: int) -> bool:
        if limit is not None and len(perms) >= limit:
            return True
        if p == n:
            perms.append(tuple(assign))
            return limit is not None and len(perms) >= limit
        for v in range(n):
            if used[v] or deg[v] != deg[p]:
                continue
            if any(g.has_edge(p, q) != g.has_edge(v, assign[q]) for q in range(p)):
                continue
            assign[p] = v
            used[v] = True
            full = rec(p + 1)
            used[v] = False
            assign[p] = -1
            if full:
                return True
        return False

    rec(0)
    return tuple(perms)


def _mask_tables(perm: Tuple[int, ...], n: int) -> list:
    """Byte lookup tables remapping a vertex bitmask along ``perm``."""
    tables = []
    for lo in range(0, n, 8):
        width = min(8, n - lo)
        t = [0] * 256
        for val in range(1, 1 << width):
            low = val & -val
            t[val] = t[val ^ low] | 1 << perm[lo + low.bit_length() - 1]
        tables.append(t)
    return tables


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _free_components(mask: int, adj: Tuple[int, ...]) -> list:
    comps = []
    rem = mask
    while rem:
        seed = rem & -rem
        comp = seed
        frontier = seed
        while frontier:
            grow = 0
            for v in _bits(frontier):
                grow |= adj[v]
            grow &= mask & ~comp
            comp |= grow
            frontier = grow
        comps.append(comp)
        rem &= ~comp
    return comps


class _Search:
    def __init__(self, host: Graph, pattern: Graph, budget: Optional[int]):
        self.host = host
        self.pattern = pattern
        self.adj = tuple(sum(1 << w for w in host.neighbors(v)) for v in range(host.n))
        self.pedges = pattern.edges
        self.pdeg = [pattern.degree(v) for v in range(pattern.n)]
        self.budget = budget
        self.nodes = 0
        # pattern neighbors per vertex, for the feasibility prunes
        self.pnbrs = [sorted(pattern.neighbors(v)) for v in range(pattern.n)]
        self.failed: set = set()
        self.complete_pattern = pattern.m == pattern.n * (pattern.n - 1) // 2
        # symmetry data for state keys: byte lookup tables for host
        # automorphisms, index arrays for pattern automorphisms
        hauts = _automorphisms(host, 512)
        self.hlut = None
        if len(hauts) > 1:
            step = max(1, len(hauts) // 32)
            subset = hauts[::step][:32]
            self.hlut = np.array([_mask_tables(perm, host.n) for perm in subset],
                                 dtype=np.uint64)
        self.nblocks = (host.n + 7) // 8
        self.pperms = None
        if not self.complete_pattern:
            pauts = _automorphisms(pattern, 512)
            if len(pauts) > 1:
                cap = max(1, 2048 // (1 if self.hlut is None else len(self.hlut)))
                step = max(1, (len(pauts) + cap - 1) // cap)
                self.pperms = np.array(pauts[::step][:cap], dtype=np.intp)
        # column groups for packing a key row into uint64 words
        per = max(1, 64 // host.n)
        self.packing = [range(lo, min(lo + per, pattern.n))
                        for lo in range(0, pattern.n, per)]
        self.pmask = tuple(sum(1 << w for w in pattern.neighbors(v))
                           for v in range(pattern.n))
        self._nbr_cache: Dict[int, int] = {}

    def _state_key(self, frags: list):
        # minimum of the state over (a subset of) host x pattern
        # automorphisms: equal keys always come from genuinely
        # equivalent states, whatever subset the minimum ranges over
        if self.hlut is None and self.pperms is None:
            return tuple(sorted(frags)) if self.complete_pattern else tuple(frags)
        arr = np.array(frags, dtype=np.uint64)
        if self.hlut is None:
            rows = arr[None, :]
        else:
            idx = (arr & np.uint64(255)).astype(np.intp)
            rows = self.hlut[:, 0, idx]
            for b in range(1, self.nblocks):
                idx = (arr >> np.uint64(8 * b) & np.uint64(255)).astype(np.intp)
                rows = rows | self.hlut[:, b, idx]
        if self.complete_pattern:
            rows = np.sort(rows, axis=1)
        elif self.pperms is not None:
            rows = rows[:, self.pperms].reshape(-1, arr.size)
        if rows.shape[0] == 1:
            return rows[0].tobytes()
        # lexicographic minimum row: pack columns into uint64 words,
        # then refine the candidate set one word at a time
        shift = np.uint64(self.host.n)
        cand = None
        for group in self.packing:
            word = rows[:, group[0]] if cand is None else rows[cand, group[0]]
            for c in group[1:]:
                word = word << shift | (rows[:, c] if cand is None else rows[cand, c])
            low = word.min()
            keep = word == low
            cand = np.flatnonzero(keep) if cand is None else cand[keep]
            if cand.size == 1:
                break
        return rows[cand[0]].tobytes()

    def _tick(self) -> None:
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise UndecidedError(
                f"minor search exhausted its node budget of {self.budget}")

    def run(self) -> Optional[list]:
        frags = [0] * self.pattern.n
        free = (1 << self.host.n) - 1
        return self._solve(frags, free)

    def _nbrmask(self, mask: int) -> int:
        got = self._nbr_cache.get(mask)
        if got is None:
            out = 0
            for v in _bits(mask):
                out |= self.adj[v]
            if len(self._nbr_cache) < 1_000_000:
                self._nbr_cache[mask] = out
            return out
        return got

    def _solve(self, frags: list, free: int) -> Optional[list]:
        self._tick()
        pending = []
        for idx, (i, j) in enumerate(self.pedges):
            fi, fj = frags[i], frags[j]
            if fi and fj:
                if not self._nbrmask(fi) & fj:
                    pending.append(idx)
            else:
                pending.append(idx)
        unseeded = [p for p in range(self.pattern.n) if not frags[p]]
        if not pending and not unseeded:
            return list(frags)
        if bin(free).count("1") < len(unseeded):
            return None
        if not self._feasible(frags, free, pending, unseeded):
            return None
        # only states that survive the cheap verdicts and must branch
        # pay for a canonical key and a slot in the failure memo
        key = self._state_key(frags)
        if key in self.failed:
            return None
        got = self._branch(frags, free, pending, unseeded)
        if got is None and len(self.failed) < 2_000_000:
            self.failed.add(key)
        return got

    def _branch(self, frags: list, free: int, pending: list,
                unseeded: list) -> Optional[list]:
        both, one = [], []
        for idx in pending:
            i, j = self.pedges[idx]
            seeded = (frags[i] != 0) + (frags[j] != 0)
            if seeded == 2:
                both.append(idx)
            elif seeded == 1:
                one.append(idx)
        contacts = {}
        for idx in both + one:
            for p in self.pedges[idx]:
                if frags[p] and p not in contacts:
                    contacts[p] = bin(self._nbrmask(frags[p]) & free).count("1")
        if both:
            # fail-first: connect the most constrained fragment pair
            def both_key(idx):
                i, j = self.pedges[idx]
                ci, cj = contacts[i], contacts[j]
                return (min(ci, cj), ci + cj, idx)
            i, j = self.pedges[min(both, key=both_key)]
            if contacts[j] < contacts[i]:
                i, j = j, i
            return self._connect(frags, free, i, j)
        if one:
            # seed the unseeded endpoint that is already pinned down by
            # the most seeded neighbors, then the tightest fragment
            def one_key(idx):
                i, j = self.pedges[idx]
                u = j if frags[i] else i
                pinned = sum(1 for k in self.pnbrs[u] if frags[k])
                return (-pinned, contacts[i if frags[i] else j], idx)
            i, j = self.pedges[min(one, key=one_key)]
            if not frags[i]:
                i, j = j, i
            return self._connect_seed(frags, free, i, j, len(unseeded))
        # no pending edge touches a seeded vertex: seed a fresh one
        pick = max(unseeded, key=lambda p: (self.pdeg[p], -p))
        empty_state = all(f == 0 for f in frags)
        if empty_state:
            reps = automorphism_orbits(self.host)
            candidates = [v for v in range(self.host.n) if reps[v] == v and free >> v & 1]
        else:
            candidates = list(_bits(free))
        for v in candidates:
            frags[pick] = 1 << v
            got = self._solve(frags, free & ~(1 << v))
            if got:
                return got
            frags[pick] = 0
        return None

    def _feasible(self, frags, free, pending, unseeded) -> bool:
        comps = _free_components(free, self.adj)
        cadj = [self._nbrmask(c) for c in comps]
        feasible_comps = {}
        for p in unseeded:
            seeded_nbrs = [q for q in self.pnbrs[p] if frags[q]]
            if seeded_nbrs:
                ok = {ci for ci, cn in enumerate(cadj)
                      if all(cn & frags[q] for q in seeded_nbrs)}
                if not ok:
                    return False
            else:
                ok = set(range(len(comps)))
            feasible_comps[p] = ok
        for idx in pending:
            i, j = self.pedges[idx]
            fi, fj = frags[i], frags[j]
            if fi and fj and not any(cn & fi and cn & fj for cn in cadj):
                return False
        # adjacent unseeded branch sets grow inside free vertices, so a
        # connected group of unseeded pattern vertices must fit together
        # into a single free component feasible for every one of them
        left = 0
        for p in unseeded:
            left |= 1 << p
        while left:
            seed = left & -left
            grp = seed
            frontier = seed
            while frontier:
                grow = 0
                for v in _bits(frontier):
                    grow |= self.pmask[v]
                grow &= left & ~grp
                grp |= grow
                frontier = grow
            left &= ~grp
            members = list(_bits(grp))
            if len(members) == 1:
                continue
            inter = feasible_comps[members[0]]
            for p in members[1:]:
                inter = inter & feasible_comps[p]
                if not inter:
                    return False
            if max(bin(comps[ci]).count("1") for ci in inter) < len(members):
                return False
        return True

    def _connect(self, frags, free, i, j) -> Optional[list]:
        # all chordless free paths from fragment i to fragment j
        fi, fj = frags[i], frags[j]
        start = self._nbrmask(fi) & free
        end_zone = self._nbrmask(fj) & free
        if not start or not end_zone:
            return None
        # only components touching both fragments can carry a connector
        allowed = 0
        for c in _free_components(free, self.adj):
            if c & start and c & end_zone:
                allowed |= c
        start &= allowed
        limit = bin(free).count("1") - sum(1 for p in range(self.pattern.n) if not frags[p])

        def extend(path_masks, path, last):
            self._tick()
            if self.adj[last] & fj:
                got = self._apply(frags, free, i, j, path)
                if got:
                    return got
                return None
            if len(path) >= limit:
                return None
            pm = path_masks
            before_last = pm & ~(1 << last)
            for w in _bits(self.adj[last] & free & ~pm):
                if self.adj[w] & before_last:
                    continue  # chord back into the path
                if self.adj[w] & fi:
                    continue  # only the first path vertex may touch fragment i
                path.append(w)
                got = extend(pm | 1 << w, path, w)
                if got:
                    return got
                path.pop()
            return None

        for v1 in _bits(start):
            got = extend(1 << v1, [v1], v1)
            if got:
                return got
        return None

    def _apply(self, frags, free, i, j, path) -> Optional[list]:
        mask = 0
        for v in path:
            mask |= 1 << v
        nfree = free & ~mask
        for s in range(len(path) + 1):
            pre = 0
            for v in path[:s]:
                pre |= 1 << v
            old_i, old_j = frags[i], frags[j]
            frags[i] = old_i | pre
            frags[j] = old_j | (mask ^ pre)
            got = self._solve(frags, nfree)
            if got:
                return got
            frags[i], frags[j] = old_i, old_j
        return None

    def _connect_seed(self, frags, free, i, j, n_unseeded) -> Optional[list]:
        # paths from fragment i whose suffix founds the branch set of j
        fi = frags[i]
        start = self._nbrmask(fi) & free
        if not start:
            return None
        # the new branch set stays inside its free component forever, so
        # that component must reach every already seeded neighbor of j
        seeded_others = [frags[k] for k in self.pnbrs[j] if k != i and frags[k]]
        allowed = 0
        for c in _free_components(free, self.adj):
            if c & start:
                cn = self._nbrmask(c)
                if all(cn & fk for fk in seeded_others):
                    allowed |= c
        start &= allowed
        limit = bin(free).count("1") - (n_unseeded - 1)

        def extend(path_masks, path, last):
            self._tick()
            got = self._apply_seed(frags, free, i, j, path)
            if got:
                return got
            if len(path) >= limit:
                return None
            pm = path_masks
            before_last = pm & ~(1 << last)
            for w in _bits(self.adj[last] & free & ~pm):
                if self.adj[w] & before_last:
                    continue
                if self.adj[w] & fi:
                    continue
                path.append(w)
                got = extend(pm | 1 << w, path, w)
                if got:
                    return got
                path.pop()
            return None

        for v1 in _bits(start):
            got = extend(1 << v1, [v1], v1)
            if got:
                return got
        return None

    def _apply_seed(self, frags, free, i, j, path) -> Optional[list]:
        mask = 0
        for v in path:
            mask |= 1 << v
        nfree = free & ~mask
        for s in range(len(path)):
            pre = 0
            for v in path[:s]:
                pre |= 1 << v
            old_i = frags[i]
            frags[i] = old_i | pre
            frags[j] = mask ^ pre
            got = self._solve(frags, nfree)
            if got:
                return got
            frags[i] = old_i
            frags[j] = 0
        return None


def _model_from_frags(host: Graph, pattern: Graph, frags: list) -> MinorModel:
    branch = {p: frozenset(_bits(frags[p])) for p in range(pattern.n)}
    witnesses = {}
    adj = tuple(sum(1 << w for w in host.neighbors(v)) for v in range(host.n))
    for (i, j) in pattern.edges:
        found = None
        for a in sorted(branch[i]):
            hit = adj[a] & frags[j]
            if hit:
                found = (a, (hit & -hit).bit_length() - 1)
                break
        witnesses[(i, j)] = found
    return MinorModel(branch, witnesses, pattern)


def find_minor(host: Graph, pattern: Graph, budget: Optional[int] = None) -> Optional[MinorModel]:
    """Search for a minor model of pattern in host.

    Returns a verified MinorModel, or None when no model exists. With a
    budget, raises UndecidedError once that many search nodes have been
    expanded. Deterministic for fixed inputs.
    """
    if pattern.n == 0:
        return MinorModel({}, {}, pattern)
    if pattern.n > host.n or pattern.m > host.m:
        return None
    # nested connector DFS plus one solve level per absorbed vertex
    need = 4 * host.n * max(1, pattern.m) + 100
    if sys.getrecursionlimit() < need:
        sys.setrecursionlimit(need)
    search = _Search(host, pattern, budget)
    frags = search.run()
    if frags is None:
        return None
    model = _model_from_frags(host, pattern, frags)
    assert verify_minor_model(host, pattern, model)
    return model


def _embed_spanning(order: list, earlier: list, pdeg_of_pos: list, qadj: list) -> Optional[list]:
    # bijection from pattern positions onto quotient vertices covering
    # every pattern edge; candidates ascend, so the result is canonical
    k = len(qadj)
    qdeg = [bin(r).count("1") for r in qadj]
    image = [-1] * k

    def rec(t: int, used: int) -> bool:
        if t == k:
            return True
        for c in range(k):
            if used >> c & 1 or qdeg[c] < pdeg_of_pos[t]:
                continue
            if any(not qadj[c] >> image[s] & 1 for s in earlier[t]):
                continue
            image[t] = c
            if rec(t + 1, used | 1 << c):
                return True
        image[t] = -1
        return False

    return image if rec(0, 0) else None


def _lattice_model(host: Graph, adj: Tuple[int, ...], pattern: Graph,
                   fibers: tuple, sigma: Dict[int, int]) -> MinorModel:
    branch = {pv: frozenset(_bits(fibers[ci])) for pv, ci in sigma.items()}
    witnesses = {}
    for (i, j) in pattern.edges:
        fj = fibers[sigma[j]]
        for a in sorted(branch[i]):
            hit = adj[a] & fj
            if hit:
                witnesses[(i, j)] = (a, (hit & -hit).bit_length() - 1)
                break
    return MinorModel(branch, witnesses, pattern)


def lattice_search(host: Graph, patterns: Sequence[Graph], budget: Optional[int] = None,
                   class_cap: int = 3_000_000) -> Optional[MinorModel]:
    """First pattern found as a minor of a small connected host, with model.

    The host must be connected; disconnected hosts lose partitions that
    never merge across components, so callers decompose first. Patterns
    of the same order are tried in the given order at each partition.
    ``budget`` caps expanded partitions, and both exhaustion and
    overflowing ``class_cap`` raise UndecidedError. Deterministic.
    """
    patterns = [p for p in patterns if p.n <= host.n and p.m <= host.m]
    if not patterns or host.n == 0:
        return None
    adj = tuple(sum(1 << w for w in host.neighbors(v)) for v in range(host.n))
    by_n: Dict[int, list] = {}
    pdata = {}
    for p in patterns:
        by_n.setdefault(p.n, []).append(p)
        # connected search order: place next the vertex with the most
        # already placed neighbors, so adjacency prunes from the start
        order = []
        placed: set = set()
        left = set(range(p.n))
        while left:
            v = max(left, key=lambda u: (len(p.neighbors(u) & placed), p.degree(u), -u))
            order.append(v)
            placed.add(v)
            left.remove(v)
        pos = {v: t for t, v in enumerate(order)}
        earlier = [[pos[w] for w in p.neighbors(order[t]) if pos[w] < t]
                   for t in range(p.n)]
        pdeg_of_pos = [p.degree(order[t]) for t in range(p.n)]
        degs = sorted((p.degree(v) for v in range(p.n)), reverse=True)
        pdata[id(p)] = (order, earlier, pdeg_of_pos, degs)
    min_pn = min(p.n for p in patterns)
    min_pm = min(p.m for p in patterns)

    nbr_cache: Dict[int, int] = {}

    def nbrs(mask: int) -> int:
        got = nbr_cache.get(mask)
        if got is None:
            got = 0
            for v in _bits(mask):
                got |= adj[v]
            nbr_cache[mask] = got
        return got

    start = tuple(1 << v for v in range(host.n))
    seen = {start}
    queue = deque([start])
    steps = 0
    while queue:
        fibers = queue.popleft()
        steps += 1
        if budget is not None and steps > budget:
            raise UndecidedError(
                f"minor lattice exhausted its budget of {budget}")
        k = len(fibers)
        qadj = [0] * k
        for a in range(k):
            na = nbrs(fibers[a])
            row = 0
            for b in range(k):
                if b != a and na & fibers[b]:
                    row |= 1 << b
            qadj[a] = row
        mq = sum(bin(r).count("1") for r in qadj) // 2
        if mq < min_pm:
            continue
        for p in by_n.get(k, []):
            if p.m > mq:
                continue
            order, earlier, pdeg_of_pos, pdegs = pdata[id(p)]
            qdegs = sorted((bin(r).count("1") for r in qadj), reverse=True)
            if any(qd < pd for qd, pd in zip(qdegs, pdegs)):
                continue
            image = _embed_spanning(order, earlier, pdeg_of_pos, qadj)
            if image is not None:
                sigma = {order[t]: image[t] for t in range(k)}
                model = _lattice_model(host, adj, p, fibers, sigma)
                assert verify_minor_model(host, p, model)
                return model
        if k - 1 < min_pn:
            continue
        for a in range(k):
            row = qadj[a] >> (a + 1)
            for off in _bits(row):
                b = a + 1 + off
                merged = fibers[a] | fibers[b]
                child = list(fibers)
                del child[b]
                child[a] = merged
                child = tuple(sorted(child))
                if child not in seen:
                    if len(seen) >= class_cap:
                        raise UndecidedError(
                            f"minor lattice exceeded {class_cap} partition classes")
                    seen.add(child)
                    queue.append(child)
    return None

"""Intrinsic linking, maxnility and K6-minor maximality with certificates.

A graph is intrinsically linked (IL) iff it contains a member of the
Petersen family as a minor, the seven graphs reachable from K6 by
triangle-Y exchanges. The family is generated here by closing {K6}
under both moves, where the Y-to-triangle direction is applied only at
degree-3 vertices with independent neighborhoods (the exact inverse of
the triangle-to-Y move, so edge counts never collapse).

The IL test tries family members smallest first, K6 leading, and
short-circuits on a hit. Members are first probed under a small node
budget, then any that came back undecided are re-run exhaustively; this
staging changes which witness is found, never the verdict, and is
deterministic.

Two sound shortcuts keep the exhaustive engines off easy hosts. A
graph with a vertex whose removal leaves it planar embeds linklessly,
so it contains no family member and no K6 minor; apexness is tested
per component before any search. And since every family member is
3-connected, a host splitting at an adjacent cut pair {u, v} contains a
member iff one of the split sides (each keeping u, v and the edge uv)
does: branch sets of a 3-connected pattern cannot straddle a 2-cut,
and a fragment poking through {u, v} prunes back to its own side. Sums
over an identified edge therefore decompose into their parts.

Maxnility and K6-maximality scan the non-edges in lexicographic order.
A parallel mode may partition that scan across processes; results are
combined so the reported failing edge is the smallest one regardless of
scheduling.
"""

from __future__ import annotations

import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional, Tuple

import networkx as nx

from .canon import canonical_form
from .errors import UndecidedError
from .formats import graph6_encode
from .graph import (
    Edge,
    Graph,
    add_edge,
    complete_graph,
    connected_components,
    induced_subgraph,
    triangle_to_y,
    y_to_triangle,
)
from .minors import (
    MinorModel,
    find_minor,
    lattice_search,
    model_to_json_dict,
    verify_minor_model,
)

# node budget for the first, cheap probe of each family member
_STAGE_BUDGET = 20000
# largest host order handled by the partition lattice decider
_LATTICE_LIMIT = 12

_PETERSEN: Optional[Tuple[Graph, ...]] = None


def petersen_family() -> Tuple[Graph, ...]:
    """The seven forbidden minors for linkless embedding, K6 first."""
    global _PETERSEN
    if _PETERSEN is not None:
        return _PETERSEN
    seen = {}
    queue = [complete_graph(6)]
    seen[canonical_form(queue[0])] = queue[0]
    while queue:
        g = queue.pop()
        moves = []
        for tri in _triangles(g):
            moves.append(triangle_to_y(g, tri))
        for v in range(g.n):
            nbrs = sorted(g.neighbors(v))
            if len(nbrs) == 3 and not any(
                    g.has_edge(a, b) for a in nbrs for b in nbrs if a < b):
                moves.append(y_to_triangle(g, v))
        for h in moves:
            key = canonical_form(h)
            if key not in seen:
                seen[key] = h
                queue.append(h)
    members = sorted(seen.values(), key=lambda g: (g.n, canonical_form(g)))
    _PETERSEN = tuple(members)
    return _PETERSEN


def _triangles(g: Graph):
    for u, v in g.edges:
        for w in sorted(g.neighbors(u) & g.neighbors(v)):
            if w > v:
                yield (u, v, w)


def _remap_component_model(model: MinorModel, verts: list) -> MinorModel:
    branch = {p: frozenset(verts[v] for v in bs) for p, bs in model.branch_sets.items()}
    wit = {e: (verts[a], verts[b]) for e, (a, b) in model.edge_witnesses.items()}
    return MinorModel(branch, wit, model.pattern)


def _is_apex(g: Graph) -> bool:
    """True when deleting some single vertex leaves a planar graph."""
    base = nx.Graph()
    base.add_nodes_from(range(g.n))
    base.add_edges_from(g.edges)
    for v in range(g.n):
        h = base.copy()
        h.remove_node(v)
        if nx.check_planarity(h, counterexample=False)[0]:
            return True
    return g.n == 0


def _is_three_connected(g: Graph) -> bool:
    if g.n < 4:
        return False
    verts = set(range(g.n))
    for u in range(g.n):
        for v in range(u + 1, g.n + 1):
            drop = {u} if v == g.n else {u, v}
            rest = verts - drop
            start = min(rest)
            seen = {start}
            stack = [start]
            while stack:
                w = stack.pop()
                for x in g.neighbors(w):
                    if x in rest and x not in seen:
                        seen.add(x)
                        stack.append(x)
            if seen != rest:
                return False
    return True


def _adjacent_cut_pair(g: Graph) -> Optional[Edge]:
    """An edge whose endpoints disconnect g, smallest first, or None."""
    verts = set(range(g.n))
    for (u, v) in g.edges:
        rest = verts - {u, v}
        if len(rest) < 2:
            continue
        start = min(rest)
        seen = {start}
        stack = [start]
        while stack:
            w = stack.pop()
            for x in g.neighbors(w):
                if x in rest and x not in seen:
                    seen.add(x)
                    stack.append(x)
        if seen != rest:
            return (u, v)
    return None


_REFUTED: set = set()


def _search_any_minor(g: Graph, patterns, budget: Optional[int],
                      linkless_shortcut: bool = False) -> Optional[MinorModel]:
    """First listed pattern occurring as a minor of g, with its model.

    Connected components are searched one by one in vertex order, small
    hosts through the partition lattice and larger ones pattern by
    pattern with the branch-set search. 3-connected pattern lists let
    the host split at adjacent cut pairs first, and callers deciding
    linklessness may enable the apex shortcut. When the caller set no
    budget, a lattice overflow falls back to the branch-set search; a
    caller budget is honored strictly and exhaustion propagates.

    Completed refutations are cached by canonical form, so isomorphic
    hosts (the repeated sides of decomposed sums, above all) are
    refuted once per process. Positive verdicts are never cached: their
    witness models are tied to one labeling.
    """
    comps = connected_components(g)
    if len(comps) > 1:
        for comp in comps:
            verts = sorted(comp)
            sub = induced_subgraph(g, verts)
            model = _search_any_minor(sub, patterns, budget, linkless_shortcut)
            if model is not None:
                model = _remap_component_model(model, verts)
                assert verify_minor_model(g, model.pattern, model)
                return model
        return None
    patterns = [p for p in patterns if p.n <= g.n and p.m <= g.m]
    if not patterns:
        return None
    cache_key = (canonical_form(g), tuple(canonical_form(p) for p in patterns))
    if cache_key in _REFUTED:
        return None
    model = _search_connected(g, patterns, budget, linkless_shortcut)
    if model is None and len(_REFUTED) < 100_000:
        _REFUTED.add(cache_key)
    return model


def _search_connected(g: Graph, patterns, budget: Optional[int],
                      linkless_shortcut: bool) -> Optional[MinorModel]:
    if linkless_shortcut and _is_apex(g):
        return None
    if all(_is_three_connected(p) for p in patterns):
        cut = _adjacent_cut_pair(g)
        if cut is not None:
            u, v = cut
            others = [w for w in range(g.n) if w != u and w != v]
            sub_wo = induced_subgraph(g, others)
            for comp in connected_components(sub_wo):
                verts = sorted({others[w] for w in comp} | {u, v})
                side = induced_subgraph(g, verts)
                model = _search_any_minor(side, patterns, budget, linkless_shortcut)
                if model is not None:
                    model = _remap_component_model(model, verts)
                    assert verify_minor_model(g, model.pattern, model)
                    return model
            return None
    if g.n <= _LATTICE_LIMIT:
        try:
            return lattice_search(g, patterns, budget=budget)
        except UndecidedError:
            if budget is not None:
                raise
    if budget is not None:
        for pat in patterns:
            model = find_minor(g, pat, budget=budget)
            if model is not None:
                return model
        return None
    undecided = []
    for pat in patterns:
        try:
            model = find_minor(g, pat, budget=_STAGE_BUDGET)
        except UndecidedError:
            undecided.append(pat)
            continue
        if model is not None:
            return model
    for pat in undecided:
        model = find_minor(g, pat)
        if model is not None:
            return model
    return None


def is_intrinsically_linked(g: Graph, budget: Optional[int] = None) -> Tuple[bool, Optional[MinorModel]]:
    """IL verdict with a Petersen-family minor model as the witness.

    With ``budget`` set, every underlying search is capped at that many
    steps and exhaustion raises UndecidedError instead of guessing.
    """
    # every family member has 15 edges and at least 6 vertices
    if g.m < 15 or g.n < 6:
        return False, None
    model = _search_any_minor(g, petersen_family(), budget, linkless_shortcut=True)
    return (model is not None), model


def has_k6_minor(g: Graph, budget: Optional[int] = None) -> Tuple[bool, Optional[MinorModel]]:
    # an apex graph embeds linklessly while K6 does not, so the apex
    # shortcut inside the search is sound here as well
    if g.m < 15 or g.n < 6:
        return False, None
    model = _search_any_minor(g, [complete_graph(6)], budget, linkless_shortcut=True)
    return (model is not None), model


@dataclass
class VerificationReport:
    """Outcome of an IL, maxnil or K6-maximality certification."""

    subject: Graph
    il_status: str  # "IL" | "nIL"
    il_witness: Optional[MinorModel] = None
    maxnil_status: Optional[str] = None  # "maxnil" | "not-maxnil"
    maxnil_failing_edge: Optional[Edge] = None
    k6_has_minor: Optional[bool] = None
    k6_witness: Optional[MinorModel] = None
    k6_maximal_status: Optional[str] = None  # "maximal" | "not-maximal"
    k6_failing_edge: Optional[Edge] = None
    elapsed_ms: float = 0.0

    @property
    def n(self) -> int:
        return self.subject.n

    @property
    def m(self) -> int:
        return self.subject.m

    def to_dict(self, include_elapsed: bool = True) -> dict:
        out = {
            "subject": graph6_encode(self.subject),
            "n": self.n,
            "m": self.m,
            "il_status": self.il_status,
            "il_witness": model_to_json_dict(self.il_witness) if self.il_witness else None,
            "maxnil_status": self.maxnil_status,
            "maxnil_failing_edge": list(self.maxnil_failing_edge) if self.maxnil_failing_edge else None,
            "k6_has_minor": self.k6_has_minor,
            "k6_witness": model_to_json_dict(self.k6_witness) if self.k6_witness else None,
            "k6_maximal_status": self.k6_maximal_status,
            "k6_failing_edge": list(self.k6_failing_edge) if self.k6_failing_edge else None,
        }
        if include_elapsed:
            out["elapsed_ms"] = self.elapsed_ms
        return out

    def to_json(self, include_elapsed: bool = True, indent: Optional[int] = None) -> str:
        return json.dumps(self.to_dict(include_elapsed), sort_keys=True, indent=indent,
                          separators=None if indent else (",", ":"))


def _default_threads() -> int:
    try:
        return max(1, int(os.environ.get("MAXNIL_LAB_THREADS", "1")))
    except ValueError:
        return 1


def _scan_chunk(args) -> Tuple[str, Optional[Edge]]:
    g, edges, budget, k6_mode = args
    for e in edges:
        aug = add_edge(g, e)
        try:
            if k6_mode:
                hit, _ = has_k6_minor(aug, budget=budget)
            else:
                hit, _ = is_intrinsically_linked(aug, budget=budget)
        except UndecidedError:
            return ("undecided", e)
        if not hit:
            return ("fail", e)
    return ("ok", None)


def _scan_augmentations(g: Graph, threads: int, budget: Optional[int],
                        k6_mode: bool) -> Optional[Edge]:
    """Smallest non-edge whose addition stays minor-free, or None.

    Matches the sequential lexicographic scan: if an earlier edge would
    have raised UndecidedError before any failure, that error is raised.
    """
    non_edges = g.non_edges()
    if not non_edges:
        return None
    if threads <= 1:
        result = _scan_chunk((g, non_edges, budget, k6_mode))
    else:
        chunks = [non_edges[i::threads] for i in range(threads)]
        with ProcessPoolExecutor(max_workers=threads) as pool:
            events = list(pool.map(_scan_chunk, [(g, c, budget, k6_mode) for c in chunks if c]))
        hits = [(e, kind) for kind, e in events if e is not None]
        if not hits:
            return None
        e, kind = min(hits)
        result = (kind, e)
    kind, e = result
    if kind == "undecided":
        raise UndecidedError(
            f"augmentation by edge {e} exceeded the node budget")
    return e if kind == "fail" else None


def is_maxnil(g: Graph, threads: Optional[int] = None, budget: Optional[int] = None) -> VerificationReport:
    """Certify that g is nIL and that every edge addition is IL."""
    t0 = time.perf_counter()
    threads = _default_threads() if threads is None else max(1, threads)
    il, witness = is_intrinsically_linked(g, budget=budget)
    report = VerificationReport(subject=g, il_status="IL" if il else "nIL", il_witness=witness)
    if il:
        report.maxnil_status = "not-maxnil"
    else:
        failing = _scan_augmentations(g, threads, budget, k6_mode=False)
        if failing is None:
            report.maxnil_status = "maxnil"
        else:
            report.maxnil_status = "not-maxnil"
            report.maxnil_failing_edge = failing
    report.elapsed_ms = round((time.perf_counter() - t0) * 1000.0, 3)
    return report


def is_maximal_k6_minor_free(g: Graph, threads: Optional[int] = None,
                             budget: Optional[int] = None) -> VerificationReport:
    """Certify that g has no K6 minor and every edge addition creates one."""
    t0 = time.perf_counter()
    threads = _default_threads() if threads is None else max(1, threads)
    il, il_witness = is_intrinsically_linked(g, budget=budget)
    has, witness = has_k6_minor(g, budget=budget)
    report = VerificationReport(subject=g, il_status="IL" if il else "nIL",
                                il_witness=il_witness, k6_has_minor=has, k6_witness=witness)
    if has:
        report.k6_maximal_status = "not-maximal"
    else:
        failing = _scan_augmentations(g, threads, budget, k6_mode=True)
        if failing is None:
            report.k6_maximal_status = "maximal"
        else:
            report.k6_maximal_status = "not-maximal"
            report.k6_failing_edge = failing
    report.elapsed_ms = round((time.perf_counter() - t0) * 1000.0, 3)
    return report

"""Oracle tests for the Petersen family and the linking deciders.

Family membership is cross-checked against independently built graphs
(complete multipartite, Kneser) and against a second closure variant.
Verdicts on small graphs are either forced by edge counts or verified
through explicit minor models.
"""

import itertools
import json
import time

import pytest

from maxnil_lab.canon import canonical_form, is_isomorphic
from maxnil_lab.errors import UndecidedError
from maxnil_lab.graph import (
    Graph,
    build_graph,
    circulant_graph,
    complete_graph,
    complete_multipartite,
    cycle_graph,
    delete_edge,
    disjoint_union,
    path_graph,
    triangle_to_y,
    y_to_triangle,
)
from maxnil_lab import linking
from maxnil_lab.linking import (
    has_k6_minor,
    is_intrinsically_linked,
    is_maximal_k6_minor_free,
    is_maxnil,
    petersen_family,
)
from maxnil_lab.minors import find_minor, verify_minor_model


def kneser_5_2() -> Graph:
    """Petersen graph as the Kneser graph of disjoint 2-subsets of a 5-set."""
    pairs = list(itertools.combinations(range(5), 2))
    edges = [(i, j) for i, j in itertools.combinations(range(10), 2)
             if not set(pairs[i]) & set(pairs[j])]
    return build_graph(10, edges)


def test_family_shape():
    fam = petersen_family()
    assert len(fam) == 7
    assert sorted(g.n for g in fam) == [6, 7, 7, 8, 8, 9, 10]
    assert all(g.m == 15 for g in fam)
    assert is_isomorphic(fam[0], complete_graph(6))
    keys = {canonical_form(g) for g in fam}
    assert len(keys) == 7
    assert canonical_form(complete_multipartite(3, 3, 1)) in keys
    assert canonical_form(kneser_5_2()) in keys


def test_family_closure_with_collapsing_moves_is_identical():
    # allowing the Y move at degree-3 vertices whose neighbors are already
    # adjacent (which would drop parallel edges) must not enlarge the family
    seen = {}
    queue = [complete_graph(6)]
    seen[canonical_form(queue[0])] = queue[0]
    while queue:
        g = queue.pop()
        moves = []
        for u, v in g.edges:
            for w in sorted(g.neighbors(u) & g.neighbors(v)):
                if w > v:
                    moves.append(triangle_to_y(g, (u, v, w)))
        for v in range(g.n):
            if g.degree(v) == 3:
                moves.append(y_to_triangle(g, v))
        for h in moves:
            key = canonical_form(h)
            if key not in seen:
                seen[key] = h
                queue.append(h)
    assert set(seen) == {canonical_form(g) for g in petersen_family()}


@pytest.mark.slow
def test_family_is_an_antichain_under_minors():
    fam = petersen_family()
    for p, q in itertools.permutations(fam, 2):
        assert find_minor(q, p) is None


def test_k6_is_il_with_verified_witness():
    il, model = is_intrinsically_linked(complete_graph(6))
    assert il
    assert verify_minor_model(complete_graph(6), model.pattern, model)


def test_k6_minus_edge_is_nil():
    g = delete_edge(complete_graph(6), (0, 1))
    assert is_intrinsically_linked(g) == (False, None)


def test_k7_minus_triangle_is_il():
    g = complete_graph(7)
    for e in ((0, 1), (0, 2), (1, 2)):
        g = delete_edge(g, e)
    il, model = is_intrinsically_linked(g)
    assert il
    assert verify_minor_model(g, model.pattern, model)


def test_k44_is_il_and_one_edge_short_of_a_member():
    k44 = complete_multipartite(4, 4)
    keys = {canonical_form(p) for p in petersen_family()}
    assert canonical_form(delete_edge(k44, k44.edges[0])) in keys
    il, model = is_intrinsically_linked(k44)
    assert il
    assert verify_minor_model(k44, model.pattern, model)


def test_petersen_graph_witnesses_itself():
    il, model = is_intrinsically_linked(kneser_5_2())
    assert il
    assert model.pattern.n == 10


def test_low_order_shortcuts():
    assert is_intrinsically_linked(complete_graph(5)) == (False, None)
    assert is_intrinsically_linked(build_graph(0, [])) == (False, None)
    big_sparse = cycle_graph(20)
    assert is_intrinsically_linked(big_sparse) == (False, None)


def test_il_is_minor_monotone_spot_checks():
    assert is_intrinsically_linked(complete_graph(7))[0]
    padded = disjoint_union(complete_graph(6), path_graph(3))
    il, model = is_intrinsically_linked(padded)
    assert il
    assert verify_minor_model(padded, model.pattern, model)


def test_budget_propagates():
    # refutations cached by earlier tests would answer without searching
    linking._REFUTED.clear()
    # 13 vertices, so no family member can match before any merge happens
    with pytest.raises(UndecidedError):
        is_intrinsically_linked(circulant_graph(13, (1, 3)), budget=1)
    # a hit reached within the budget is still returned
    il, model = is_intrinsically_linked(kneser_5_2(), budget=1)
    assert il
    assert model.pattern.n == 10


def test_k6_minus_edge_is_maxnil():
    report = is_maxnil(delete_edge(complete_graph(6), (0, 1)))
    assert report.il_status == "nIL"
    assert report.maxnil_status == "maxnil"
    assert report.maxnil_failing_edge is None
    assert (report.n, report.m) == (6, 14)


def test_k5_is_maxnil_vacuously():
    report = is_maxnil(complete_graph(5))
    assert report.il_status == "nIL"
    assert report.maxnil_status == "maxnil"


def test_c5_is_not_maxnil():
    report = is_maxnil(cycle_graph(5))
    assert report.maxnil_status == "not-maxnil"
    assert report.maxnil_failing_edge == (0, 2)


def test_il_graph_is_not_maxnil():
    report = is_maxnil(complete_graph(6))
    assert report.il_status == "IL"
    assert report.maxnil_status == "not-maxnil"
    assert report.maxnil_failing_edge is None


def test_parallel_scan_matches_sequential():
    for g in (cycle_graph(5), delete_edge(complete_graph(6), (0, 1))):
        seq = is_maxnil(g, threads=1).to_dict(include_elapsed=False)
        par = is_maxnil(g, threads=2).to_dict(include_elapsed=False)
        assert seq == par


def test_k6_maximality_reports():
    near = delete_edge(complete_graph(6), (0, 1))
    report = is_maximal_k6_minor_free(near)
    assert report.k6_has_minor is False
    assert report.k6_maximal_status == "maximal"

    report = is_maximal_k6_minor_free(complete_graph(6))
    assert report.k6_has_minor is True
    assert report.k6_maximal_status == "not-maximal"
    assert verify_minor_model(complete_graph(6), report.k6_witness.pattern, report.k6_witness)

    report = is_maximal_k6_minor_free(cycle_graph(6))
    assert report.k6_maximal_status == "not-maximal"
    assert report.k6_failing_edge == (0, 2)


def test_report_json_is_stable_without_elapsed():
    g = delete_edge(complete_graph(6), (0, 1))
    a = is_maxnil(g)
    b = is_maxnil(g)
    assert a.to_json(include_elapsed=False) == b.to_json(include_elapsed=False)
    assert a.elapsed_ms >= 0.0
    payload = json.loads(a.to_json())
    assert payload["il_status"] == "nIL"
    assert payload["maxnil_status"] == "maxnil"
    assert "elapsed_ms" in payload
    assert "elapsed_ms" not in json.loads(a.to_json(include_elapsed=False))


def test_has_k6_minor_in_supergraphs():
    has, model = has_k6_minor(complete_graph(8))
    assert has
    assert verify_minor_model(complete_graph(8), model.pattern, model)
    assert has_k6_minor(kneser_5_2()) == (False, None)


def test_apex_graphs_are_not_linked():
    # 3x3 grid plus a vertex joined to every grid vertex: removing the
    # apex leaves the planar grid, so the graph embeds linklessly even
    # though it clears the edge-count shortcut
    grid_edges = []
    for r in range(3):
        for c in range(3):
            v = 3 * r + c
            if c < 2:
                grid_edges.append((v, v + 1))
            if r < 2:
                grid_edges.append((v, v + 3))
    apex = Graph(10, grid_edges + [(v, 9) for v in range(9)])
    assert apex.m == 21
    il, witness = is_intrinsically_linked(apex)
    assert (il, witness) == (False, None)
    assert has_k6_minor(apex) == (False, None)


def test_edge_sum_decomposes_to_sides():
    # two K6 minus an edge sharing the edge (2,3): both sides are nIL
    # and the whole stays nIL; gluing K6 itself onto a triangle instead
    # gives an IL graph whose witness lives inside the K6 side
    near = delete_edge(complete_graph(6), (0, 1))
    lift = {0: 6, 1: 7, 2: 2, 3: 3, 4: 8, 5: 9}
    both = Graph(10, sorted(set(near.edges)
                            | {tuple(sorted((lift[a], lift[b])))
                               for (a, b) in near.edges}))
    assert both.m == 2 * near.m - 1
    il, _ = is_intrinsically_linked(both)
    assert il is False

    # gluing over a nonadjacent pair instead loses the protection: the
    # second side contracts onto the missing edge and K6 reappears
    fused = Graph(10, sorted(set(near.edges)
                             | {(a + 4 if a > 1 else a, b + 4 if b > 1 else b)
                                for (a, b) in near.edges}))
    il, model = is_intrinsically_linked(fused)
    assert il is True
    assert verify_minor_model(fused, model.pattern, model)

    k6_tail = Graph(7, list(complete_graph(6).edges) + [(4, 6), (5, 6)])
    il, model = is_intrinsically_linked(k6_tail)
    assert il is True
    assert verify_minor_model(k6_tail, model.pattern, model)
    assert model.pattern.n == 6
    assert all(6 not in bs for bs in model.branch_sets.values())


@pytest.mark.slow
def test_refutation_survives_relabeling():
    # the refutation cache keys by canonical form, so an isomorphic
    # relabeling must come back nIL without a second full search
    q = circulant_graph(13, (1, 3))
    assert is_intrinsically_linked(q) == (False, None)
    perm = [(5 * v + 2) % 13 for v in range(13)]
    relabeled = Graph(13, sorted(tuple(sorted((perm[a], perm[b]))) for (a, b) in q.edges))
    assert is_isomorphic(q, relabeled)
    t0 = time.perf_counter()
    assert is_intrinsically_linked(relabeled) == (False, None)
    assert time.perf_counter() - t0 < 5.0


def test_engines_agree_on_random_hosts():
    # dual route: the per-member branch-set search against the full
    # decider pipeline, across a spread of random 8-vertex hosts
    import random


    rng = random.Random(20260822)
    fam = petersen_family()
    for trial in range(12):
        n = 8
        density = 0.35 + 0.05 * (trial % 6)
        edges = [(a, b) for a in range(n) for b in range(a + 1, n)
                 if rng.random() < density]
        g = Graph(n, edges)
        direct = None
        for p in fam:
            if p.n <= g.n and p.m <= g.m:
                direct = find_minor(g, p)
                if direct is not None:
                    break
        il, witness = is_intrinsically_linked(g)
        assert il == (direct is not None)
        if il:
            assert verify_minor_model(g, witness.pattern, witness)

import itertools
import random

import networkx as nx
import pytest

from maxnil_lab.errors import UndecidedError
from maxnil_lab.graph import (
    Graph,
    build_graph,
    complete_graph,
    complete_multipartite,
    cycle_graph,
    disjoint_union,
    path_graph,
    subdivide_edge,
)
from maxnil_lab.minors import (
    MinorModel,
    find_minor,
    model_from_json_dict,
    model_to_json_dict,
    verify_minor_model,
)

K5 = complete_graph(5)
K33 = complete_multipartite(3, 3)


def random_graph(n, p, rng):
    edges = [(u, v) for u, v in itertools.combinations(range(n), 2) if rng.random() < p]
    return Graph(n, edges)


def nx_planar(g):
    h = nx.empty_graph(g.n)
    h.add_edges_from(g.edges)
    return nx.check_planarity(h)[0]


def test_identity_model():
    k6 = complete_graph(6)
    model = find_minor(k6, k6)
    assert model is not None
    assert verify_minor_model(k6, k6, model)
    assert all(len(bs) == 1 for bs in model.branch_sets.values())


def test_no_k5_or_k33_in_planar():
    planar = build_graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5), (0, 2), (2, 4), (0, 4)])
    assert nx_planar(planar)
    assert find_minor(planar, K5) is None
    assert find_minor(planar, K33) is None


def test_k6_in_k7():
    model = find_minor(complete_graph(7), complete_graph(6))
    assert model is not None and verify_minor_model(complete_graph(7), complete_graph(6), model)


def test_subdivision_keeps_minor():
    g = complete_graph(5)
    for _ in range(4):
        g, _ = subdivide_edge(g, g.edges[0])
    model = find_minor(g, K5)
    assert model is not None and verify_minor_model(g, K5, model)


def test_petersen_contains_k33_but_not_k5_subgraph_sense():
    # Petersen graph: vertices are 2-subsets of a 5-set, disjointness adjacency
    pairs = list(itertools.combinations(range(5), 2))
    idx = {p: i for i, p in enumerate(pairs)}
    edges = [(idx[a], idx[b]) for a, b in itertools.combinations(pairs, 2)
             if not set(a) & set(b)]
    petersen = build_graph(10, edges)
    assert petersen.m == 15
    for pat in (K5, K33):
        model = find_minor(petersen, pat)
        assert model is not None and verify_minor_model(petersen, pat, model)


def test_wagner_equivalence_with_planarity():
    # planar iff no K5 minor and no K33 minor, checked against networkx
    rng = random.Random(41)
    for _ in range(60):
        n = rng.randrange(4, 9)
        g = random_graph(n, rng.uniform(0.3, 0.8), rng)
        mine = find_minor(g, K5) is None and find_minor(g, K33) is None
        assert mine == nx_planar(g)


def test_disconnected_pattern_and_host():
    two_tris = disjoint_union(cycle_graph(3), cycle_graph(3))
    host = disjoint_union(cycle_graph(5), cycle_graph(4))
    model = find_minor(host, two_tris)
    assert model is not None and verify_minor_model(host, two_tris, model)
    assert find_minor(cycle_graph(6), two_tris) is None


def test_absence_answers():
    assert find_minor(path_graph(3), cycle_graph(3)) is None
    assert find_minor(cycle_graph(4), complete_graph(4)) is None
    assert find_minor(complete_graph(4), complete_graph(5)) is None


def test_empty_pattern():
    model = find_minor(complete_graph(3), Graph(0))
    assert model is not None and verify_minor_model(complete_graph(3), Graph(0), model)


def test_determinism():
    host = random_graph(9, 0.5, random.Random(5))
    a = find_minor(host, K33)
    b = find_minor(host, K33)
    assert a is not None
    assert a.branch_sets == b.branch_sets and a.edge_witnesses == b.edge_witnesses


def test_verify_rejects_bad_models():
    k4 = complete_graph(4)
    good = find_minor(k4, cycle_graph(3))
    assert verify_minor_model(k4, cycle_graph(3), good)
    overlapping = MinorModel({0: frozenset({0, 1}), 1: frozenset({1}), 2: frozenset({2})},
                             dict(good.edge_witnesses))
    assert not verify_minor_model(k4, cycle_graph(3), overlapping)
    path_host = path_graph(4)
    disconnected = MinorModel({0: frozenset({0, 3}), 1: frozenset({1}), 2: frozenset({2})},
                              {(0, 1): (0, 1), (0, 2): (3, 2), (1, 2): (1, 2)})
    assert not verify_minor_model(path_host, cycle_graph(3), disconnected)
    missing_witness = MinorModel({0: frozenset({0}), 1: frozenset({1}), 2: frozenset({2})},
                                 {(0, 1): (0, 1), (1, 2): (1, 2)})
    assert not verify_minor_model(k4, cycle_graph(3), missing_witness)
    empty_set = MinorModel({0: frozenset(), 1: frozenset({1}), 2: frozenset({2})},
                           dict(good.edge_witnesses))
    assert not verify_minor_model(k4, cycle_graph(3), empty_set)


def test_budget_exhaustion():
    # a search this tiny budget cannot finish: K6 in a 14-vertex expander-ish host
    rng = random.Random(8)
    host = random_graph(14, 0.25, rng)
    with pytest.raises(UndecidedError):
        find_minor(host, complete_graph(6), budget=3)


def test_model_json_round_trip():
    k6 = complete_graph(6)
    model = find_minor(complete_graph(7), k6)
    d = model_to_json_dict(model)
    back = model_from_json_dict(d)
    assert back.branch_sets == model.branch_sets
    assert {k: tuple(v) for k, v in back.edge_witnesses.items()} == \
        {k: tuple(v) for k, v in model.edge_witnesses.items()}
    assert back.pattern == k6


def test_minor_of_dense_random_hosts():
    rng = random.Random(77)
    for _ in range(20):
        g = random_graph(10, 0.85, rng)
        model = find_minor(g, complete_graph(5))
        # dense 10-vertex graphs essentially always have a K5 minor; verify when found
        if model is not None:
            assert verify_minor_model(g, K5, model)

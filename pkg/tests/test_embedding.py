"""Rotation systems, cycle enumeration, sides, and the pole separation test."""

import random

import networkx as nx
import pytest

from maxnil_lab.embedding import (
    RotationSystem,
    certify_nil_via_lemma21,
    cycle_sides,
    enumerate_cycles,
    is_planar,
    lemma21_condition,
    planar_embedding,
    rotation_from_text,
    rotation_to_text,
)
from maxnil_lab.errors import GraphError, UndecidedError
from maxnil_lab.graph import (
    Graph,
    build_graph,
    complete_graph,
    complete_multipartite,
    cycle_graph,
    delete_vertices,
    disjoint_union,
    path_graph,
)
from maxnil_lab.linking import is_intrinsically_linked, petersen_family


def nx_of(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def euler_ok(emb: RotationSystem) -> bool:
    # constructor already enforces this; recompute from scratch anyway
    g = emb.host
    comps = list(nx.connected_components(nx_of(g)))
    for comp in comps:
        ne = sum(1 for (a, b) in g.edges if a in comp)
        if ne == 0:
            continue
        nf = sum(1 for face in emb.faces if face[0][0] in comp)
        if len(comp) - ne + nf != 2:
            return False
    return True


def test_planarity_basics():
    assert is_planar(complete_graph(4))
    assert not is_planar(complete_graph(5))
    assert not is_planar(complete_multipartite(3, 3))
    assert is_planar(build_graph(0, []))


def test_embedding_face_counts():
    emb = planar_embedding(complete_graph(4))
    assert len(emb.faces) == 4
    assert all(len(face) == 3 for face in emb.faces)
    assert euler_ok(emb)
    assert planar_embedding(complete_graph(5)) is None
    # every directed edge on exactly one face
    darts = [d for face in emb.faces for d in face]
    assert len(darts) == len(set(darts)) == 12


def test_tree_embedding_single_face():
    emb = planar_embedding(path_graph(5))
    assert len(emb.faces) == 1
    assert len(emb.faces[0]) == 8


def test_cycle_enumeration_small():
    assert enumerate_cycles(cycle_graph(3)) == ((0, 1, 2),)
    assert enumerate_cycles(cycle_graph(6)) == ((0, 1, 2, 3, 4, 5),)
    assert enumerate_cycles(path_graph(4)) == ()
    assert len(enumerate_cycles(complete_graph(4))) == 7


def test_cycle_enumeration_matches_reference_counts():
    rng = random.Random(411)
    for trial in range(20):
        n = rng.randrange(4, 9)
        edges = [(a, b) for a in range(n) for b in range(a + 1, n)
                 if rng.random() < 0.45]
        g = build_graph(n, edges)
        mine = enumerate_cycles(g)
        ref = {frozenset(c) for c in nx.simple_cycles(nx_of(g))}
        assert len(mine) == len(list(nx.simple_cycles(nx_of(g))))
        assert {frozenset(c) for c in mine} <= ref
        # canonical presentation: min vertex first, smaller neighbor second
        for c in mine:
            assert c[0] == min(c) and c[1] < c[-1]
        assert len(set(mine)) == len(mine)


def test_cycle_cap_raises():
    with pytest.raises(UndecidedError):
        enumerate_cycles(complete_graph(9), cap=100)


def test_facial_cycle_has_empty_side():
    emb = planar_embedding(complete_graph(4))
    empty_sides = 0
    for cyc in enumerate_cycles(complete_graph(4)):
        sides = cycle_sides(emb, cyc)
        assert sides.inside | sides.outside == frozenset(range(4)) - set(cyc)
        assert not sides.inside & sides.outside
        if not sides.inside or (not sides.outside and len(cyc) < 4):
            empty_sides += 1
    # the four triangles of K4 are all facial in any embedding
    assert empty_sides >= 4


def test_cycle_sides_nested_rings():
    # two concentric triangles joined by a matching: the prism
    g = build_graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5),
                        (0, 3), (1, 4), (2, 5)])
    emb = planar_embedding(g)
    for cyc in ((0, 1, 2), (3, 4, 5)):
        sides = cycle_sides(emb, cyc)
        other = {0, 1, 2, 3, 4, 5} - set(cyc)
        # one triangle separates the drawing from the other triangle
        assert sides.inside in (frozenset(), frozenset(other))
        assert sides.inside | sides.outside == other


def test_cycle_sides_quadrilateral_split():
    # wheel on 4 spokes: hub 0, rim 1..4
    g = build_graph(5, [(0, 1), (0, 2), (0, 3), (0, 4),
                        (1, 2), (2, 3), (3, 4), (1, 4)])
    emb = planar_embedding(g)
    sides = cycle_sides(emb, (1, 2, 3, 4))
    assert {sides.inside, sides.outside} == {frozenset({0}), frozenset()}
    # a cycle through the hub puts the two leftover rim vertices apart
    sides = cycle_sides(emb, (0, 2, 3))
    assert sides.inside | sides.outside == {1, 4}


def test_cycle_sides_other_component_is_outside():
    g = disjoint_union(complete_graph(4), cycle_graph(3))
    emb = planar_embedding(g)
    sides = cycle_sides(emb, (4, 5, 6))
    assert sides.inside == frozenset()
    assert sides.outside == frozenset({0, 1, 2, 3})


def test_cycle_sides_rejects_non_cycles():
    emb = planar_embedding(complete_graph(4))
    with pytest.raises(GraphError):
        cycle_sides(emb, (0, 1))
    with pytest.raises(GraphError):
        cycle_sides(emb, (0, 1, 2, 1))
    g = build_graph(4, [(0, 1), (1, 2), (2, 3)])
    with pytest.raises(GraphError):
        cycle_sides(planar_embedding(g), (0, 1, 2, 3))


def test_rotation_validation():
    g = cycle_graph(4)
    with pytest.raises(GraphError):
        RotationSystem(g, {0: (1,), 1: (0, 2), 2: (1, 3), 3: (2, 0)})
    with pytest.raises(GraphError):
        RotationSystem(g, {0: (1, 3, 2), 1: (0, 2), 2: (1, 3), 3: (2, 0)})


def test_rotation_euler_rejects_nonplanar_rotation():
    # K4 with both orders at vertex 0 flipped relative to a plane drawing
    # still embeds (in some surface), but a genus-1 rotation of K5 cannot
    # pass the sphere check
    k5 = complete_graph(5)
    rotation = {v: tuple(w for w in range(5) if w != v) for v in range(5)}
    with pytest.raises(GraphError):
        RotationSystem(k5, rotation)


def test_rotation_text_round_trip():
    g = complete_graph(4)
    emb = planar_embedding(g)
    text = rotation_to_text(emb)
    back = rotation_from_text(g, text)
    assert back.rotation == emb.rotation
    assert back.faces == emb.faces
    with pytest.raises(GraphError):
        rotation_from_text(g, "0: 1 2 3\n0: 3 2 1\n")
    with pytest.raises(GraphError):
        rotation_from_text(g, "zero: 1 2 3\n")


def test_pole_condition_requires_matching_host():
    g = build_graph(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4),
                        (2, 3), (3, 4)])
    wrong = planar_embedding(complete_graph(3))
    with pytest.raises(GraphError):
        lemma21_condition(g, 0, 1, wrong)
    with pytest.raises(GraphError):
        certify_nil_via_lemma21(complete_graph(4), 0, 1)


def test_pole_condition_positive_cases():
    # triangle core: the only cycle is facial on both sides
    g = build_graph(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4),
                        (2, 3), (2, 4), (3, 4)])
    assert certify_nil_via_lemma21(g, 0, 1)
    il, _ = is_intrinsically_linked(g)
    assert not il

    # complete tripartite 2+2+3, poles being one of the 2-parts
    g = complete_multipartite(2, 2, 3)
    assert certify_nil_via_lemma21(g, 0, 1)
    il, _ = is_intrinsically_linked(g)
    assert not il


def test_pole_condition_false_on_linked_graphs():
    # a certificate would contradict intrinsic linking, so every linked
    # graph with planar pole complement must come back False
    checked = 0
    for member in petersen_family():
        for u in range(member.n):
            for v in range(u + 1, member.n):
                if member.has_edge(u, v):
                    continue
                rest = delete_vertices(member, [u, v])
                if not is_planar(rest):
                    continue
                assert not certify_nil_via_lemma21(member, u, v)
                checked += 1
        if checked >= 12:
            break
    assert checked >= 12


def test_pole_condition_sound_on_random_graphs():
    rng = random.Random(20260822)
    agreements = 0
    for trial in range(40):
        n = rng.randrange(6, 10)
        p = 0.35 + 0.05 * (trial % 5)
        edges = [(a, b) for a in range(n) for b in range(a + 1, n)
                 if rng.random() < p]
        g = build_graph(n, edges)
        if g.has_edge(0, 1):
            continue
        if certify_nil_via_lemma21(g, 0, 1):
            il, _ = is_intrinsically_linked(g)
            assert not il
            agreements += 1
    assert agreements >= 10


def test_disconnected_pole_complement():
    # poles joined to two disjoint triangles; every cycle is facial
    tri = [(2, 3), (3, 4), (2, 4), (5, 6), (6, 7), (5, 7)]
    poles = [(0, w) for w in range(2, 8)] + [(1, w) for w in range(2, 8)]
    g = build_graph(8, tri + poles)
    assert certify_nil_via_lemma21(g, 0, 1)
    il, _ = is_intrinsically_linked(g)
    assert not il

import itertools
import random

import networkx as nx
import pytest

from maxnil_lab.errors import Graph6Error
from maxnil_lab.formats import dot_export, graph6_decode, graph6_encode
from maxnil_lab.graph import Graph, build_graph, complete_graph, cycle_graph

# hand-packed oracles: K3 has upper-triangle bits 111, padded to 111000,
# so the data byte is 56 + 63 = 119 = "w" after the order byte "B" (3 + 63)
K3_G6 = "Bw"
# one isolated vertex is just the order byte
K1_G6 = "@"
K0_G6 = "?"


def random_graph(n, p, rng):
    edges = [(u, v) for u, v in itertools.combinations(range(n), 2) if rng.random() < p]
    return Graph(n, edges)


def test_frozen_values():
    assert graph6_encode(build_graph(3, [(0, 1), (1, 2), (0, 2)])) == K3_G6
    assert graph6_encode(Graph(1)) == K1_G6
    assert graph6_encode(Graph(0)) == K0_G6
    assert graph6_decode(K3_G6) == complete_graph(3)
    assert graph6_decode(K1_G6) == Graph(1)
    assert graph6_decode(K0_G6) == Graph(0)


def test_round_trip_sampled():
    rng = random.Random(17)
    for n in (0, 1, 2, 5, 8, 13, 30, 70):
        for _ in range(5):
            g = random_graph(n, rng.random(), rng)
            assert graph6_decode(graph6_encode(g)) == g


def test_round_trip_with_isolated_vertices():
    g = Graph(6, [(2, 4)])
    assert graph6_decode(graph6_encode(g)) == g


def test_header_and_whitespace():
    assert graph6_decode(">>graph6<<Bw\n") == complete_graph(3)


def test_cross_check_against_networkx():
    rng = random.Random(29)
    for _ in range(25):
        g = random_graph(9, rng.random(), rng)
        mine = graph6_encode(g)
        h = nx.empty_graph(g.n)
        h.add_edges_from(g.edges)
        theirs = nx.to_graph6_bytes(h, header=False).decode().strip()
        assert mine == theirs
        back = nx.from_graph6_bytes(mine.encode())
        assert set(back.edges()) == {tuple(e) for e in g.edges} or g.m == 0


def test_decode_errors_report_offsets():
    with pytest.raises(Graph6Error) as ei:
        graph6_decode("B" + chr(30))
    assert ei.value.offset == 1
    with pytest.raises(Graph6Error) as ei:
        graph6_decode("B")
    assert ei.value.offset == 1
    with pytest.raises(Graph6Error) as ei:
        graph6_decode("Bww")
    assert ei.value.offset == 2
    with pytest.raises(Graph6Error) as ei:
        graph6_decode("")
    assert ei.value.offset == 0
    # K3 with nonzero padding bits: 0b111001 -> 57 + 63 = 120 = "x"
    with pytest.raises(Graph6Error, match="padding"):
        graph6_decode("Bx")


def test_large_order_header():
    g = Graph(63)
    enc = graph6_encode(g)
    assert enc.startswith("~")
    assert graph6_decode(enc) == g


def test_dot_export():
    g = build_graph(3, [(0, 1)], labels={0: "u", 1: "v"})
    text = dot_export(g)
    assert text.startswith("graph G {")
    assert '0 [label="u"];' in text
    assert "0 -- 1;" in text
    assert "  2;" in text  # isolated unlabeled vertex still listed
    assert text.endswith("}\n")


def test_dot_deterministic():
    g = cycle_graph(5)
    assert dot_export(g) == dot_export(g)

import itertools
import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import ChromaticPipe.core.errors as ers
from ChromaticPipe.core.corpus import random_mixed_graph
from ChromaticPipe.core.mixedgraph import (Flat, MixedGraph, Orientation, edge, enumerate_acyclic_orientations,
                                           enumerate_flats, tails)


def set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for partition in set_partitions(rest):
        yield [[first]] + partition
        for i in range(len(partition)):
            yield partition[:i] + [[first] + partition[i]] + partition[i + 1:]


def connected_partitions(g):
    underlying = g.to_networkx()
    return [p for p in set_partitions(list(g.vertices))
            if all(nx.is_connected(underlying.subgraph(block)) for block in p)]


def cycle(n):
    vertices = [f"c{i}" for i in range(n)]
    return MixedGraph(vertices, [edge(vertices[i], vertices[(i + 1) % n]) for i in range(n)])


#-----------------------------------------#
#              Construction               #
#-----------------------------------------#

def test_rejects_loops():
    with pytest.raises(ers.GraphStructureError):
        MixedGraph(["u"], arcs=[("u", "u")])
    with pytest.raises(ers.GraphStructureError):
        MixedGraph(["u"], [edge("u", "u")])


def test_rejects_unknown_endpoint_and_duplicates():
    with pytest.raises(ers.GraphStructureError):
        MixedGraph(["u"], [edge("u", "w")])
    with pytest.raises(ers.GraphStructureError):
        MixedGraph(["u", "u"])


def test_pair_may_carry_edge_and_both_arcs():
    g = MixedGraph(["u", "v"], [edge("u", "v")], [("u", "v"), ("v", "u")])
    assert len(g.edges) == 1 and len(g.arcs) == 2
    assert len(g.parallel_elements(("u", "v"))) == 2


def test_equality_ignores_vertex_order():
    assert MixedGraph(["u", "v"], arcs=[("u", "v")]) == MixedGraph(["v", "u"], arcs=[("u", "v")])
    assert MixedGraph(["u", "v"], arcs=[("u", "v")]) != MixedGraph(["u", "v"], arcs=[("v", "u")])


#-----------------------------------------#
#               Operations                #
#-----------------------------------------#

def test_underlying(arc, triangle):
    assert arc.underlying() == MixedGraph(["u", "v"], [edge("u", "v")])
    k3 = MixedGraph(["v1", "v2", "v3"], [edge("v1", "v2"), edge("v1", "v3"), edge("v2", "v3")])
    assert triangle.underlying() == k3
    both = MixedGraph(["u", "v"], [edge("u", "v")], [("u", "v"), ("v", "u")])
    assert both.underlying().edges == {edge("u", "v")}
    assert not both.underlying().arcs


def test_contract_single_edge(one_edge):
    contracted = one_edge.contract(edge("u", "v"))
    assert contracted.vertices == ("uv",)
    assert not contracted.edges and not contracted.arcs
    assert one_edge.contraction_vertex(edge("u", "v")) == "uv"


def test_contract_names_merged_vertex():
    g = MixedGraph(["v1", "v2", "v3", "v4"],
                   [edge("v1", "v4"), edge("v1", "v2"), edge("v2", "v3")], [("v3", "v4")])
    contracted = g.contract(edge("v1", "v4"))
    assert contracted.vertices == ("v1v4", "v2", "v3")
    assert contracted.edges == {edge("v1v4", "v2"), edge("v2", "v3")}
    assert contracted.arcs == {("v3", "v1v4")}


def test_contract_merges_parallel_arcs():
    g = MixedGraph(["a", "b", "c"], [edge("a", "b")], [("a", "c"), ("b", "c")])
    contracted = g.contract(edge("a", "b"))
    assert set(contracted.vertices) == {"ab", "c"}
    assert contracted.arcs == {("ab", "c")}
    assert not contracted.edges


def test_contract_keeps_antiparallel_arcs():
    g = MixedGraph(["a", "b", "c"], [edge("a", "b")], [("a", "c"), ("c", "b")])
    assert g.contract(edge("a", "b")).arcs == {("ab", "c"), ("c", "ab")}


def test_contract_name_collision_falls_back():
    g = MixedGraph(["a", "b", "ab"], [edge("a", "b"), edge("b", "ab")])
    assert set(g.contract(edge("a", "b")).vertices) == {"a+b", "ab"}


def test_contract_missing_element(arc):
    with pytest.raises(ers.MissingElementError, match="no such edge/arc"):
        arc.contract(edge("u", "v"))
    with pytest.raises(ers.MissingElementError, match="no such edge/arc"):
        arc.contract(("v", "u"))


def test_delete_and_reverse(arc):
    assert arc.delete(("u", "v")) == MixedGraph(["u", "v"])
    assert arc.reverse_arc(("u", "v")).arcs == {("v", "u")}
    assert arc.delete_vertex("v") == MixedGraph(["u"])
    with pytest.raises(ers.MissingElementError):
        arc.delete_vertex("w")
    with pytest.raises(ers.MissingElementError):
        arc.reverse_arc(("v", "u"))


def test_without_shadowed_edges():
    g = MixedGraph(["u", "v", "w"], [edge("u", "v"), edge("v", "w")], [("u", "v")])
    assert g.without_shadowed_edges() == MixedGraph(["u", "v", "w"], [edge("v", "w")], [("u", "v")])


@given(st.integers(0, 10 ** 6), st.integers(2, 5))
@settings(max_examples=40, deadline=None)
def test_reverse_arc_is_an_involution(seed, n):
    g = random_mixed_graph(random.Random(seed), n)
    for u, v in g.arc_list():
        if (v, u) not in g.arcs:
            assert g.reverse_arc((u, v)).reverse_arc((v, u)) == g


def test_contract_commutes_with_underlying(suite):
    for g in suite[:60]:
        for u, v in g.edge_list() + g.arc_list():
            element = edge(u, v) if edge(u, v) in g.edges else (u, v)
            assert g.contract(element).underlying() == g.underlying().contract(edge(u, v))


#-----------------------------------------#
#                  Flats                  #
#-----------------------------------------#

def test_flats_of_triangle(triangle):
    flats = enumerate_flats(triangle)
    assert len(flats) == 5
    assert flats[0].is_trivial() and flats[0].quotient == triangle
    assert flats[-1].contracted == {"v1v2v3"}
    assert [len(h.blocks) for h in flats] == [3, 2, 2, 2, 1]


def test_flats_of_path(path3):
    partitions = [h.partition() for h in enumerate_flats(path3)]
    assert partitions == [[["a"], ["b"], ["c"]], [["a"], ["b", "c"]], [["a", "b"], ["c"]], [["a", "b", "c"]]]


def test_flats_of_single_vertex():
    flats = enumerate_flats(MixedGraph(["v"]))
    assert len(flats) == 1 and flats[0].contracted == frozenset()


def test_flat_rejects_disconnected_block(path3):
    with pytest.raises(ers.GraphStructureError):
        Flat(path3, [("a", "c"), ("b",)])


@given(st.integers(0, 10 ** 6), st.integers(1, 5))
@settings(max_examples=40, deadline=None)
def test_flats_match_brute_force(seed, n):
    g = random_mixed_graph(random.Random(seed), n)
    flats = enumerate_flats(g)
    assert len(flats) == len(connected_partitions(g))
    assert len(set(flats)) == len(flats)
    underlying = g.to_networkx()
    for h in flats:
        assert sorted(v for block in h.blocks for v in block) == sorted(g.vertices)
        assert all(nx.is_connected(underlying.subgraph(block)) for block in h.blocks)
        assert h.contracted == {name for name in h.vertices if len(h.block_of(name)) > 1}


#-----------------------------------------#
#          Acyclic orientations           #
#-----------------------------------------#

def test_orientation_counts(k3, one_edge):
    assert len(enumerate_acyclic_orientations(k3)) == 6
    assert len(enumerate_acyclic_orientations(one_edge)) == 2
    assert len(enumerate_acyclic_orientations(cycle(4))) == 14
    empty = enumerate_acyclic_orientations(MixedGraph(["a", "b"]))
    assert len(empty) == 1 and not empty[0].arcs


def test_orientation_rejects_cycles(k3):
    with pytest.raises(ers.GraphStructureError):
        Orientation(k3, [("a", "b"), ("b", "c"), ("c", "a")])
    with pytest.raises(ers.GraphStructureError):
        enumerate_acyclic_orientations(MixedGraph(["u", "v"], arcs=[("u", "v")]))


@given(st.integers(0, 10 ** 6), st.integers(1, 5))
@settings(max_examples=30, deadline=None)
def test_orientations_match_brute_force(seed, n):
    h = random_mixed_graph(random.Random(seed), n).underlying()
    edges = h.edge_list()
    expected = 0
    for directions in itertools.product((False, True), repeat=len(edges)):
        digraph = nx.DiGraph()
        digraph.add_nodes_from(h.vertices)
        digraph.add_edges_from((v, u) if flip else (u, v) for (u, v), flip in zip(edges, directions))
        expected += nx.is_directed_acyclic_graph(digraph)
    orientations = enumerate_acyclic_orientations(h)
    assert len(orientations) == expected
    assert all(nx.is_directed_acyclic_graph(sigma.digraph()) for sigma in orientations)


#-----------------------------------------#
#                 Tails                   #
#-----------------------------------------#

def test_tails(arc):
    h = enumerate_flats(arc)[0]
    forward = Orientation(arc.underlying(), [("u", "v")])
    backward = Orientation(arc.underlying(), [("v", "u")])
    assert tails(h, forward) == frozenset()
    assert tails(h, backward) == {"u"}


def test_tails_of_antiparallel_arcs():
    g = MixedGraph(["u", "v"], arcs=[("u", "v"), ("v", "u")])
    h = enumerate_flats(g)[0]
    assert tails(h, Orientation(g.underlying(), [("u", "v")])) == {"v"}

import json

import networkx as nx
import pytest
import sympy

import ChromaticPipe.core.errors as ers
from ChromaticPipe.core.bipoly import BivariatePolynomial
from ChromaticPipe.core.decomposition import (chi_by_decomposition, chi_undirected_decomposition,
                                              decomposition_report, decomposition_terms)
from ChromaticPipe.core.mixedgraph import MixedGraph, edge
from ChromaticPipe.core.oracle import count_colorings, interpolate_chi


def test_examples(arc, triangle, arc_chi, triangle_chi):
    assert chi_by_decomposition(arc) == arc_chi
    assert chi_by_decomposition(triangle) == triangle_chi


def test_antiparallel_arcs():
    g = MixedGraph(["u", "v"], arcs=[("u", "v"), ("v", "u")])
    assert chi_by_decomposition(g).render("plain") == "x^2 - y^2"


def test_triangle_closed_form(triangle, triangle_chi):
    sx, sy = sympy.symbols("x y")
    t = sx - sy
    closed = (3 * sympy.binomial(sx, 3) + 2 * t * sympy.binomial(sy, 2) + (3 * sy + 6) * sympy.binomial(t, 2)
              + 3 * sympy.binomial(t, 3) + t * (3 * sy + 1))
    assert BivariatePolynomial.from_sympy(closed) == triangle_chi
    for point, expected in (((2, 1), 4), ((3, 1), 20), ((3, 2), 12), ((4, 0), 64)):
        assert chi_by_decomposition(triangle).eval(*point) == expected


def test_trivial_graphs():
    assert chi_by_decomposition(MixedGraph([])) == 1
    assert chi_by_decomposition(MixedGraph(["a", "b", "c"])) == BivariatePolynomial.x() ** 3


def test_bound(triangle):
    with pytest.raises(ers.BoundExceededError):
        chi_by_decomposition(triangle, bound=2)
    with pytest.raises(ers.BoundExceededError):
        decomposition_report(triangle, bound=1)


def test_decomposition_matches_interpolation(small_suite):
    for g in small_suite[:60]:
        assert chi_by_decomposition(g) == interpolate_chi(g)


@pytest.mark.slow
def test_decomposition_matches_interpolation_on_suite(suite):
    for g in suite:
        assert chi_by_decomposition(g) == interpolate_chi(g)


#-----------------------------------------#
#                  Terms                  #
#-----------------------------------------#

def test_celeste_sets_are_contracted_vertices_and_opposed_tails(suite):
    for g in suite[:40]:
        for flat, sigma, poset in decomposition_terms(g):
            opposed = {v for v, w in flat.quotient.arcs if (w, v) in sigma.arcs}
            assert poset.celeste == flat.contracted | opposed
            assert set(poset.elements) == set(flat.vertices)
            assert {(a, b) for a, b in poset.relations} == set(sigma.arcs)


def test_triangle_report(triangle, triangle_chi):
    report = decomposition_report(triangle)
    assert len(report.rows) == 13
    assert report.row_counts() == [6, 2, 2, 2, 1]
    assert [flat.describe() for flat in report.flats()] == \
        ["{v1}{v2}{v3}", "{v1}{v2,v3}", "{v1,v2}{v3}", "{v1,v3}{v2}", "{v1,v2,v3}"]
    assert report.total == triangle_chi


def test_report_plain_text(arc):
    lines = decomposition_report(arc).render("plain").splitlines()
    assert lines[0] == "Flat {u}{v}  C(H) = -  (2 orientations)"
    assert lines[1].split() == ["u->v", "celeste:", "-", "1/2", "x^2", "-", "1/2", "x"]
    assert lines[2].split()[:3] == ["v->u", "celeste:", "u"]
    assert lines[3] == "Flat {u,v}  C(H) = uv  (1 orientation)"
    assert lines[4].split() == ["-", "celeste:", "uv", "x", "-", "y"]
    assert lines[-1] == "Total (3 rows): x^2 - 1/2 y^2 - 1/2 y"


def test_report_json(triangle, triangle_chi):
    data = json.loads(decomposition_report(triangle).render("json"))
    assert data["vertices"] == ["v1", "v2", "v3"]
    assert len(data["rows"]) == 13
    assert data["rows"][-1]["partition"] == [["v1", "v2", "v3"]]
    assert data["rows"][-1]["celeste"] == ["v1v2v3"]
    assert BivariatePolynomial.from_json(data["total"]) == triangle_chi
    summed = sum((BivariatePolynomial.from_json(row["polynomial"]) for row in data["rows"]),
                 BivariatePolynomial.zero())
    assert summed == triangle_chi


def test_report_latex(triangle):
    assert decomposition_report(triangle).render("latex").splitlines()[-1] == \
        r"Total (13 rows): x^3 - \frac{1}{2}xy^2 - \frac{5}{2}xy + y^2 + y"


#-----------------------------------------#
#        Graphs without arcs              #
#-----------------------------------------#

def test_undirected_decomposition_agrees(small_suite):
    undirected = [g.underlying() for g in small_suite[:40]]
    for g in undirected:
        assert chi_undirected_decomposition(g) == chi_by_decomposition(g)


def test_undirected_decomposition_rejects_arcs(arc):
    with pytest.raises(ers.GraphStructureError):
        chi_undirected_decomposition(arc)


def test_diagonal_is_the_chromatic_polynomial(small_suite, k3):
    cycle4 = MixedGraph(list("abcd"), [edge("a", "b"), edge("b", "c"), edge("c", "d"), edge("d", "a")])
    graphs = [k3, cycle4] + [g.underlying() for g in small_suite[:30] if g.order > 0]
    for g in graphs:
        expected = BivariatePolynomial.from_sympy(nx.chromatic_polynomial(g.to_networkx()))
        assert chi_by_decomposition(g).substitute_y_equals_x() == expected


def test_threshold_zero_gives_every_map(small_suite):
    for g in small_suite[:40]:
        chi = chi_by_decomposition(g)
        for xv in range(4):
            assert chi.eval(xv, 0) == xv ** g.order
        assert chi.eval(3, 2) == count_colorings(g, 3, 2)

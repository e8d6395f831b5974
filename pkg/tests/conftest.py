from fractions import Fraction

import pytest

from ChromaticPipe.core.bipoly import BivariatePolynomial
from ChromaticPipe.core.corpus import arc_graph, generate_suite, mixed_triangle, single_edge
from ChromaticPipe.core.mixedgraph import MixedGraph, edge

x = BivariatePolynomial.x()
y = BivariatePolynomial.y()
half = Fraction(1, 2)

# chi of the single arc u -> v and of the mixed triangle
ARC_CHI = x ** 2 - (y ** 2).scale(half) - y.scale(half)
TRIANGLE_CHI = x ** 3 - (x * y ** 2).scale(half) - (x * y).scale(5 * half) + y ** 2 + y

ARC_TEXT = """\
# a single arc
vertex u
vertex v
arc u v
"""

TRIANGLE_TEXT = """\
vertex v1
vertex v2
vertex v3
edge v1 v2
edge v1 v3
arc v2 v3   # the only arc
"""


@pytest.fixture
def arc():
    return arc_graph()


@pytest.fixture
def triangle():
    return mixed_triangle()


@pytest.fixture
def one_edge():
    return single_edge()


@pytest.fixture
def path3():
    return MixedGraph(["a", "b", "c"], [edge("a", "b"), edge("b", "c")])


@pytest.fixture
def k3():
    return MixedGraph(["a", "b", "c"], [edge("a", "b"), edge("b", "c"), edge("a", "c")])


@pytest.fixture(scope="session")
def suite():
    return generate_suite()


@pytest.fixture(scope="session")
def small_suite(suite):
    return [g for g in suite if g.order <= 4]


@pytest.fixture
def graph_file(tmp_path):
    """ Writes graph text to a temporary file and returns its path. """
    def write(text, name="graph.txt"):
        path = tmp_path / name
        path.write_text(text)
        return str(path)
    return write


@pytest.fixture
def arc_chi():
    return ARC_CHI


@pytest.fixture
def triangle_chi():
    return TRIANGLE_CHI


@pytest.fixture
def arc_text():
    return ARC_TEXT


@pytest.fixture
def triangle_text():
    return TRIANGLE_TEXT

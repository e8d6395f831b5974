"""
Named example graphs and seeded random corpora of mixed graphs and bicolored posets.
The random graphs are simple: every vertex pair carries at most one of an edge, an
arc or the reversed arc.
"""

import logging
import random

import ChromaticPipe.core.constants as cst
from ChromaticPipe.core.mixedgraph import MixedGraph, edge
from ChromaticPipe.core.orderpoly import BicoloredPoset

logger = logging.getLogger(__name__)


def arc_graph():
    """ Two vertices joined by the single arc u -> v. """
    return MixedGraph(["u", "v"], arcs=[("u", "v")])


def mixed_triangle():
    """ The triangle with edges v1v2 and v1v3 and the arc v2 -> v3. """
    return MixedGraph(["v1", "v2", "v3"], [edge("v1", "v2"), edge("v1", "v3")], [("v2", "v3")])


def single_edge():
    return MixedGraph(["u", "v"], [edge("u", "v")])


def directed_cycle(n):
    vertices = [f"v{i}" for i in range(1, n + 1)]
    return MixedGraph(vertices, arcs=[(vertices[i], vertices[(i + 1) % n]) for i in range(n)])


def random_mixed_graph(rng, n, probability=None):
    """
    A simple random mixed graph on the vertices v1..vn. Each pair carries an element with
    the given probability (default cst.edge_probability); an edge, the arc vi -> vj and
    the arc vj -> vi are then equally likely.
    """
    probability = cst.edge_probability if probability is None else probability
    vertices = [f"v{i}" for i in range(1, n + 1)]
    edges, arcs = [], []
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() >= probability:
                continue
            kind = rng.randrange(3)
            if kind == 0:
                edges.append(edge(vertices[i], vertices[j]))
            elif kind == 1:
                arcs.append((vertices[i], vertices[j]))
            else:
                arcs.append((vertices[j], vertices[i]))
    return MixedGraph(vertices, edges, arcs)


def generate_suite(seed=None, size=None, max_vertices=None):
    """ The reproducible random test suite: `size` graphs of 1..max_vertices vertices,
        larger orders drawn more often.
    """
    seed = cst.default_seed if seed is None else seed
    size = cst.suite_size if size is None else size
    max_vertices = cst.suite_max_vertices if max_vertices is None else max_vertices
    rng = random.Random(seed)
    orders = list(range(1, max_vertices + 1))
    weights = list(cst.suite_vertex_weights[:max_vertices])
    weights += [weights[-1] if weights else 1] * (max_vertices - len(weights))
    suite = [random_mixed_graph(rng, rng.choices(orders, weights)[0]) for _ in range(size)]
    logger.debug(f"Generated {len(suite)} graphs from seed {seed}")
    return suite


def random_bicolored_poset(rng, size, relation_probability=None, celeste_probability=None):
    """ A random bicolored poset on p1..p{size}: pi < pj is a generating relation with
        the given probability whenever i < j, so the relation is always acyclic.
    """
    relation_probability = cst.relation_probability if relation_probability is None else relation_probability
    celeste_probability = cst.celeste_probability if celeste_probability is None else celeste_probability
    elements = [f"p{i}" for i in range(1, size + 1)]
    relations = [(elements[i], elements[j]) for i in range(size) for j in range(i + 1, size)
                 if rng.random() < relation_probability]
    celeste = [e for e in elements if rng.random() < celeste_probability]
    return BicoloredPoset(elements, relations, celeste)


def generate_poset_suite(seed=None, size=None, max_size=None):
    seed = cst.default_seed if seed is None else seed
    size = cst.poset_suite_size if size is None else size
    max_size = cst.poset_max_size if max_size is None else max_size
    rng = random.Random(seed)
    return [random_bicolored_poset(rng, rng.randint(1, max_size)) for _ in range(size)]

import logging

import networkx as nx
from sympy.utilities.iterables import multiset_partitions

import ChromaticPipe.core.errors as ers

logger = logging.getLogger(__name__)


def edge(u, v):
    """ Returns the undirected edge {u, v} in the form MixedGraph uses. Arcs are
        plain (tail, head) tuples.
    """
    return frozenset((u, v))


def is_edge(element):
    return isinstance(element, (frozenset, set))


def block_name(names):
    """ Name of the vertex that replaces a block of merged vertices: the sorted
        parent names concatenated, e.g. ("v4", "v1") -> "v1v4".
    """
    return "".join(sorted(str(name) for name in names))


class MixedGraph(object):
    """
    A finite mixed graph G = (V, E, A): an ordered list of distinct vertices, a set of
    undirected edges and a set of directed arcs. A vertex pair may carry an edge and both
    arcs at the same time; their coloring conditions then apply together. Instances are
    immutable: every operation returns a new graph.

    Attributes:
        vertices:  tuple of vertex names, in declaration order
        edges:     frozenset of edges, each a frozenset {u, v}
        arcs:      frozenset of arcs, each a tuple (tail, head)

    Equality ignores the vertex order; the order only fixes how results are listed.
    """

    def __init__(self, vertices, edges=(), arcs=()):
        """
        Args:
            vertices (iterable): distinct, hashable vertex names.
            edges (iterable): pairs {u, v} (frozensets or 2-tuples); repeats are merged.
            arcs (iterable): pairs (tail, head); repeats are merged.

        Raises:
            GraphStructureError: duplicate vertices, loops or endpoints outside the vertex set.
        """
        vertices = tuple(vertices)
        if len(set(vertices)) != len(vertices):
            raise ers.GraphStructureError(f"Duplicate vertices in {list(vertices)}")
        self._vertices = vertices
        self._position = {v: i for i, v in enumerate(vertices)}

        edge_set = set()
        for pair in edges:
            u, v = self._check_pair(tuple(pair), "edge")
            edge_set.add(edge(u, v))
        arc_set = set()
        for pair in arcs:
            arc_set.add(self._check_pair(tuple(pair), "arc"))

        self._edges = frozenset(edge_set)
        self._arcs = frozenset(arc_set)
        self._underlying = None

    def _check_pair(self, pair, kind):
        if len(pair) == 1 or (len(pair) == 2 and pair[0] == pair[1]):
            raise ers.GraphStructureError(f"Loop {kind} at vertex {pair[0]}")
        if len(pair) != 2:
            raise ers.GraphStructureError(f"An {kind} needs exactly two endpoints, got {pair}")
        for v in pair:
            if v not in self._position:
                raise ers.GraphStructureError(f"The {kind} {pair} has endpoint {v} outside the vertex set")
        return pair

    #-----------------------------------------#
    #               Inspection                #
    #-----------------------------------------#

    @property
    def vertices(self):
        return self._vertices

    @property
    def edges(self):
        return self._edges

    @property
    def arcs(self):
        return self._arcs

    @property
    def order(self):
        return len(self._vertices)

    def position(self, v):
        return self._position[v]

    def edge_list(self):
        """ Edges as (u, v) tuples with u declared before v, sorted by declaration order. """
        pairs = [tuple(sorted(e, key=self._position.__getitem__)) for e in self._edges]
        return sorted(pairs, key=lambda p: (self._position[p[0]], self._position[p[1]]))

    def arc_list(self):
        return sorted(self._arcs, key=lambda p: (self._position[p[0]], self._position[p[1]]))

    def constraint_degree(self, v):
        """ Number of edges and arcs that have v as an endpoint. """
        return sum(1 for e in self._edges if v in e) + sum(1 for a in self._arcs if v in a)

    def parallel_elements(self, element):
        """ Every other edge or arc joining the two endpoints of element. """
        u, v = tuple(element)
        others = []
        if edge(u, v) in self._edges and not is_edge(element):
            others.append(edge(u, v))
        for a in ((u, v), (v, u)):
            if a in self._arcs and a != element:
                others.append(a)
        return others

    def to_networkx(self):
        """ The underlying simple undirected graph as a networkx Graph. """
        graph = nx.Graph()
        graph.add_nodes_from(self._vertices)
        graph.add_edges_from(tuple(e) for e in self._edges)
        graph.add_edges_from(self._arcs)
        return graph

    def arc_digraph(self):
        """ The directed graph formed by the arcs alone. """
        digraph = nx.DiGraph()
        digraph.add_nodes_from(self._vertices)
        digraph.add_edges_from(self._arcs)
        return digraph

    #-----------------------------------------#
    #               Operations                #
    #-----------------------------------------#

    def underlying(self):
        """
        The simple undirected graph obtained by replacing every arc with an undirected
        edge; parallel edges collapse into one.
        """
        if self._underlying is None:
            pairs = set(self._edges) | {edge(u, v) for u, v in self._arcs}
            self._underlying = MixedGraph(self._vertices, pairs)
        return self._underlying

    def delete(self, element):
        """
        Delete an edge (a frozenset, see edge()) or an arc (a (tail, head) tuple).

        Raises:
            MissingElementError: the element is not part of this graph.
        """
        if is_edge(element):
            element = frozenset(element)
            if element not in self._edges:
                raise ers.MissingElementError(f"no such edge/arc: {set(element)}")
            return MixedGraph(self._vertices, self._edges - {element}, self._arcs)
        element = tuple(element)
        if element not in self._arcs:
            raise ers.MissingElementError(f"no such edge/arc: {element}")
        return MixedGraph(self._vertices, self._edges, self._arcs - {element})

    def delete_vertex(self, v):
        """ Delete v together with every edge and arc incident to it. """
        if v not in self._position:
            raise ers.MissingElementError(f"no such vertex: {v}")
        return MixedGraph([w for w in self._vertices if w != v],
                          [e for e in self._edges if v not in e],
                          [a for a in self._arcs if v not in a])

    def reverse_arc(self, a):
        """ The graph G_a in which the arc u->v is replaced by v->u. """
        a = tuple(a)
        if a not in self._arcs:
            raise ers.MissingElementError(f"no such edge/arc: {a}")
        return MixedGraph(self._vertices, self._edges, (self._arcs - {a}) | {(a[1], a[0])})

    def contract(self, element):
        """
        Contract an edge or an arc: both endpoints are replaced by a single vertex v_e
        (named by contraction_vertex()). Loops are dropped, parallel edges and parallel
        identical arcs are merged, anti-parallel arcs are kept.

        Raises:
            MissingElementError: the element is not part of this graph.
        """
        u, v = self._endpoints(element)
        graph, _ = self._merge(self._blocks_merging(u, v))
        return graph

    def contraction_vertex(self, element):
        """ Name of the vertex v_e that contract(element) creates. """
        u, v = self._endpoints(element)
        blocks = self._blocks_merging(u, v)
        _, names = self._merge(blocks)
        return names[[len(block) for block in blocks].index(2)]

    def without_shadowed_edges(self):
        """ Drop every undirected edge whose endpoints are also joined by an arc. The arc
            condition implies the edge condition, so the colorings do not change.
        """
        shadowed = {e for e in self._edges if any(a in self._arcs for a in (tuple(e), tuple(e)[::-1]))}
        if not shadowed:
            return self
        return MixedGraph(self._vertices, self._edges - shadowed, self._arcs)

    def quotient(self, blocks):
        """ The mixed graph obtained by merging each block of a partition of the vertex set
            into one vertex.
        """
        graph, _ = self._merge(self._order_blocks(blocks))
        return graph

    def _endpoints(self, element):
        if is_edge(element):
            if frozenset(element) not in self._edges:
                raise ers.MissingElementError(f"no such edge/arc: {set(element)}")
            return tuple(sorted(element, key=self._position.__getitem__))
        element = tuple(element)
        if element not in self._arcs:
            raise ers.MissingElementError(f"no such edge/arc: {element}")
        return element

    def _blocks_merging(self, u, v):
        blocks = [(w,) for w in self._vertices if w != u and w != v]
        blocks.append((u, v))
        return self._order_blocks(blocks)

    def _order_blocks(self, blocks):
        blocks = [tuple(block) for block in blocks]
        covered = [v for block in blocks for v in block]
        if len(covered) != len(self._vertices) or set(covered) != set(self._vertices) \
                or any(len(block) == 0 for block in blocks):
            raise ers.GraphStructureError(f"The blocks {blocks} do not partition {list(self._vertices)}")
        blocks = [tuple(sorted(block, key=self._position.__getitem__)) for block in blocks]
        return sorted(blocks, key=lambda block: self._position[block[0]])

    def _merge(self, blocks):
        # Blocks arrive ordered by their first vertex; singletons keep their name
        names = [block[0] if len(block) == 1 else block_name(block) for block in blocks]
        if len(set(names)) != len(names):
            names = [block[0] if len(block) == 1 else "+".join(sorted(str(v) for v in block))
                     for block in blocks]
        owner = {v: name for block, name in zip(blocks, names) for v in block}
        edges = {edge(owner[u], owner[v]) for u, v in (tuple(e) for e in self._edges) if owner[u] != owner[v]}
        arcs = {(owner[u], owner[v]) for u, v in self._arcs if owner[u] != owner[v]}
        return MixedGraph(names, edges, arcs), names

    #-----------------------------------------#
    #                Dunders                  #
    #-----------------------------------------#

    def __eq__(self, other):
        if not isinstance(other, MixedGraph):
            return NotImplemented
        return (frozenset(self._vertices) == frozenset(other._vertices)
                and self._edges == other._edges and self._arcs == other._arcs)

    def __hash__(self):
        return hash((frozenset(self._vertices), self._edges, self._arcs))

    def __repr__(self):
        edges = ", ".join(f"{u}-{v}" for u, v in self.edge_list())
        arcs = ", ".join(f"{u}->{v}" for u, v in self.arc_list())
        return f"MixedGraph(V=[{', '.join(map(str, self._vertices))}], E=[{edges}], A=[{arcs}])"


class Flat(object):
    """
    A flat H of a mixed graph G: the mixed graph obtained by contracting edges and arcs of G,
    stored canonically as the partition of V(G) into the contracted blocks.

    Attributes:
        parent:      the mixed graph G
        blocks:      tuple of blocks (tuples of parent vertices), ordered by first vertex
        quotient:    the mixed graph with one vertex per block
        contracted:  C(H), the quotient vertices that stand for blocks of two or more vertices
    """

    def __init__(self, parent, blocks):
        """
        Raises:
            GraphStructureError: the blocks do not partition V(G), or some block does not
                                 induce a connected subgraph of the underlying graph.
        """
        blocks = parent._order_blocks(blocks)
        underlying = parent.to_networkx()
        for block in blocks:
            if len(block) > 1 and not nx.is_connected(underlying.subgraph(block)):
                raise ers.GraphStructureError(f"The block {list(block)} is not connected")
        self._parent = parent
        self._blocks = tuple(blocks)
        self._quotient, names = parent._merge(blocks)
        self._names = tuple(names)
        self._contracted = frozenset(name for name, block in zip(names, blocks) if len(block) > 1)

    @property
    def parent(self):
        return self._parent

    @property
    def blocks(self):
        return self._blocks

    @property
    def quotient(self):
        return self._quotient

    @property
    def contracted(self):
        return self._contracted

    @property
    def vertices(self):
        return self._quotient.vertices

    def block_of(self, name):
        return self._blocks[self._names.index(name)]

    def is_trivial(self):
        return not self._contracted

    def partition(self):
        """ The blocks as lists of vertex names, for reports. """
        return [list(block) for block in self._blocks]

    def describe(self):
        return "".join("{" + ",".join(str(v) for v in block) + "}" for block in self._blocks)

    def __eq__(self, other):
        if not isinstance(other, Flat):
            return NotImplemented
        return self._parent == other._parent and \
            frozenset(map(frozenset, self._blocks)) == frozenset(map(frozenset, other._blocks))

    def __hash__(self):
        return hash((self._parent, frozenset(map(frozenset, self._blocks))))

    def __repr__(self):
        return f"Flat({self.describe()})"


class Orientation(object):
    """
    An acyclic orientation of a simple undirected graph: every edge {u, v} is directed
    either u->v or v->u and the resulting digraph has no directed cycle.
    """

    def __init__(self, graph, arcs):
        """
        Args:
            graph (MixedGraph): a graph without arcs.
            arcs (iterable): one (tail, head) pair per edge of graph.

        Raises:
            GraphStructureError: an edge is missing or doubly oriented, or the result is cyclic.
        """
        arcs = frozenset(tuple(a) for a in arcs)
        if graph.arcs:
            raise ers.GraphStructureError("Only undirected graphs can be oriented")
        if len(arcs) != len(graph.edges) or {edge(u, v) for u, v in arcs} != graph.edges:
            raise ers.GraphStructureError(f"{sorted(arcs, key=str)} does not orient every edge exactly once")
        self._graph = graph
        self._arcs = arcs
        if not nx.is_directed_acyclic_graph(self.digraph()):
            raise ers.GraphStructureError(f"The orientation {self.arc_list()} has a directed cycle")

    @property
    def graph(self):
        return self._graph

    @property
    def arcs(self):
        return self._arcs

    def directs(self, tail, head):
        """ True when the edge {tail, head} is oriented tail -> head. """
        return (tail, head) in self._arcs

    def arc_list(self):
        pos = self._graph.position
        return sorted(self._arcs, key=lambda a: (min(pos(a[0]), pos(a[1])), max(pos(a[0]), pos(a[1]))))

    def digraph(self):
        digraph = nx.DiGraph()
        digraph.add_nodes_from(self._graph.vertices)
        digraph.add_edges_from(self._arcs)
        return digraph

    def describe(self):
        return ", ".join(f"{u}->{v}" for u, v in self.arc_list()) or "-"

    def __eq__(self, other):
        if not isinstance(other, Orientation):
            return NotImplemented
        return self._graph == other._graph and self._arcs == other._arcs

    def __hash__(self):
        return hash((self._graph, self._arcs))

    def __repr__(self):
        return f"Orientation({self.describe()})"


#-----------------------------------------#
#              Enumerations               #
#-----------------------------------------#

def enumerate_flats(g):
    """
    Every flat of g, one per partition of V(g) into blocks that are connected in the
    underlying graph. The trivial flat (all singletons) comes first: flats are sorted by
    number of blocks, descending, then lexicographically by the vertex positions of
    their blocks.
    """
    if not g.vertices:
        return [Flat(g, [])]
    underlying = g.to_networkx()
    vertices = g.vertices
    flats = []
    for partition in multiset_partitions(list(range(len(vertices)))):
        blocks = [tuple(vertices[i] for i in block) for block in partition]
        if all(len(block) == 1 or nx.is_connected(underlying.subgraph(block)) for block in blocks):
            flats.append(Flat(g, blocks))
    flats.sort(key=lambda h: (-len(h.blocks), tuple(tuple(g.position(v) for v in block) for block in h.blocks)))
    logger.debug(f"{len(flats)} flats for {g!r}")
    return flats


def enumerate_acyclic_orientations(h):
    """
    Every acyclic orientation of the undirected graph h. Edges are oriented one at a
    time in edge_list() order, trying u->v before v->u, and a choice is abandoned as
    soon as it closes a directed cycle. The edgeless graph has exactly one (empty)
    orientation.
    """
    if h.arcs:
        raise ers.GraphStructureError("Only undirected graphs can be oriented, use underlying() first")
    edges = h.edge_list()
    digraph = nx.DiGraph()
    digraph.add_nodes_from(h.vertices)
    orientations = []

    def extend(index):
        if index == len(edges):
            orientations.append(Orientation(h, digraph.edges))
            return
        u, v = edges[index]
        for tail, head in ((u, v), (v, u)):
            # tail->head closes a cycle iff head already reaches tail
            if nx.has_path(digraph, head, tail):
                continue
            digraph.add_edge(tail, head)
            extend(index + 1)
            digraph.remove_edge(tail, head)

    extend(0)
    logger.debug(f"{len(orientations)} acyclic orientations of {h!r}")
    return orientations


def tails(h, sigma):
    """
    T(sigma): the quotient vertices v with an arc v->w whose edge {v, w} sigma orients
    the other way, w->v.

    Args:
        h (Flat or MixedGraph): the flat (or a plain mixed graph, read as its own trivial flat)
        sigma (Orientation): an orientation of the underlying graph of h's quotient
    """
    graph = h.quotient if isinstance(h, Flat) else h
    if sigma.graph != graph.underlying():
        raise ers.GraphStructureError(f"{sigma!r} does not orient the underlying graph of {graph!r}")
    return frozenset(v for v, w in graph.arcs if sigma.directs(w, v))

"""
Identities satisfied by the bivariate chromatic polynomial: deletion-contraction for
edges and arcs, the edge-eliminating computation built on it, compatible pairs on
flats and the chromatic reciprocity theorem.

Deletion-contraction holds for a pivot whose endpoints carry no other edge or arc;
see MixedGraph.parallel_elements().
"""

import logging
from functools import lru_cache

import networkx as nx

import ChromaticPipe.core.constants as cst
import ChromaticPipe.core.errors as ers
from ChromaticPipe.core import decomposition, oracle, orderpoly
from ChromaticPipe.core.bipoly import BivariatePolynomial
from ChromaticPipe.core.decomposition import chi_by_decomposition
from ChromaticPipe.core.interpolation import interpolate_grid
from ChromaticPipe.core.mixedgraph import edge, enumerate_acyclic_orientations, enumerate_flats, tails
from ChromaticPipe.core.oracle import check_threshold, interpolate_chi
from ChromaticPipe.core.orderpoly import count_weak_maps, poset_from_orientation

logger = logging.getLogger(__name__)


def x_minus_y():
    return BivariatePolynomial.x() - BivariatePolynomial.y()


class Counterexample(object):
    """ The first place where an identity failed.

        Attributes:
            graph:    the mixed graph (or poset) being checked
            element:  the pivot edge/arc, flat or None
            point:    (x, y) for pointwise checks, None for polynomial ones
            expected: left-hand side (a polynomial or a number)
            actual:   right-hand side (a polynomial or a number)
            detail:   dict of named intermediate polynomials, possibly empty
    """

    def __init__(self, graph, expected, actual, element=None, point=None, detail=None):
        self.graph = graph
        self.element = element
        self.point = point
        self.expected = expected
        self.actual = actual
        self.detail = detail or {}

    def describe(self):
        lines = [f"graph:    {self.graph!r}"]
        if self.element is not None:
            lines.append(f"element:  {_describe_element(self.element)}")
        if self.point is not None:
            lines.append(f"point:    x={self.point[0]}, y={self.point[1]}")
        lines.append(f"expected: {self.expected}")
        lines.append(f"actual:   {self.actual}")
        for name, value in self.detail.items():
            lines.append(f"  {name}: {value}")
        return "\n".join(lines)

    def to_json(self):
        return {"subject": repr(self.graph),
                "element": None if self.element is None else _describe_element(self.element),
                "point": None if self.point is None else list(self.point),
                "expected": str(self.expected),
                "actual": str(self.actual),
                "detail": {name: str(value) for name, value in self.detail.items()}}


class VerificationResult(object):
    """ Outcome of one identity on one input.

        Attributes:
            identity:       name of the checked identity
            subject:        the graph or poset it was checked on
            checked:        number of instances (pivots, flats, points) that were compared
            skipped:        notes on instances that were left out, e.g. shadowed pivots
            counterexample: a Counterexample, None when every instance agreed
    """

    def __init__(self, identity, subject, checked=0, skipped=None, counterexample=None):
        self.identity = identity
        self.subject = subject
        self.checked = checked
        self.skipped = skipped or []
        self.counterexample = counterexample

    @property
    def passed(self):
        return self.counterexample is None

    def summary(self):
        state = "pass" if self.passed else "FAIL"
        text = f"{self.identity}: {state} ({self.checked} checked"
        if self.skipped:
            text += f", {len(self.skipped)} skipped"
        return text + ")"

    def to_json(self):
        return {"identity": self.identity,
                "subject": repr(self.subject),
                "passed": self.passed,
                "checked": self.checked,
                "skipped": list(self.skipped),
                "counterexample": None if self.passed else self.counterexample.to_json()}


def _describe_element(element):
    if isinstance(element, frozenset):
        return "{" + ", ".join(sorted(map(str, element))) + "}"
    if isinstance(element, tuple):
        return f"{element[0]} -> {element[1]}"
    return repr(element)


def _as_edge(g, e):
    e = edge(*e)
    if e not in g.edges:
        raise ers.MissingElementError(f"no such edge/arc: {_describe_element(e)}")
    return e


def _as_arc(g, a):
    a = tuple(a)
    if a not in g.arcs:
        raise ers.MissingElementError(f"no such edge/arc: {_describe_element(a)}")
    return a


#-----------------------------------------#
#         Deletion and contraction        #
#-----------------------------------------#

def edge_delcontr_terms(g, e, bound=None):
    """ The polynomials taking part in edge deletion-contraction for the edge e, each
        computed by interpolation.
    """
    e = _as_edge(g, e)
    contracted = g.contract(e)
    v_e = g.contraction_vertex(e)
    terms = {"G": interpolate_chi(g, bound),
             "G-e": interpolate_chi(g.delete(e), bound),
             "G/e": interpolate_chi(contracted, bound),
             "(G/e)-v_e": interpolate_chi(contracted.delete_vertex(v_e), bound)}
    terms["rhs"] = terms["G-e"] - terms["G/e"] + x_minus_y() * terms["(G/e)-v_e"]
    return terms


def check_edge_delcontr(g, e, bound=None):
    """
    Whether chi_G = chi_{G-e} - chi_{G/e} + (x-y) chi_{(G/e)-v_e} as exact polynomials.

    Args:
        g (MixedGraph): the graph
        e: the edge, as a frozenset or an (u, v) pair

    Raises:
        MissingElementError: e is not an edge of g
        BoundExceededError: a graph involved is beyond the oracle bound
    """
    terms = edge_delcontr_terms(g, e, bound)
    return terms["G"] == terms["rhs"]


def arc_delcontr_terms(g, a, bound=None):
    """
    The polynomials taking part in arc deletion-contraction for a = u->v, each computed
    by interpolation, together with the two sides of the identity. Colorings of G and of
    G_a (a reversed) both live among the colorings of G-a, so their counts add up to the
    size of the union ("union") plus the size of the intersection ("intersection").
    """
    a = _as_arc(g, a)
    u, v = a
    deleted = g.delete(a)
    contracted = g.contract(a)
    v_a = g.contraction_vertex(a)
    t = x_minus_y()

    terms = {"G": interpolate_chi(g, bound),
             "G_a": interpolate_chi(g.reverse_arc(a), bound),
             "G-a": interpolate_chi(deleted, bound),
             "G/a": interpolate_chi(contracted, bound),
             "(G/a)-v_a": interpolate_chi(contracted.delete_vertex(v_a), bound),
             "G-a-v": interpolate_chi(deleted.delete_vertex(v), bound),
             "G-a-u": interpolate_chi(deleted.delete_vertex(u), bound)}
    terms["union"] = terms["G-a"] - terms["G/a"] + t * terms["(G/a)-v_a"]
    terms["intersection"] = t * (terms["G-a-v"] + terms["G-a-u"]) - t * t * terms["(G/a)-v_a"]
    terms["lhs"] = terms["G"] + terms["G_a"]
    terms["rhs"] = (terms["G-a"] - terms["G/a"] + t * (1 - t) * terms["(G/a)-v_a"]
                    + t * (terms["G-a-v"] + terms["G-a-u"]))
    return terms


def check_arc_delcontr(g, a, bound=None):
    """
    Whether chi_G + chi_{G_a} = chi_{G-a} - chi_{G/a} + (x-y)(1-x+y) chi_{(G/a)-v_a}
    + (x-y)(chi_{G-a-v} + chi_{G-a-u}) as exact polynomials, for the arc a = u->v.

    Raises:
        MissingElementError: a is not an arc of g
        BoundExceededError: a graph involved is beyond the oracle bound
    """
    terms = arc_delcontr_terms(g, a, bound)
    return terms["lhs"] == terms["rhs"]


def lexicographic_pivot(g):
    """ The edge whose sorted endpoint names come first. """
    return min(g.edge_list(), key=lambda pair: tuple(sorted(map(str, pair))))


def chi_by_delcontr(g, bound=None, pivot=None):
    """
    chi_G by eliminating undirected edges with edge deletion-contraction until only
    arcs are left; arc-only graphs go to the decomposition. Edges that share their
    endpoints with an arc are dropped first, since the arc condition implies the edge
    condition.

    Args:
        g (MixedGraph): the graph
        bound (int): vertex bound, defaults to cst.vertex_bound
        pivot: the edge to eliminate first, defaults to lexicographic_pivot()

    Raises:
        BoundExceededError: |V| exceeds bound
        GraphStructureError: the requested pivot shares its endpoints with an arc
    """
    bound = cst.vertex_bound if bound is None else bound
    if g.order > bound:
        raise ers.BoundExceededError(f"{g.order} vertices exceeds the vertex bound {bound}")
    if pivot is None:
        return _chi_by_delcontr(g)
    pivot = _as_edge(g, pivot)
    if g.parallel_elements(pivot):
        raise ers.GraphStructureError(f"The pivot {_describe_element(pivot)} shares its endpoints with an arc")
    return _eliminate(g.without_shadowed_edges(), pivot)


@lru_cache(maxsize=cst.polynomial_cache_size)
def _chi_by_delcontr(g):
    g = g.without_shadowed_edges()
    if not g.edges:
        return chi_by_decomposition(g, bound=g.order)
    return _eliminate(g, lexicographic_pivot(g))


def _eliminate(g, e):
    e = edge(*e)
    contracted = g.contract(e)
    v_e = g.contraction_vertex(e)
    return (_chi_by_delcontr(g.delete(e)) - _chi_by_delcontr(contracted)
            + x_minus_y() * _chi_by_delcontr(contracted.delete_vertex(v_e)))


def clear_caches():
    """ Drop every memoized count and polynomial, e.g. between verify suites. """
    for cached in (oracle.count_colorings, oracle._interpolate_chi, orderpoly._omega_component,
                   decomposition._chi_by_decomposition, _chi_by_delcontr):
        cached.cache_clear()
    logger.debug("Cleared the coloring and polynomial caches")


#-----------------------------------------#
#     Compatible pairs and reciprocity    #
#-----------------------------------------#

def _count_monotone(sigma, celeste, x, y):
    # Colorings weakly increasing along sigma, celeste vertices above y
    digraph = sigma.digraph()
    position = sigma.graph.position
    topological = list(nx.lexicographical_topological_sort(digraph, key=position))
    colors = {}

    def extend(i):
        if i == len(topological):
            return 1
        v = topological[i]
        low = max([colors[p] for p in digraph.pred[v]] + [y + 1 if v in celeste else 1])
        total = 0
        for c in range(low, x + 1):
            colors[v] = c
            total += extend(i + 1)
        colors.pop(v, None)
        return total

    return extend(0)


def count_compatible_pairs(h, x, y):
    """
    m_H(x, y): the number of pairs (sigma, c) of an acyclic orientation sigma of the
    underlying graph of the flat h and a coloring c : V(H) -> {1..x} that is weakly
    increasing along every sigma-directed edge and above y on C(H) and T(sigma).

    Raises:
        ThresholdError: y > x or negative arguments
    """
    check_threshold(x, y)
    total = 0
    for sigma in enumerate_acyclic_orientations(h.quotient.underlying()):
        total += _count_monotone(sigma, h.contracted | tails(h, sigma), x, y)
    return total


def cross_check_mH(h, x, y):
    """
    Whether m_H(x, y) equals the sum over sigma of the weak order polynomial counts
    at (x, y+1), which is how the reciprocity proof counts compatible pairs.

    Raises:
        ThresholdError: y + 1 > x
    """
    check_threshold(x, y + 1, minimum_y=1)
    weak = sum(count_weak_maps(poset_from_orientation(h, sigma), x, y + 1)
               for sigma in enumerate_acyclic_orientations(h.quotient.underlying()))
    pairs = count_compatible_pairs(h, x, y)
    if pairs != weak:
        logger.warning(f"Compatible pairs of {h!r} at ({x}, {y}): {pairs} != {weak}")
    return pairs == weak


def reciprocity_sum(g, x, y, flats=None):
    """ The signed sum over all flats H of (-1)^|V(H)| m_H(x, y). """
    flats = enumerate_flats(g) if flats is None else flats
    return sum((-1) ** len(h.vertices) * count_compatible_pairs(h, x, y) for h in flats)


def reciprocity_mismatches(g, xmax, bound=None):
    """ Yields (x, y, chi(-x,-y), signed sum) for every integer 0 <= y <= x <= xmax
        where the two sides of chromatic reciprocity differ.
    """
    negated = interpolate_chi(g, bound).negate_vars()
    flats = enumerate_flats(g)
    for x in range(xmax + 1):
        for y in range(x + 1):
            left = negated.eval(x, y)
            right = reciprocity_sum(g, x, y, flats)
            if left != right:
                yield x, y, left, right


def check_chromatic_reciprocity(g, xmax=None, bound=None):
    """
    Whether chi_G(-x, -y) equals the signed sum of m_H(x, y) over the flats of g at every
    integer point 0 <= y <= x <= xmax (default cst.reciprocity_xmax).

    Raises:
        BoundExceededError: |V| exceeds bound
    """
    xmax = cst.reciprocity_xmax if xmax is None else xmax
    for x, y, left, right in reciprocity_mismatches(g, xmax, bound):
        logger.warning(f"Chromatic reciprocity fails for {g!r} at ({x}, {y}): {left} != {right}")
        return False
    return True


def reciprocity_polynomial(g, bound=None):
    """ The signed sum of m_H over the flats of g, interpolated as a polynomial from the
        thresholds y >= 0.
    """
    bound = cst.vertex_bound if bound is None else bound
    if g.order > bound:
        raise ers.BoundExceededError(f"oracle interpolation limit: {g.order} vertices > bound {bound}")
    flats = enumerate_flats(g)
    return interpolate_grid(lambda x, y: reciprocity_sum(g, x, y, flats), g.order, y_start=0)

"""
Bicolored posets and their strict and weak bivariate order polynomials.

A strict (x, y)-map sends a poset P into {1..x} with a < b => phi(a) < phi(b) and
phi(c) > y on every celeste element c. A weak one has a <= b => phi(a) <= phi(b)
and phi(c) >= y on celeste elements. Both counts are polynomials in x and y and
are recovered here by counting on the triangular grid and interpolating.
"""

import itertools
import logging
from functools import lru_cache, partial
from math import factorial, prod

import networkx as nx

import ChromaticPipe.core.constants as cst
import ChromaticPipe.core.errors as ers
from ChromaticPipe.core.bipoly import BivariatePolynomial
from ChromaticPipe.core.interpolation import interpolate_grid
from ChromaticPipe.core.mixedgraph import tails
from ChromaticPipe.core.oracle import check_threshold

logger = logging.getLogger(__name__)

# Largest number of labelings tried when canonicalizing a component
_max_labelings = 5040


class BicoloredPoset(object):
    """
    A finite strict partial order whose elements are split into celeste and silver ones.

    Attributes:
        elements:   tuple of element names, in the order given
        relations:  frozenset of generating pairs (a, b) meaning a < b; any DAG will
                    do, the order is its transitive closure
        celeste:    frozenset of celeste elements (the rest is silver)
    """

    def __init__(self, elements, relations=(), celeste=()):
        """
        Raises:
            PosetError: duplicate or unknown elements, a cyclic relation, or celeste
                        elements outside the poset.
        """
        elements = tuple(elements)
        if len(set(elements)) != len(elements):
            raise ers.PosetError(f"Duplicate elements in {list(elements)}")
        known = set(elements)
        relations = frozenset(tuple(pair) for pair in relations)
        for a, b in relations:
            if a not in known or b not in known:
                raise ers.PosetError(f"The relation {a} < {b} uses an unknown element")
        celeste = frozenset(celeste)
        if not celeste <= known:
            raise ers.PosetError(f"Celeste elements {sorted(map(str, celeste - known))} are not in the poset")

        dag = nx.DiGraph()
        dag.add_nodes_from(elements)
        dag.add_edges_from(relations)
        if not nx.is_directed_acyclic_graph(dag):
            raise ers.PosetError(f"The relation {sorted(relations, key=str)} is cyclic")

        self._elements = elements
        self._relations = relations
        self._celeste = celeste
        self._dag = dag
        self._closure = nx.transitive_closure_dag(dag)
        self._position = {e: i for i, e in enumerate(elements)}
        self._components = None
        self._layout_arrays = None

    @property
    def elements(self):
        return self._elements

    @property
    def relations(self):
        return self._relations

    @property
    def celeste(self):
        return self._celeste

    @property
    def silver(self):
        return frozenset(self._elements) - self._celeste

    @property
    def size(self):
        return len(self._elements)

    def precedes(self, a, b):
        """ True when a < b in the partial order. """
        return self._closure.has_edge(a, b)

    def order_pairs(self):
        """ Every pair (a, b) with a < b. """
        return frozenset(self._closure.edges)

    def linear_extension(self):
        return list(nx.lexicographical_topological_sort(self._dag, key=self._position.__getitem__))

    def components(self):
        """ The sub-posets on the weakly connected components, ordered by first element. """
        if self._components is not None:
            return self._components
        parts = sorted((sorted(part, key=self._position.__getitem__)
                        for part in nx.weakly_connected_components(self._dag)),
                       key=lambda part: self._position[part[0]])
        components = []
        for part in parts:
            members = set(part)
            components.append(BicoloredPoset(part,
                                             [(a, b) for a, b in self._relations if a in members],
                                             [c for c in self._celeste if c in members]))
        self._components = components
        return components

    def canonical_key(self):
        """
        A key shared by isomorphic bicolored posets: the smallest labeled description over
        the labelings that order elements by (celeste, #below, #above). Posets with too
        many candidate labelings get a key from their linear extension instead, which is
        still exact but no longer shared between isomorphic copies.
        """
        below = {e: len(self._closure.pred[e]) for e in self._elements}
        above = {e: len(self._closure.succ[e]) for e in self._elements}
        signature = {e: (e in self._celeste, below[e], above[e]) for e in self._elements}
        ordered = sorted(self._elements, key=lambda e: (signature[e], self._position[e]))
        groups = [list(group) for _, group in itertools.groupby(ordered, key=signature.__getitem__)]

        if prod(factorial(len(group)) for group in groups) > _max_labelings:
            candidates = [[self.linear_extension()]]
        else:
            candidates = [itertools.permutations(group) for group in groups]

        pairs = self.order_pairs()
        best = None
        for choice in itertools.product(*candidates):
            label = {e: i for i, e in enumerate(e for group in choice for e in group)}
            key = (tuple(sorted((label[a], label[b]) for a, b in pairs)),
                   tuple(sorted(label[c] for c in self._celeste)))
            if best is None or key < best:
                best = key
        return (self.size,) + best

    @classmethod
    def from_key(cls, key):
        size, pairs, celeste = key
        return cls(range(size), pairs, celeste)

    def _layout(self):
        """ Index arrays used by the counting recursions. """
        if self._layout_arrays is not None:
            return self._layout_arrays
        order = self.linear_extension()
        index = {e: i for i, e in enumerate(order)}
        preds = [[index[p] for p in self._dag.pred[e]] for e in order]
        height = [0] * len(order)
        for e in reversed(order):
            succs = [index[s] for s in self._dag.succ[e]]
            height[index[e]] = 1 + max(height[s] for s in succs) if succs else 0
        celeste = [e in self._celeste for e in order]
        inner = [i for i, e in enumerate(order) if self._dag.out_degree(e) > 0]
        maximal = [i for i, e in enumerate(order) if self._dag.out_degree(e) == 0]
        self._layout_arrays = (preds, height, celeste, inner, maximal)
        return self._layout_arrays

    def __eq__(self, other):
        if not isinstance(other, BicoloredPoset):
            return NotImplemented
        return (frozenset(self._elements) == frozenset(other._elements)
                and self.order_pairs() == other.order_pairs() and self._celeste == other._celeste)

    def __hash__(self):
        return hash((frozenset(self._elements), self.order_pairs(), self._celeste))

    def __repr__(self):
        relations = ", ".join(f"{a}<{b}" for a, b in sorted(self._relations, key=str))
        celeste = ", ".join(sorted(map(str, self._celeste)))
        return f"BicoloredPoset([{', '.join(map(str, self._elements))}], [{relations}], celeste=[{celeste}])"


def poset_from_orientation(h, sigma):
    """
    The bicolored poset of a flat h and an acyclic orientation sigma of its underlying
    graph: the quotient vertices ordered by the sigma-directed edges, with celeste set
    C(H) united with T(sigma).
    """
    quotient = h.quotient
    return BicoloredPoset(quotient.vertices, sigma.arcs, h.contracted | tails(h, sigma))


def _count(poset, x, y, strict):
    total = 1
    for component in poset.components():
        total *= _count_component(component, x, y, strict)
        if total == 0:
            break
    return total


def _count_component(poset, x, y, strict):
    preds, height, celeste, inner, maximal = poset._layout()
    colors = [0] * poset.size

    def close():
        # Maximal elements form an antichain: their choices are independent
        total = 1
        for m in maximal:
            lo = max((colors[p] for p in preds[m]), default=0)
            if strict:
                if celeste[m]:
                    lo = max(lo, y)
                total *= max(0, x - lo)
            else:
                lo = max(lo, y if celeste[m] else 1, 1)
                total *= max(0, x - lo + 1)
            if total == 0:
                return 0
        return total

    def extend(i):
        if i == len(inner):
            return close()
        a = inner[i]
        lo = max((colors[p] for p in preds[a]), default=0)
        if strict:
            low = max(lo + 1, y + 1 if celeste[a] else 1)
            # leave room for the longest chain above a
            high = x - height[a]
        else:
            low = max(lo, y if celeste[a] else 1, 1)
            high = x
        total = 0
        for c in range(low, high + 1):
            colors[a] = c
            total += extend(i + 1)
        return total

    return extend(0)


def count_strict_maps(p, x, y):
    """ Number of strict order preserving (x, y)-maps of p.

        Raises:
            ThresholdError: y > x or negative arguments
    """
    check_threshold(x, y)
    return _count(p, x, y, strict=True)


def count_weak_maps(p, x, y):
    """ Number of weak order preserving (x, y)-maps of p.

        Raises:
            ThresholdError: y > x, y < 1 or negative arguments
    """
    check_threshold(x, y, minimum_y=1)
    return _count(p, x, y, strict=False)


def _check_bound(p, bound):
    bound = cst.poset_bound if bound is None else bound
    if p.size > bound:
        raise ers.BoundExceededError(f"poset of {p.size} elements exceeds the bound {bound}")


@lru_cache(maxsize=cst.polynomial_cache_size)
def _omega_component(key, strict):
    poset = BicoloredPoset.from_key(key)
    count = count_strict_maps if strict else count_weak_maps
    polynomial = interpolate_grid(partial(count, poset), poset.size, y_start=1)
    logger.debug(f"{'Strict' if strict else 'Weak'} order polynomial of {key}: {polynomial}")
    return polynomial


def _omega(p, strict):
    result = BivariatePolynomial.constant(1)
    for component in p.components():
        result = result * _omega_component(component.canonical_key(), strict)
    return result


def omega_strict(p, bound=None):
    """ The strict bivariate order polynomial of p, the polynomial counting strict maps.

        Raises:
            BoundExceededError: |P| exceeds bound (default cst.poset_bound)
    """
    _check_bound(p, bound)
    return _omega(p, strict=True)


def omega_weak(p, bound=None):
    """ The weak bivariate order polynomial of p, interpolated on thresholds y >= 1.

        Raises:
            BoundExceededError: |P| exceeds bound (default cst.poset_bound)
    """
    _check_bound(p, bound)
    return _omega(p, strict=False)


def bop_reciprocity_sides(p, bound=None):
    """ Both sides of the order polynomial reciprocity for p:
        (-1)^|P| times the strict polynomial at (-x, -y), and the weak one at (x, y+1).
    """
    left = omega_strict(p, bound).negate_vars().scale((-1) ** p.size)
    right = omega_weak(p, bound).shift_y(1)
    return left, right


def check_bop_reciprocity(p, bound=None):
    left, right = bop_reciprocity_sides(p, bound)
    if left != right:
        logger.warning(f"Order polynomial reciprocity fails for {p!r}: {left} != {right}")
    return left == right

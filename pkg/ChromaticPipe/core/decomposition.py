"""
chi_G(x, y) as a sum of strict bivariate order polynomials: one term for every flat H
of G and every acyclic orientation sigma of the underlying graph of H, with the
contracted vertices C(H) and the opposed arc tails T(sigma) colored above y.
"""

import json
import logging
from functools import lru_cache

import ChromaticPipe.core.constants as cst
import ChromaticPipe.core.errors as ers
from ChromaticPipe.core.bipoly import BivariatePolynomial
from ChromaticPipe.core.mixedgraph import enumerate_acyclic_orientations, enumerate_flats
from ChromaticPipe.core.orderpoly import BicoloredPoset, omega_strict, poset_from_orientation

logger = logging.getLogger(__name__)


def _check_bound(g, bound):
    bound = cst.vertex_bound if bound is None else bound
    if g.order > bound:
        raise ers.BoundExceededError(f"{g.order} vertices exceeds the vertex bound {bound}")
    return bound


def decomposition_terms(g):
    """ Yields (flat, orientation, poset) for every term of the decomposition, flats in
        enumerate_flats() order and orientations in enumeration order within a flat.
    """
    for flat in enumerate_flats(g):
        for sigma in enumerate_acyclic_orientations(flat.quotient.underlying()):
            yield flat, sigma, poset_from_orientation(flat, sigma)


def chi_by_decomposition(g, bound=None):
    """
    chi_G(x, y) summed over flats and acyclic orientations.

    Raises:
        BoundExceededError: |V| exceeds bound (default cst.vertex_bound)
    """
    _check_bound(g, bound)
    return _chi_by_decomposition(g)


@lru_cache(maxsize=cst.polynomial_cache_size)
def _chi_by_decomposition(g):
    total = BivariatePolynomial.zero()
    terms = 0
    for _, _, poset in decomposition_terms(g):
        total = total + omega_strict(poset, bound=g.order)
        terms += 1
    logger.info(f"Decomposed chi of {g!r} over {terms} terms: {total}")
    return total


def chi_undirected_decomposition(g, bound=None):
    """ The undirected specialization: without arcs T(sigma) is always empty and only
        the contracted vertices are celeste.

        Raises:
            GraphStructureError: g has arcs
            BoundExceededError: |V| exceeds bound
    """
    if g.arcs:
        raise ers.GraphStructureError(f"The undirected decomposition needs a graph without arcs, got {len(g.arcs)}")
    _check_bound(g, bound)
    total = BivariatePolynomial.zero()
    for flat in enumerate_flats(g):
        for sigma in enumerate_acyclic_orientations(flat.quotient):
            total = total + omega_strict(BicoloredPoset(flat.vertices, sigma.arcs, flat.contracted), bound=g.order)
    return total


class ReportRow(object):
    """ One term of the decomposition. """

    def __init__(self, flat, orientation, celeste, polynomial):
        self.flat = flat
        self.orientation = orientation
        self.celeste = celeste
        self.polynomial = polynomial

    def celeste_list(self):
        quotient = self.flat.quotient
        return sorted(self.celeste, key=quotient.position)

    def to_json(self):
        return {"partition": self.flat.partition(),
                "orientation": [list(arc) for arc in self.orientation.arc_list()],
                "celeste": self.celeste_list(),
                "polynomial": self.polynomial.to_json()}


class DecompositionReport(object):
    """
    The per-term census of the decomposition of one graph.

    Attributes:
        graph:  the decomposed mixed graph
        rows:   list of ReportRow, in enumeration order
        total:  the sum of all row polynomials, chi_G(x, y)
    """

    def __init__(self, graph, rows):
        self.graph = graph
        self.rows = rows
        self.total = sum((row.polynomial for row in rows), BivariatePolynomial.zero())

    def flats(self):
        """ The distinct flats, in enumeration order. """
        seen = []
        for row in self.rows:
            if not seen or seen[-1] != row.flat:
                seen.append(row.flat)
        return seen

    def row_counts(self):
        """ Number of rows (acyclic orientations) per flat, in enumeration order. """
        return [sum(1 for row in self.rows if row.flat == flat) for flat in self.flats()]

    def render(self, fmt="plain"):
        if fmt == "json":
            return json.dumps({"vertices": list(self.graph.vertices),
                               "rows": [row.to_json() for row in self.rows],
                               "total": self.total.to_json()}, separators=(",", ":"))
        poly_fmt = "latex" if fmt == "latex" else "plain"
        lines = []
        for flat, count in zip(self.flats(), self.row_counts()):
            contracted = ", ".join(map(str, sorted(flat.contracted, key=flat.quotient.position))) or "-"
            lines.append(f"Flat {flat.describe()}  C(H) = {contracted}  ({count} orientation{'s' if count != 1 else ''})")
            for row in self.rows:
                if row.flat != flat:
                    continue
                celeste = ", ".join(map(str, row.celeste_list())) or "-"
                lines.append(f"    {row.orientation.describe():<30} celeste: {celeste:<16} {row.polynomial.render(poly_fmt)}")
        lines.append(f"Total ({len(self.rows)} rows): {self.total.render(poly_fmt)}")
        return "\n".join(lines)


def decomposition_report(g, bound=None):
    """ The decomposition of g term by term; see DecompositionReport.

        Raises:
            BoundExceededError: |V| exceeds bound
    """
    _check_bound(g, bound)
    rows = [ReportRow(flat, sigma, poset.celeste, omega_strict(poset, bound=g.order))
            for flat, sigma, poset in decomposition_terms(g)]
    return DecompositionReport(g, rows)

"""
Ground truth for the bivariate chromatic polynomial: exhaustive counting of the
colorings c : V -> {1..x} with

    edge {u, v}:  c(u) != c(v)  or  c(u) > y
    arc  u -> v:  c(u) <  c(v)  or  c(u) > y

and exact recovery of chi_G(x, y) by interpolating those counts.
"""

import logging
from functools import lru_cache, partial

import ChromaticPipe.core.constants as cst
import ChromaticPipe.core.errors as ers
from ChromaticPipe.core.interpolation import interpolate_grid, triangular_grid

logger = logging.getLogger(__name__)

# Stands for "any color above y" during enumeration
_HIGH = None


def check_threshold(x, y, minimum_y=0):
    """ Validate a palette size x and threshold y.

        Raises:
            ThresholdError: negative or non-integer arguments, y below minimum_y, or y > x
    """
    for name, value in (("x", x), ("y", y)):
        if isinstance(value, bool) or not isinstance(value, int):
            raise ers.ThresholdError(f"{name} must be an integer, got {value!r}")
        if value < 0:
            raise ers.ThresholdError(f"{name} must be nonnegative, got {value}")
    if y < minimum_y:
        raise ers.ThresholdError(f"y must be at least {minimum_y}, got {y}")
    if y > x:
        raise ers.ThresholdError(f"threshold exceeds palette: y={y} > x={x}")


@lru_cache(maxsize=cst.count_cache_size)
def count_colorings(g, x, y):
    """
    Number of colorings of the mixed graph g with colors 1..x and threshold y.

    A vertex colored above y satisfies every condition it takes part in, as tail,
    head or edge endpoint, and which color above y it gets does not matter. The
    enumeration therefore tries the colors 1..y plus one representative above y
    that is weighted by x - y. Vertices are placed in order of descending
    constraint degree and a partial coloring is abandoned as soon as a condition
    between two placed vertices fails.

    Raises:
        ThresholdError: y > x ("threshold exceeds palette") or negative arguments
    """
    check_threshold(x, y)
    order = sorted(g.vertices, key=lambda v: (-g.constraint_degree(v), g.position(v)))
    index = {v: i for i, v in enumerate(order)}

    # Every condition is checked once its later endpoint has been placed
    edge_checks = [[] for _ in order]
    arc_checks = [[] for _ in order]
    for u, v in g.edge_list():
        edge_checks[max(index[u], index[v])].append(min(index[u], index[v]))
    for u, v in g.arc_list():
        arc_checks[max(index[u], index[v])].append((index[u], index[v]))

    free = x - y
    colors = [_HIGH] * len(order)

    def fits(k):
        c = colors[k]
        for other in edge_checks[k]:
            if colors[other] is not _HIGH and colors[other] == c:
                return False
        for tail, head in arc_checks[k]:
            if colors[tail] is not _HIGH and colors[head] is not _HIGH and colors[tail] >= colors[head]:
                return False
        return True

    def extend(k):
        if k == len(order):
            return 1
        total = 0
        if free:
            colors[k] = _HIGH
            total += free * extend(k + 1)
        for c in range(1, y + 1):
            colors[k] = c
            if fits(k):
                total += extend(k + 1)
        colors[k] = _HIGH
        return total

    return extend(0)


def interpolate_chi(g, bound=None):
    """
    chi_G(x, y) recovered exactly from count_colorings on the triangular grid
    y in 1..n+1, x in y..y+n (n = |V|).

    Args:
        g (MixedGraph): the graph
        bound (int): largest accepted |V|, defaults to cst.vertex_bound

    Raises:
        BoundExceededError: "oracle interpolation limit" when |V| exceeds the bound
    """
    bound = cst.vertex_bound if bound is None else bound
    if g.order > bound:
        raise ers.BoundExceededError(f"oracle interpolation limit: {g.order} vertices > bound {bound}")
    return _interpolate_chi(g)


@lru_cache(maxsize=cst.polynomial_cache_size)
def _interpolate_chi(g):
    polynomial = interpolate_grid(partial(count_colorings, g), g.order, y_start=1)
    logger.info(f"Interpolated chi of {g!r}: {polynomial}")
    return polynomial


def heldout_points(rng, n, count=None):
    """
    Random integer points 0 <= y <= x <= 2n+3 that are not on the interpolation grid
    of an n-vertex graph, drawn without repetition.

    Args:
        rng (random.Random): source of randomness
        n (int): number of vertices
        count (int): number of points, defaults to cst.heldout_points; fewer are
                     returned when the region has fewer off-grid points
    """
    count = cst.heldout_points if count is None else count
    grid = set(triangular_grid(n, 1))
    top = 2 * n + 3
    candidates = [(x, y) for x in range(top + 1) for y in range(x + 1) if (x, y) not in grid]
    return rng.sample(candidates, min(count, len(candidates)))

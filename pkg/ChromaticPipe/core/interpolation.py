"""
Exact polynomial recovery from integer samples. Univariate interpolation follows
the classical Lagrange construction (master polynomial, per-point numerators by
synthetic division, rescale, sum) carried out over Fractions instead of a prime
field; bivariate recovery interpolates in x for each sampled y and then each
x-coefficient across the sampled ys.
"""

import logging
from fractions import Fraction

from ChromaticPipe.core.bipoly import BivariatePolynomial

logger = logging.getLogger(__name__)


def eval_poly_at(coefficients, x):
    # Horner, lowest degree first
    value = Fraction(0)
    for coefficient in reversed(coefficients):
        value = value * x + coefficient
    return value


def zpoly(xs):
    """ Coefficients (lowest degree first) of the polynomial prod (X - x_i). """
    root = [Fraction(1)]
    for x in xs:
        root.insert(0, Fraction(0))
        for j in range(len(root) - 1):
            root[j] -= root[j + 1] * x
    return root


def lagrange_coefficients(xs, values):
    """
    The unique polynomial of degree < len(xs) through the points (xs[i], values[i]).

    Args:
        xs (list): distinct sample abscissae
        values (list): sample values, same length as xs

    Returns:
        list of Fraction: coefficients, lowest degree first
    """
    if len(xs) != len(values):
        raise ValueError(f"Got {len(xs)} abscissae for {len(values)} values")
    if len(set(xs)) != len(xs):
        raise ValueError(f"Interpolation points must be distinct, got {xs}")
    if not xs:
        return []

    root = zpoly(xs)
    result = [Fraction(0)] * len(xs)
    for x, value in zip(xs, values):
        # root / (X - x) by synthetic division
        numerator = [Fraction(0)] * (len(root) - 2) + [Fraction(1)]
        for j in range(len(root) - 2, 0, -1):
            numerator[j - 1] = root[j] + numerator[j] * x
        scale = Fraction(value) / eval_poly_at(numerator, x)
        for j, coefficient in enumerate(numerator):
            result[j] += coefficient * scale
    return result


def triangular_grid(degree, y_start=1):
    """ The sample points { (x, y) : y in y_start..y_start+degree, x in y..y+degree },
        all of which satisfy y <= x.
    """
    return [(x, y) for y in range(y_start, y_start + degree + 1) for x in range(y, y + degree + 1)]


def interpolate_grid(count, degree, y_start=1):
    """
    Recover a bivariate polynomial of degree at most `degree` in each variable from
    its values on triangular_grid(degree, y_start).

    Args:
        count (callable): count(x, y) -> exact value at an integer point
        degree (int): degree bound in each variable
        y_start (int): smallest sampled threshold

    Returns:
        BivariatePolynomial
    """
    ys = list(range(y_start, y_start + degree + 1))
    rows = []
    for y in ys:
        xs = list(range(y, y + degree + 1))
        rows.append(lagrange_coefficients(xs, [count(x, y) for x in xs]))

    terms = {}
    for dx in range(degree + 1):
        for dy, coefficient in enumerate(lagrange_coefficients(ys, [row[dx] for row in rows])):
            terms[(dx, dy)] = coefficient
    logger.debug(f"Interpolated degree {degree} from {(degree + 1) ** 2} grid points starting at y={y_start}")
    return BivariatePolynomial(terms)

import json
import logging
from fractions import Fraction
from math import comb

import sympy

logger = logging.getLogger(__name__)


def _rational(value):
    if isinstance(value, Fraction):
        return value
    if isinstance(value, sympy.Rational):
        return Fraction(int(value.p), int(value.q))
    return Fraction(value)


class BivariatePolynomial(object):
    """
    Exact polynomial in x and y with rational coefficients, stored sparsely as a map
    from (degree in x, degree in y) to a nonzero Fraction. Instances are immutable
    and hashable; arithmetic operators accept plain integers and Fractions as constants.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        """
        Args:
            terms (dict): {(dx, dy): coefficient}; zero coefficients are dropped.
        """
        clean = {}
        for (dx, dy), coefficient in (terms or {}).items():
            if dx < 0 or dy < 0:
                raise ValueError(f"Negative exponent in term {(dx, dy)}")
            coefficient = _rational(coefficient)
            if coefficient != 0:
                clean[(int(dx), int(dy))] = coefficient
        self._terms = clean

    @classmethod
    def constant(cls, value):
        return cls({(0, 0): value})

    @classmethod
    def x(cls):
        return cls({(1, 0): 1})

    @classmethod
    def y(cls):
        return cls({(0, 1): 1})

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def _coerce(cls, other):
        if isinstance(other, BivariatePolynomial):
            return other
        if isinstance(other, (int, Fraction, sympy.Rational)):
            return cls.constant(other)
        return None

    #-----------------------------------------#
    #               Inspection                #
    #-----------------------------------------#

    @property
    def terms(self):
        return dict(self._terms)

    def coefficient(self, dx, dy):
        return self._terms.get((dx, dy), Fraction(0))

    def is_zero(self):
        return not self._terms

    def degree_x(self):
        """ Degree in x; -1 for the zero polynomial. """
        return max((dx for dx, _ in self._terms), default=-1)

    def degree_y(self):
        """ Degree in y; -1 for the zero polynomial. """
        return max((dy for _, dy in self._terms), default=-1)

    def total_degree(self):
        return max((dx + dy for dx, dy in self._terms), default=-1)

    def sorted_terms(self):
        """ Terms ordered by x-degree descending, then y-degree descending. """
        return sorted(self._terms.items(), key=lambda item: (-item[0][0], -item[0][1]))

    #-----------------------------------------#
    #               Arithmetic                #
    #-----------------------------------------#

    def add(self, other):
        other = self._coerce(other)
        terms = dict(self._terms)
        for key, coefficient in other._terms.items():
            terms[key] = terms.get(key, 0) + coefficient
        return BivariatePolynomial(terms)

    def sub(self, other):
        return self.add(self._coerce(other).scale(-1))

    def mul(self, other):
        other = self._coerce(other)
        terms = {}
        for (ax, ay), a in self._terms.items():
            for (bx, by), b in other._terms.items():
                key = (ax + bx, ay + by)
                terms[key] = terms.get(key, 0) + a * b
        return BivariatePolynomial(terms)

    def scale(self, factor):
        factor = _rational(factor)
        return BivariatePolynomial({key: c * factor for key, c in self._terms.items()})

    def __add__(self, other):
        if self._coerce(other) is None:
            return NotImplemented
        return self.add(other)

    __radd__ = __add__

    def __sub__(self, other):
        if self._coerce(other) is None:
            return NotImplemented
        return self.sub(other)

    def __rsub__(self, other):
        if self._coerce(other) is None:
            return NotImplemented
        return self._coerce(other).sub(self)

    def __mul__(self, other):
        if self._coerce(other) is None:
            return NotImplemented
        return self.mul(other)

    __rmul__ = __mul__

    def __neg__(self):
        return self.scale(-1)

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result = BivariatePolynomial.constant(1)
        for _ in range(exponent):
            result = result.mul(self)
        return result

    #-----------------------------------------#
    #      Evaluation and substitutions       #
    #-----------------------------------------#

    def eval(self, x0, y0):
        """ Exact value at (x0, y0); integer and Fraction arguments stay exact. """
        x0, y0 = _rational(x0), _rational(y0)
        return sum((c * x0 ** dx * y0 ** dy for (dx, dy), c in self._terms.items()), Fraction(0))

    __call__ = eval

    def negate_vars(self):
        """ The polynomial p(-x, -y). """
        return BivariatePolynomial({(dx, dy): c * (-1) ** (dx + dy) for (dx, dy), c in self._terms.items()})

    def shift_y(self, k):
        """ The polynomial p(x, y + k). """
        k = _rational(k)
        terms = {}
        for (dx, dy), c in self._terms.items():
            for j in range(dy + 1):
                terms[(dx, j)] = terms.get((dx, j), 0) + c * comb(dy, j) * k ** (dy - j)
        return BivariatePolynomial(terms)

    def substitute_y_equals_x(self):
        """ The univariate polynomial p(x, x), returned with y-degree zero. """
        terms = {}
        for (dx, dy), c in self._terms.items():
            terms[(dx + dy, 0)] = terms.get((dx + dy, 0), 0) + c
        return BivariatePolynomial(terms)

    #-----------------------------------------#
    #             sympy bridging              #
    #-----------------------------------------#

    def to_sympy(self):
        x, y = sympy.symbols("x y")
        return sympy.Add(*[sympy.Rational(c.numerator, c.denominator) * x ** dx * y ** dy
                           for (dx, dy), c in self._terms.items()])

    @classmethod
    def from_sympy(cls, expression):
        """ Convert a sympy expression that expands to a polynomial in the symbols x and y. """
        x, y = sympy.symbols("x y")
        expression = sympy.expand(sympy.expand_func(sympy.sympify(expression)))
        poly = sympy.Poly(expression, x, y)
        return cls({key: _rational(c) for key, c in poly.as_dict(native=False).items()})

    #-----------------------------------------#
    #                Rendering                #
    #-----------------------------------------#

    def render(self, fmt="plain"):
        """
        Render as text.

        Args:
            fmt (str): 'plain' ("x^2 - 1/2 y^2 - 1/2 y"), 'latex'
                       ("x^3 - \\frac{1}{2}xy^2 + y") or 'json' (compact, see to_json())
        """
        if fmt == "json":
            return json.dumps(self.to_json(), separators=(",", ":"))
        if fmt not in ("plain", "latex"):
            raise ValueError(f"Unknown polynomial format '{fmt}'")
        if not self._terms:
            return "0"

        pieces = []
        for index, ((dx, dy), c) in enumerate(self.sorted_terms()):
            sign = "-" if c < 0 else "+"
            body = _latex_term(abs(c), dx, dy) if fmt == "latex" else _plain_term(abs(c), dx, dy)
            if index == 0:
                pieces.append(body if sign == "+" else "-" + body)
            else:
                pieces.append(f"{sign} {body}")
        return " ".join(pieces)

    def to_json(self):
        return {"variables": ["x", "y"],
                "terms": [{"dx": dx, "dy": dy, "num": str(c.numerator), "den": str(c.denominator)}
                          for (dx, dy), c in self.sorted_terms()]}

    @classmethod
    def from_json(cls, data):
        """ Inverse of to_json(); accepts the dict or its JSON text. """
        if isinstance(data, str):
            data = json.loads(data)
        if data.get("variables", ["x", "y"]) != ["x", "y"]:
            raise ValueError(f"Expected variables ['x', 'y'], got {data['variables']}")
        return cls({(term["dx"], term["dy"]): Fraction(int(term["num"]), int(term["den"]))
                    for term in data["terms"]})

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __repr__(self):
        return f"BivariatePolynomial({self.render('plain')})"

    def __str__(self):
        return self.render("plain")


def _plain_monomial(dx, dy):
    parts = []
    for name, degree in (("x", dx), ("y", dy)):
        if degree == 1:
            parts.append(name)
        elif degree > 1:
            parts.append(f"{name}^{degree}")
    return " ".join(parts)


def _plain_term(c, dx, dy):
    monomial = _plain_monomial(dx, dy)
    if not monomial:
        return str(c)
    return monomial if c == 1 else f"{c} {monomial}"


def _latex_term(c, dx, dy):
    monomial = ""
    for name, degree in (("x", dx), ("y", dy)):
        if degree == 1:
            monomial += name
        elif 1 < degree < 10:
            monomial += f"{name}^{degree}"
        elif degree >= 10:
            monomial += f"{name}^{{{degree}}}"
    if c.denominator == 1:
        coefficient = str(c.numerator)
    else:
        coefficient = f"\\frac{{{c.numerator}}}{{{c.denominator}}}"
    if not monomial:
        return coefficient
    return monomial if c == 1 else coefficient + monomial

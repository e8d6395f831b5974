"""Exact bivariate chromatic polynomials of mixed graphs."""

__version__ = "0.1.0"

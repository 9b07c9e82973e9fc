"""Exact computer algebra for the Onsager algebra.

Subpackages follow the mathematical layering: exact Laurent polynomials,
the Onsager algebra itself, its closed-ideal calculus, special sequences,
finite-dimensional quotient algebras, representations, and a numerical
chiral Potts spectral check.
"""

from .scalars import Scalar
from .polyring import LaurentPoly, TruncatedSeries, divides, parse_poly, taylor_expand
from .core import (
    OAElement,
    SL2Coord,
    dg_check,
    generator_A,
    generator_G,
    involution_iota,
    involution_sigma,
)

__all__ = [
    "Scalar",
    "LaurentPoly",
    "TruncatedSeries",
    "divides",
    "parse_poly",
    "taylor_expand",
    "OAElement",
    "SL2Coord",
    "dg_check",
    "generator_A",
    "generator_G",
    "involution_iota",
    "involution_sigma",
]

"""Exact arithmetic: Q(t) scalars, bivariate polynomials, dense linear algebra."""
from .bipoly import BiPoly, bipoly_eval, divide_linear, root_multiplicity
from .matrix import ExactMatrix, cofactor_det, kernel
from .parse import parse_scalar
from .scalar import ONE, T, ZERO, Scalar, format_poly, scalar_eval

__all__ = [
    "BiPoly",
    "ExactMatrix",
    "ONE",
    "Scalar",
    "T",
    "ZERO",
    "bipoly_eval",
    "cofactor_det",
    "divide_linear",
    "format_poly",
    "kernel",
    "parse_scalar",
    "root_multiplicity",
    "scalar_eval",
]

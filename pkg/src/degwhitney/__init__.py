"""Exact degenerate r-Whitney numbers, r-Stirling numbers and r-Dowling polynomials."""

from .exact import LAMBDA, LambdaPoly, XPoly
from .triangles import TriangleParams, V, W, get_triangle
from .dowling import dobinski_eval, dowling_poly
from .boson import NormalForm, normal_order, parse
from .verify import run_suite, run_suites

__all__ = [
    "LAMBDA", "LambdaPoly", "XPoly", "TriangleParams", "V", "W", "get_triangle",
    "dobinski_eval", "dowling_poly", "NormalForm", "normal_order", "parse", "run_suite", "run_suites",
]

"""Affine Weyl group combinatorics, Kazhdan-Lusztig polynomials, and the
Weyl character ring, with exhaustive desk-scale verification suites."""

__version__ = "0.1.0"

from .affine import AffineElement, AffineWeylGroup, affine_group
from .charring import CharElem, dim, product, translate, weyl_character
from .klpoly import IntPoly, KLTable
from .lcf import CharacterCalculator, RegimeError, RegimeViolationError
from .ordering import OrderContext, check_ordersame, uparrow_leq
from .rootdata import RootSystem, build_root_system

__all__ = [
    "AffineElement",
    "AffineWeylGroup",
    "CharacterCalculator",
    "CharElem",
    "IntPoly",
    "KLTable",
    "OrderContext",
    "RegimeError",
    "RegimeViolationError",
    "RootSystem",
    "affine_group",
    "build_root_system",
    "check_ordersame",
    "dim",
    "product",
    "translate",
    "uparrow_leq",
    "weyl_character",
    "__version__",
]

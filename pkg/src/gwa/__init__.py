"""Exact computation in degree-one generalized Weyl algebras."""

from .core import (Base, GwaElement, GwaPresentation, multiply, normality_witness,
                   power, sigma_power_apply)
from .errors import (GwaError, Inapplicable, InvalidArgument, ParseError,
                     SemanticError, StructuralError, Unsupported)
from .exactpoly import Fraction, LaurentPoly, Poly

__version__ = "0.1.0"

__all__ = [
    "Base", "Fraction", "GwaElement", "GwaError", "GwaPresentation", "Inapplicable",
    "InvalidArgument", "LaurentPoly", "ParseError", "Poly", "SemanticError",
    "StructuralError", "Unsupported", "multiply", "normality_witness", "power",
    "sigma_power_apply",
]

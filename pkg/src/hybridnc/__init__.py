"""Hybrid network codes: constant-dimension subspace codes concatenated with
Generalized Reed-Solomon codes, plus an operator-channel simulator and
calculators for the associated size/rate bounds."""

from .errors import DecodeFailure, ScaleLimitError
from .gf import ExtensionField, FieldContext, FieldElement, Poly

__version__ = "0.1.0"

__all__ = [
    "DecodeFailure",
    "ScaleLimitError",
    "ExtensionField",
    "FieldContext",
    "FieldElement",
    "Poly",
    "__version__",
]

"""Exact computations with Jack polynomials, their shifted analogues, and
hook-tableau expansions of one-part Kostka coefficients.

Everything is computed over the rationals (optionally with a formal parameter
alpha); no floating point is used anywhere.
"""

from .exact import (
    AlphaFraction,
    AlphaPoly,
    FFExpansion,
    MultiPoly,
    NonPolynomialAlpha,
    Rational,
    SingularSystem,
)
from .hooktab import Down, HookTableau, InvalidTableau, PermutedTableau, Right
from .partitions import MultiRect, SizeMismatch, TooManyBlocks

__all__ = [
    "AlphaFraction",
    "AlphaPoly",
    "Down",
    "FFExpansion",
    "HookTableau",
    "InvalidTableau",
    "MultiPoly",
    "MultiRect",
    "NonPolynomialAlpha",
    "PermutedTableau",
    "Rational",
    "Right",
    "SingularSystem",
    "SizeMismatch",
    "TooManyBlocks",
]

__version__ = "0.1.0"

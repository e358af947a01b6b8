"""Exact Laurent-polynomial tools for forced periodicity of perfect grid coverings."""

__version__ = "0.1.0"

from .laurent import LaurentPoly2, char_poly, parse_poly, serialize  # noqa: E402
from .unipoly import UniPoly  # noqa: E402
from .covering import (  # noqa: E402
    Classification, CoveringProblem, Verdict, classify, classify_convex, grid_ball, periodizer,
)
from .line_factors import line_factor_in_direction, line_factors  # noqa: E402

__all__ = [
    "LaurentPoly2", "char_poly", "parse_poly", "serialize", "UniPoly",
    "Classification", "CoveringProblem", "Verdict", "classify", "classify_convex", "grid_ball",
    "periodizer", "line_factor_in_direction", "line_factors",
]

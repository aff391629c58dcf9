"""Explicit almost-rainbow 4-cycle colorings of K_{n,n} and tools to check them.

An edge coloring of K_{n,n} is an n x n matrix of colors; a 4-cycle is a 2x2
submatrix. The package builds an n-color matrix in which every 2x2 submatrix
holds at least three colors (for even n >= 6 except the failing order 10),
verifies such matrices, and computes exact minimum color counts for tiny
instances by exhaustive search.
"""

from .calibration import calibrate_interpretation, evaluate_order, exceptional_finding
from .coloring import (
    DEFAULT_CONFIG,
    ColoringMatrix,
    CornerMismatch,
    InterpretationConfig,
    TypeClass,
    UnsupportedOrder,
    body_entry,
    build_matrix,
    classify,
    first_column,
    last_row,
    sigma_power,
)
from .regions import RegionGap, partition_coverage
from .search import SearchResult, min_colors_exhaustive, verify_bound_witness
from .verifier import (
    VerificationReport,
    Violation,
    classify_quadruple,
    verify_fast,
    verify_naive,
)

__all__ = [
    "DEFAULT_CONFIG",
    "ColoringMatrix",
    "CornerMismatch",
    "InterpretationConfig",
    "RegionGap",
    "SearchResult",
    "TypeClass",
    "UnsupportedOrder",
    "VerificationReport",
    "Violation",
    "body_entry",
    "build_matrix",
    "calibrate_interpretation",
    "classify",
    "classify_quadruple",
    "evaluate_order",
    "exceptional_finding",
    "first_column",
    "last_row",
    "min_colors_exhaustive",
    "partition_coverage",
    "sigma_power",
    "verify_bound_witness",
    "verify_fast",
    "verify_naive",
]

"""Generalized alternating sign matrices with prescribed boundary signs.

Decide existence, construct, verify, enumerate and count ``m x n``
``(0, +1, -1)``-matrices whose bordered rows and columns alternate in sign.
"""

from .analysis import (
    AlphaSpec,
    NonzeroStats,
    SweepReport,
    alpha_decompose,
    conjecture_sweep,
    nonzero_stats,
)
from .construct import (
    ConstructionTrace,
    InfeasibleSpec,
    InternalContradiction,
    build,
    longest_first_available_sequence,
)
from .core import (
    BorderedMatrix,
    BoundarySpec,
    DimensionMismatch,
    SignMatrix,
    negate,
    reverse_cols,
    reverse_rows,
    transpose,
)
from .enumeration import classical_count, count, enumerate_asms
from .feasibility import FeasibilityReport, PrefixStats, check, prefix_stats
from .verify import AlternationViolation, InteriorNotAlternating, infer_spec, verify

__all__ = [
    "AlphaSpec",
    "AlternationViolation",
    "BorderedMatrix",
    "BoundarySpec",
    "ConstructionTrace",
    "DimensionMismatch",
    "FeasibilityReport",
    "InfeasibleSpec",
    "InteriorNotAlternating",
    "InternalContradiction",
    "NonzeroStats",
    "PrefixStats",
    "SignMatrix",
    "SweepReport",
    "alpha_decompose",
    "build",
    "check",
    "classical_count",
    "conjecture_sweep",
    "count",
    "enumerate_asms",
    "infer_spec",
    "longest_first_available_sequence",
    "negate",
    "nonzero_stats",
    "prefix_stats",
    "reverse_cols",
    "reverse_rows",
    "transpose",
    "verify",
]

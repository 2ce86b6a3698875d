"""Exact truncated multivariate power series and Lagrange-Good inversion.

Coefficients are exact rationals end to end; they surface in python as
fractions.Fraction. The numeric entry points realize the contraction-mapping
oracle and return plain floats.
"""

from lagood._core import (
    DEFAULT_MAX_ITERATIONS,
    DEFAULT_TOLERANCE,
    MAX_VARIABLES,
    ConvergenceError,
    NotInvertibleError,
    ParseError,
    Series,
    TruncationError,
    classic_lagrange_check,
    compare_partial_sums,
    find_epsilon,
    lhs_series,
    numeric_fixed_point,
    numeric_lhs,
    parse,
    plain_coefficient_weight,
    rhs_coefficient,
    solve,
    text,
    verify,
)

__all__ = [
    "DEFAULT_MAX_ITERATIONS",
    "DEFAULT_TOLERANCE",
    "MAX_VARIABLES",
    "ConvergenceError",
    "NotInvertibleError",
    "ParseError",
    "Series",
    "TruncationError",
    "classic_lagrange_check",
    "compare_partial_sums",
    "find_epsilon",
    "lhs_series",
    "numeric_fixed_point",
    "numeric_lhs",
    "parse",
    "plain_coefficient_weight",
    "rhs_coefficient",
    "solve",
    "text",
    "verify",
]

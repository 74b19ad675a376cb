"""Squares and p-adic valuations in the product sequence (2^2-1)...(n^2-1).

Exact integer arithmetic throughout: term computation, a Pell-recurrence
enumeration of every index with a perfect-square term, closed-form prime
valuations in O(log n) divisions with a linear oracle to check them, and an
exhaustive-scan explorer for generalized quadratic-factor products.
"""

from .errors import DomainError
from .explorer import SearchHit, SequenceSpec, search_squares
from .pell import (
    PellPair,
    SquareIndex,
    binomial_sum_even,
    binomial_sum_odd,
    enumerate_square_indices,
    first_square_indices,
    iter_square_indices,
    pell_pair,
    square_index_from_k,
)
from .sequence import (
    SquareSplit,
    TermResult,
    compute_term,
    integer_sqrt,
    is_perfect_square,
    split_square_cofactor,
    square_candidate,
)
from .valuation import (
    Prime,
    RatioReport,
    ValuationBreakdown,
    asymptotic_ratio,
    digit_sum,
    legendre_factorial_valuation,
    op_count,
    reset_op_count,
    valuation_closed_form,
    valuation_oracle,
    vp_int,
)

__version__ = "0.1.0"

__all__ = [
    "DomainError",
    "PellPair",
    "Prime",
    "RatioReport",
    "SearchHit",
    "SequenceSpec",
    "SquareIndex",
    "SquareSplit",
    "TermResult",
    "ValuationBreakdown",
    "asymptotic_ratio",
    "binomial_sum_even",
    "binomial_sum_odd",
    "compute_term",
    "digit_sum",
    "enumerate_square_indices",
    "first_square_indices",
    "integer_sqrt",
    "is_perfect_square",
    "iter_square_indices",
    "legendre_factorial_valuation",
    "op_count",
    "pell_pair",
    "reset_op_count",
    "search_squares",
    "split_square_cofactor",
    "square_candidate",
    "square_index_from_k",
    "valuation_closed_form",
    "valuation_oracle",
    "vp_int",
]

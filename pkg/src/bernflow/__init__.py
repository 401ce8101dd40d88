"""bernflow: exact Bernoulli/Euler generators, analytic continuation of the
Bernoulli numbers to B(s) and of the polynomials to B(s, w), nested zeta
series built on them, high-precision zeros of the polynomials, and tracking
of how those zeros move and scatter as the degree varies continuously."""

from .exact import (
    Convention,
    ExactPoly,
    FormalTerm,
    TermBag,
    apply_operator,
    bernoulli_number,
    bernoulli_polynomial,
    determinant_row_sum,
    difference_identity_holds,
    euler_number,
    euler_numbers_via_sech,
    euler_polynomial,
    generating_function_deviation,
    tree_row_bag,
    tree_row_sum,
)
from .errors import (
    BernflowError,
    DomainError,
    NoConvergence,
    NotConverged,
    NumericalError,
    PoleAtNonPositiveInteger,
    PoleAtOne,
    RowTooDeep,
)

__version__ = "0.1.0"

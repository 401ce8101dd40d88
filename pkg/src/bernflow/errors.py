"""Exception hierarchy.

Numerical routines never return non-finite floats; anything that cannot be
computed raises a tagged error so callers can distinguish bad input
(DomainError subtree) from a computation that ran out of road
(NumericalError subtree).
"""

from __future__ import annotations


class BernflowError(Exception):
    """Base class for all package errors."""


class DomainError(BernflowError, ValueError):
    """Input outside the domain of the requested operation."""


class PoleAtOne(DomainError):
    """zeta requested at its simple pole s = 1."""


class PoleAtNonPositiveInteger(DomainError):
    """gamma requested at a nonpositive integer pole."""


class RowTooDeep(DomainError):
    """Tree row requested beyond the configured depth cap (2^n terms)."""


class NumericalError(BernflowError, ArithmeticError):
    """A computation failed to reach the requested accuracy."""


class NotConverged(NumericalError):
    """A truncated series hit its term cap before meeting the tolerance."""


class NoConvergence(NumericalError):
    """Simultaneous root iteration exhausted its sweep budget."""

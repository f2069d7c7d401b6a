"""Exceptions shared across the package.

Domain errors (bad data, undefined quantities, blown budgets) derive from
DomainError so the CLI can map them to exit code 1.  Input validation that a
caller could have checked up front raises plain ValueError and is treated as
a usage problem.
"""


class DomainError(Exception):
    """Base class for errors that are properties of the input data."""


class MatrixParseError(DomainError):
    """Matrix text that does not follow the interchange format."""

    def __init__(self, message: str, row: int | None = None, token: int | None = None):
        self.row = row
        self.token = token
        super().__init__(message)


class DimensionError(DomainError):
    """Operation applied to a matrix of incompatible shape."""


class RankZeroError(DomainError):
    """The all-zero matrix has no nonsingular submatrix: delta is undefined."""


class DegenerateRankError(DomainError):
    """Structure only defined from rank 3 upward (or size constraint failed)."""


class NotSpannedError(DomainError):
    """Target vector lies outside the span of the allowed columns."""


class BudgetExceededError(DomainError):
    """Exhaustive search would exceed the configured budget; no silent answer."""

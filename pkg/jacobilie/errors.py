"""
Exception hierarchy for JacobiLie.

Every error raised on purpose by the library derives from JacobiError so the
CLI can tell domain failures apart from programming errors.
"""

from typing import Optional


class JacobiError(Exception):
    """
    Base exception for all JacobiLie errors.

    Attributes:
        message: Human readable description
        cause: Optional underlying exception
    """

    def __init__(self, message: str, cause: Optional[Exception] = None):
        super().__init__(message)
        self.cause = cause

    def __str__(self) -> str:
        if self.cause:
            return f"{super().__str__()} (caused by: {self.cause})"
        return super().__str__()


class ExpressionSyntaxError(JacobiError):
    """Raised when printed expression text cannot be parsed."""


class MissingBinding(JacobiError):
    """Raised when an assignment does not cover a free symbol."""

    def __init__(self, symbol: str):
        super().__init__(f"No value bound for symbol '{symbol}'")
        self.symbol = symbol


class DomainError(JacobiError):
    """Raised for ln of a non-positive argument or evaluation at a pole."""


class DimensionMismatch(JacobiError):
    """Raised when operands live in different dimensions."""


class DimensionUnsupported(JacobiError):
    """Raised when an operation is asked for an unsupported dimension."""


class SingularMatrix(JacobiError):
    """Raised when a transformation matrix has identically zero determinant."""


class UnsupportedAlgebra(JacobiError):
    """Raised when a constraint-only automorphism family is instantiated."""


class UnknownAlgebra(JacobiError):
    """Raised when an algebra name is not in the catalog."""


class UnknownGroup(JacobiError):
    """Raised when no vielbein is catalogued for a group."""


class UnknownRow(JacobiError):
    """Raised when a table row or class identifier is not in the catalog."""


class UnknownExample(JacobiError):
    """Raised when a Hamiltonian example number is not in the catalog."""


class NotPolynomial(JacobiError):
    """Raised when solver input is not polynomial over the rationals."""


class PositiveDimensional(JacobiError):
    """Raised when a polynomial system has infinitely many solutions."""


class DependentGenerators(JacobiError):
    """Raised when vector fields are linearly dependent over the constants."""


class CatalogError(JacobiError):
    """Raised when a data file is malformed."""


class ReportStorageError(JacobiError):
    """Raised when a report cannot be written or read."""

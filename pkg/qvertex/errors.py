"""Exception types raised by qvertex."""

from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from .vertex import AdmissibilityReport


class QVertexError(ValueError):
    """Base class for all qvertex errors."""


class DimensionError(QVertexError):
    """Matrix shapes do not fit the operation."""


class NonFiniteError(QVertexError):
    """A matrix or parameter contains NaN or Inf."""


class SingularMatrixError(QVertexError):
    """A linear system could not be solved because a pivot vanished."""

    def __init__(self, pivot: float, message: str | None = None):
        self.pivot = pivot
        super().__init__(message or f"Matrix is numerically singular (pivot {pivot:.3e})")


class AdmissibilityError(QVertexError):
    """A boundary pair violates the self-adjointness conditions."""

    def __init__(self, report: "AdmissibilityReport"):
        self.report = report
        super().__init__(report.message)


class ParameterError(QVertexError):
    """Case parameters violate the constraints of their template."""


class RankConsistencyError(QVertexError):
    """Tolerant ranks do not satisfy r_A + r_B = n + r_S."""


class UnsupportedCaseError(QVertexError):
    """No closed-form amplitude is available for the requested case."""


class FilterSpecError(QVertexError):
    """A filter request is malformed."""


class VertexFileError(QVertexError):
    """A vertex or filter document could not be parsed."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)


class ConfigError(QVertexError):
    """An environment setting is invalid."""

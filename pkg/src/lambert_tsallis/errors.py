"""Exception hierarchy shared by every module in the package."""

from __future__ import annotations

__all__ = [
    "LambertTsallisError",
    "MalformedInputError",
    "UnsupportedFieldError",
    "UnsupportedOperandError",
    "DomainError",
    "NoBranchPointError",
    "DerivativeSingularError",
    "ConvergenceError",
    "ConfigurationError",
]


class LambertTsallisError(Exception):
    """Base class for every error raised by this package."""


class MalformedInputError(LambertTsallisError, ValueError):
    """Structurally invalid input: zero denominator, negative radicand, bad text."""


class UnsupportedFieldError(LambertTsallisError, ValueError):
    """Arithmetic would have to mix two distinct quadratic fields."""


class UnsupportedOperandError(LambertTsallisError, TypeError):
    """Arithmetic or exact sign evaluation requested on an opaque constant."""


class DomainError(LambertTsallisError, ValueError):
    """Argument falls outside the mathematical domain of the operation."""


class NoBranchPointError(DomainError):
    """The requested branch or branch point does not exist for this q."""


class DerivativeSingularError(DomainError):
    """Derivative requested at the branch point, where it diverges."""


class ConvergenceError(LambertTsallisError, RuntimeError):
    """Root finder exhausted its budget. Carries the best iterate found."""

    def __init__(self, message: str, best_w: float | None = None,
                 residual: float | None = None, iterations: int | None = None):
        super().__init__(message)
        self.best_w = best_w
        self.residual = residual
        self.iterations = iterations


class ConfigurationError(LambertTsallisError, ValueError):
    """Requested options or bounds lie outside the supported range."""

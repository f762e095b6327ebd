"""Exception types shared across the package."""

from __future__ import annotations


class QOInfoError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(QOInfoError, ValueError):
    """An argument is outside the documented domain of an operation."""


class ResourceError(QOInfoError):
    """A request would materialize an object beyond the supported size."""


class NotAStateError(QOInfoError, ValueError):
    """A matrix fails the density-matrix contract (negative spectrum)."""

    def __init__(self, message: str, eigenvalue: float | None = None):
        super().__init__(message)
        self.eigenvalue = eigenvalue


class RegistryValidationError(QOInfoError):
    """A registry amplitude set does not reproduce its reference value."""


class ConvergenceError(QOInfoError):
    """An optimizer stopped before reaching its acceptance target."""

    def __init__(self, message: str, best_omega: float | None = None, best_state=None):
        super().__init__(message)
        self.best_omega = best_omega
        self.best_state = best_state

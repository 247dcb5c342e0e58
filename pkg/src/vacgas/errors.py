"""Exception hierarchy shared by all vacgas modules."""

__all__ = [
    "VacgasError",
    "DomainError",
    "SingularityError",
    "ConvergenceError",
    "DifferentiationError",
    "UnsupportedFamilyError",
    "DegenerateEstimateError",
    "ModelRegimeWarning",
]


class VacgasError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(VacgasError, ValueError):
    """An argument lies outside the documented domain of an operation."""


class SingularityError(VacgasError, ArithmeticError):
    """An integrable quantity was requested across a pole.

    Carries the pole location in dimensionless momentum units.
    """

    def __init__(self, message: str, pole_location: float):
        super().__init__(message)
        self.pole_location = pole_location


class ConvergenceError(VacgasError, RuntimeError):
    """A quadrature or series evaluation failed to meet its tolerance.

    ``diagnostics`` holds whatever partial results were available when the
    failure was detected.
    """

    def __init__(self, message: str, diagnostics: dict | None = None):
        super().__init__(message)
        self.diagnostics = diagnostics or {}


class DifferentiationError(VacgasError, RuntimeError):
    """Finite-difference derivative estimates failed to stabilize."""


class UnsupportedFamilyError(VacgasError, TypeError):
    """The requested operation is not defined for this distribution family."""


class DegenerateEstimateError(VacgasError, RuntimeError):
    """A stochastic estimate collapsed (for example, zero accepted weight)."""


class ModelRegimeWarning(UserWarning):
    """The configuration leaves the regime where the model's assumptions hold."""

"""Exception types shared across the package."""


class TailweightError(Exception):
    """Base class for all package errors."""


class DomainError(TailweightError, ValueError):
    """An argument is outside the mathematical domain of an operation."""


class DegenerateDataError(DomainError):
    """Input data carries no usable information (empty, constant, too short)."""


class InferenceError(TailweightError, RuntimeError):
    """A statistical procedure could not produce a valid result."""

"""Exception types shared across the package."""


class AtomscaleError(Exception):
    """Base class for all package errors."""


class ParameterError(AtomscaleError, ValueError):
    """An argument is outside its allowed range or set."""


class ShapeError(AtomscaleError, ValueError):
    """An array argument does not match the expected length or layout."""


class DomainError(AtomscaleError, ValueError):
    """Input data violates a mathematical precondition (e.g. negative density)."""


class FormatError(AtomscaleError, ValueError):
    """A file does not conform to the expected format.

    Carries the 1-based line number of the offending line when known.
    """

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class SolverError(AtomscaleError, RuntimeError):
    """An iterative solver failed to converge; the message carries diagnostics."""


class FitError(AtomscaleError, RuntimeError):
    """A least-squares fit is infeasible or ill-conditioned."""

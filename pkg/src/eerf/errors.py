"""Exception types shared across the package."""


class EerfError(Exception):
    """Base class for all library errors."""


class DomainError(EerfError):
    """An argument or input violates a documented precondition."""


class ParseError(EerfError):
    """A data file is malformed. Carries the 1-based line number."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class ConvergenceError(EerfError):
    """An iterative solver stopped before reaching its tolerance."""

    def __init__(self, message, gradient_norm=None):
        super().__init__(message)
        self.gradient_norm = gradient_norm


class NumericsError(EerfError):
    """A numerical post-condition (e.g. a residual bound) was not met."""

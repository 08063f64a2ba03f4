"""Exception types shared across the package."""


class InstanceFormatError(ValueError):
    """Raised when an instance or solution file cannot be parsed."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class PreconditionError(ValueError):
    """An algorithm was applied to an instance outside its domain.

    Examples are the matching solver on non-cluster input or the
    branching solver on weighted input.
    """


class LimitExceededError(PreconditionError):
    """A configured size limit (gamma, Q, n) was exceeded."""

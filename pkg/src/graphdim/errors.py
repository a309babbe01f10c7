"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument violates a precondition (bad vertex, bad parameter, ...)."""


class ParseError(ValueError):
    """Malformed graph input. Carries the 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class CapExceeded(RuntimeError):
    """Input is larger than the exact-solver cap; refusing to run forever."""

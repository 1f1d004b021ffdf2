"""Exception types shared across the package."""


class WatchwalkError(Exception):
    """Base class for all errors raised by this package."""


class SizeCapError(WatchwalkError):
    """Input exceeds a hard engine size limit."""


class NotATournamentError(WatchwalkError):
    """Operation requires a tournament (or semicomplete digraph)."""


class FormatError(WatchwalkError):
    """Malformed textual graph input."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class PreconditionError(WatchwalkError):
    """Operation called outside its stated preconditions."""

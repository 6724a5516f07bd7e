"""Exception types shared across the package."""


class QsymError(Exception):
    """Base class for all package errors."""


class InvalidInputError(QsymError, ValueError):
    """Raised on malformed user input (bad orders, out-of-range coordinates,
    arity mismatches, unknown family names, ...)."""


class SizeGuardError(QsymError, RuntimeError):
    """Raised when a requested computation would exceed the configured size
    caps.  The message names the offending request and the cap."""


class ParseError(InvalidInputError):
    """Syntax error in the diagram expression language, with position info."""

    def __init__(self, message, line=None, col=None):
        self.line = line
        self.col = col
        if line is not None:
            message = f"{message} (line {line}, column {col})"
        super().__init__(message)

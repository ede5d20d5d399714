"""Exception hierarchy shared by every kgcore module."""


class KGCoreError(Exception):
    """Base class for all errors raised by kgcore."""


class ParseError(KGCoreError, ValueError):
    """Malformed input text, edge list or index file."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DomainError(KGCoreError, ValueError):
    """Argument outside the domain of an operation (bad id, k < 1, ...)."""


class IndexVersionError(ParseError):
    """Index file written with an unsupported format version."""


class IndexValidationError(ParseError):
    """Index file parses but violates the skyline invariants."""


class ConfigError(KGCoreError, ValueError):
    """Invalid generator configuration."""

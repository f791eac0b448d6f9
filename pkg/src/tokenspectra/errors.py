class TokenSpectraError(Exception):
    """Base class; ``exit_code`` is what the CLI returns for it."""

    exit_code = 2


class ValidationError(TokenSpectraError, ValueError):
    pass


class ParseError(ValidationError):
    def __init__(self, message: str, offset: int | None = None):
        self.offset = offset
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)


class ResourceError(TokenSpectraError):
    """A dense dimension exceeded the configured size guard."""

    exit_code = 3


class NumericalError(TokenSpectraError, ArithmeticError):
    exit_code = 4


class ConsistencyError(NumericalError):
    """A computed quantity contradicts a known theorem (e.g. the rank of B)."""

"""Exception types shared across the package."""


class QuasiDiagramError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(QuasiDiagramError, ValueError):
    """Malformed cycle notation. ``position`` is the 0-based offset in the input."""

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class DegreeMismatch(QuasiDiagramError, ValueError):
    pass


class NotAnInvolution(QuasiDiagramError, ValueError):
    """Raised when a permutation squared is not the identity."""

    def __init__(self, witness):
        super().__init__(f"not an involution: point {witness} is not fixed by alpha^2")
        self.witness = witness


class NotRegular(QuasiDiagramError, ValueError):
    pass


class NoKoszulDual(QuasiDiagramError, ValueError):
    pass


class DomainError(QuasiDiagramError, ValueError):
    """An argument lies outside the domain of an operation."""


class InvariantViolation(QuasiDiagramError, RuntimeError):
    """An internal consistency check failed. Indicates a bug, never bad input."""

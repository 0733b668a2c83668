"""Exception hierarchy shared by the library and the CLI."""


class NilcommError(Exception):
    """Base class. ``code`` is the machine-readable tag the CLI reports."""

    code = "ERROR"


class DomainError(NilcommError, ValueError):
    """Input is well-formed but outside the mathematical domain of an operation."""

    code = "DOMAIN"


class NonDominantError(DomainError):
    code = "NON_DOMINANT"


class AlgebraMismatchError(DomainError):
    code = "ALGEBRA_MISMATCH"


class UnsupportedAlgebraError(DomainError):
    code = "UNSUPPORTED_ALGEBRA"


class CeilingExceededError(DomainError):
    code = "CEILING_EXCEEDED"


class ParityError(DomainError):
    code = "SPIN_PARITY"


class NotationError(NilcommError, ValueError):
    """A weight, decomposition or center literal could not be parsed."""

    code = "BAD_LITERAL"

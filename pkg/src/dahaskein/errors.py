"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class DahaError(Exception):
    """Base class for all errors raised by dahaskein."""


class KappaMismatchError(DahaError, ValueError):
    """Two objects living in different strand counts were combined."""


class IndexRangeError(DahaError, IndexError):
    """A generator index lies outside its admissible range."""

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class InexactDivisionError(DahaError, ArithmeticError):
    """Division by a root factor left a nonzero remainder."""

    def __init__(self, message: str, remainder=None):
        super().__init__(message)
        self.remainder = remainder


class ParseError(DahaError, ValueError):
    """Malformed text input. ``position`` is a 0-based character offset."""

    def __init__(self, message: str, position: int | None = None, text: str | None = None):
        self.position = position
        self.text = text
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class UnsupportedLetterError(DahaError, ValueError):
    """A word contains a letter outside the domain of the requested map."""


class ReductionError(DahaError, RuntimeError):
    """Internal failure of the quotient reduction (pivot vanished, measure did not drop)."""


class BoxTooSmallError(DahaError, ValueError):
    """A relation of the brute-force oracle leaves the exponent box."""


class InconsistentQuotientError(DahaError, RuntimeError):
    """The oracle quotient does not have the expected dimension."""


class NonInvariantSupportError(DahaError, RuntimeError):
    """A Y operator maps the Macdonald support span outside itself."""


class DegenerateEigenspaceError(DahaError, RuntimeError):
    """The joint Y-eigenproblem does not have a unique monic solution."""

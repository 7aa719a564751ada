"""Exception types shared across the package."""

from __future__ import annotations

__all__ = [
    "OrthoQLError",
    "DimensionMismatch",
    "AmbientMismatch",
    "SingularGram",
    "NotInDomain",
    "NotCommuting",
    "ParseError",
    "DivisionByZero",
]


class OrthoQLError(Exception):
    """Base class for errors raised by orthoql."""


class DimensionMismatch(OrthoQLError):
    """Vector or matrix shapes do not line up."""


class AmbientMismatch(OrthoQLError):
    """Operands live in different ambient spaces (dimension or field)."""


class SingularGram(OrthoQLError):
    """A Gram matrix was singular: the supplied columns are dependent."""


class NotInDomain(OrthoQLError):
    """A vector lies outside the domain of a partial map."""


class NotCommuting(OrthoQLError):
    """The two partial projections do not commute."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class ParseError(OrthoQLError):
    """Malformed textual input (scalar, vector, expression, or file)."""


# Exact scalar division already raises the builtin on a zero divisor;
# callers can catch either name.
DivisionByZero = ZeroDivisionError

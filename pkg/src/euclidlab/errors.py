"""Exception types shared across the package."""

from __future__ import annotations


class EuclidLabError(Exception):
    """Base class for every error raised by this package."""


class InvalidInputError(EuclidLabError, ValueError):
    """Malformed raw values: wrong types, negative components, broken
    preconditions.  Distinct from a membership test returning False."""


class MonoidMismatchError(EuclidLabError, ValueError):
    """An operation combined elements tagged with different monoids."""


class UnsupportedStructureError(EuclidLabError):
    """The monoid lacks the structure an operation needs (for example
    addition, which congruence monoids do not have)."""


class BoundExceededError(EuclidLabError):
    """An enumeration would inspect more candidates than the configured
    ceiling allows.  Raised instead of returning a partial result."""

    def __init__(self, message: str, *, candidates: int | None = None,
                 ceiling: int | None = None):
        super().__init__(message)
        self.candidates = candidates
        self.ceiling = ceiling


class MonoidSpecSyntaxError(EuclidLabError):
    """A monoid spec string failed to parse.  Carries the position of the
    offending token (1-based line and column)."""

    def __init__(self, message: str, *, line: int = 1, column: int = 1):
        super().__init__(f"syntax error at line {line}, column {column}: {message}")
        self.line = line
        self.column = column

"""Exceptions raised by the Hodge-Chow Kit."""

from __future__ import annotations

from typing import Optional


class HckError(Exception):
    """Base class for every domain error the library raises."""


class RangeError(HckError, ValueError):
    """A parameter lies outside the range an operation accepts."""


class ExprSyntaxError(HckError):
    """A variety expression does not match the grammar."""

    def __init__(self: ExprSyntaxError, message: str, position: int) -> None:
        """
        Initialize an ExprSyntaxError.

        Args:
            message: What went wrong.
            position: 0-based character offset into the expression text.
        """
        super().__init__(f"{message} at position {position}")
        self.position = position


class SeriesShapeError(HckError):
    """Two truncated series do not share a variable count and truncation."""


class FanError(HckError):
    """A fan document is malformed or describes an unsupported fan."""


class TorsionError(HckError):
    """The Chow group presentation has torsion."""


class FunctionalError(HckError):
    """A degree functional is not strictly positive on every orbit class."""


class NoClosedFormError(HckError):
    """No closed-form expression is known for the requested Chow variety."""


class CheckFailure(HckError):
    """Two independent computations of the same quantity disagree."""

    def __init__(
        self: CheckFailure,
        message: str,
        expected: Optional[object] = None,
        actual: Optional[object] = None,
    ) -> None:
        """
        Initialize a CheckFailure.

        Args:
            message: Which check failed.
            expected: The value from the primary computation.
            actual: The value from the independent oracle.
        """
        super().__init__(f"{message}: {expected} != {actual}")
        self.expected = expected
        self.actual = actual

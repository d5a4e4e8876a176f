"""Exception taxonomy shared across the toolkit.

The CLI maps these onto process exit codes: parameter/usage problems exit 2,
a theorem-silent classification exits 3, and verification or numeric
failures exit 4.
"""
from __future__ import annotations


class ParameterError(ValueError):
    """An argument violates a documented precondition."""


class CapabilityError(RuntimeError):
    """The request is valid but outside the designed exhaustive range.

    The message names the operation to use instead, when one exists.
    """


class NumericError(ArithmeticError):
    """A numeric routine failed to certify its result.

    ``best_estimate`` carries the last iterate so callers can inspect how
    close the routine got before giving up.
    """

    def __init__(self, message: str, best_estimate: float | None = None):
        super().__init__(message)
        self.best_estimate = best_estimate


class Graph6DecodeError(ParameterError):
    """Malformed graph6 input; ``offset`` is the byte position of the defect."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset

"""Exceptions raised by Dickson bound computations."""

from __future__ import annotations


class DicksonError(Exception):
    """Base class for all errors raised by this package."""


class SeqSyntaxError(DicksonError, ValueError):
    """
    Sequence literal does not conform to the literal grammar.

    Parameters
    ----------
    reason
        Description of what was expected or found.
    position
        Zero-based character offset in the literal where the error occurred.
    """

    def __init__(self, reason: str, position: int) -> None:
        """
        Initialise error with position information.

        Parameters
        ----------
        reason
            Description of what was expected or found.
        position
            Zero-based character offset in the literal where the error occurred.
        """
        self.reason = reason
        self.position = position
        super().__init__(f"{reason} at position {position}")


class ArithmeticOverflowError(DicksonError, OverflowError):
    """Checked 64-bit unsigned arithmetic left its range."""


class LiteralOverflowError(SeqSyntaxError, ArithmeticOverflowError):
    """Natural number literal does not fit in 64 bits."""


class ContractError(DicksonError, ValueError):
    """Precondition or checked clause does not hold."""


class InvariantError(DicksonError, RuntimeError):
    """Internal invariant failed, which would refute a proven property."""

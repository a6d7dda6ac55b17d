"""Checked 64-bit unsigned arithmetic."""

from __future__ import annotations

from dickson_bounds.utils.exceptions import ArithmeticOverflowError

U64_MAX = 2**64 - 1


def checked(value: int, quantity: str) -> int:
    """
    Ensure a natural number fits in 64 unsigned bits.

    Parameters
    ----------
    value
        Value to check.
    quantity
        Description of the quantity, used in the error message, e.g. "I(n) at n=3".

    Returns
    -------
    int
        `value`, unchanged.

    Raises
    ------
    ArithmeticOverflowError
        If `value` is negative or exceeds ``2**64 - 1``.
    """
    if value < 0 or value > U64_MAX:
        raise ArithmeticOverflowError(f"{quantity} exceeds 64-bit range: {value}")
    return value


def checked_add(*terms: int, quantity: str) -> int:
    """
    Add natural numbers with a 64-bit range check on the result.

    Parameters
    ----------
    *terms
        Natural numbers to add.
    quantity
        Description of the sum, used in the error message.

    Returns
    -------
    int
        Sum of `terms`.
    """
    return checked(sum(terms), quantity)


def checked_pow(base: int, exponent: int, quantity: str) -> int:
    """
    Raise a natural number to a power with a 64-bit range check.

    Parameters
    ----------
    base
        Natural number to raise.
    exponent
        Exponent.
    quantity
        Description of the power, used in the error message, e.g. "Ψ(n)² at n=3".

    Returns
    -------
    int
        ``base ** exponent``.
    """
    return checked(base**exponent, quantity)

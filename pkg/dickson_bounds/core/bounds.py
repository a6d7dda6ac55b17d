"""Descent lemma, the guessed bound and the bound given by general recursion."""

from __future__ import annotations

from collections.abc import Callable
import dataclasses
from enum import Enum
import logging
from typing import Literal, TypeVar

from dickson_bounds.core.measures import big_i, mini, phi, psi
from dickson_bounds.core.pigeonhole import EqualPair, LargeF, LargeG, key
from dickson_bounds.seq.seq import NatFunction
from dickson_bounds.utils.exceptions import ContractError, InvariantError

T = TypeVar("T")
R = TypeVar("R")

Guard = Literal["measure", "literal"]


@dataclasses.dataclass(frozen=True)
class DicksonWitness:
    """
    Indices ``i < j`` where all inspected functions weakly increase.

    Parameters
    ----------
    i
        Smaller index.
    j
        Larger index.
    """

    i: int
    j: int

    def __post_init__(self) -> None:
        """Check indices are ordered."""
        if not self.i < self.j:
            raise ContractError(
                f"DicksonWitness requires i < j, got ({self.i}, {self.j})"
            )


class DescentOutcome(Enum):
    """Boolean content of the descent step at an index."""

    BOUND_REACHED = "bound_reached"
    MEASURE_DECREASED = "measure_decreased"


def descent(f: NatFunction, g: NatFunction, n: int) -> DescentOutcome:
    """
    Decide whether ``I(n)`` is a Dickson bound or ``Φ`` decreases at ``I(n)``.

    Parameters
    ----------
    f
        First function.
    g
        Second function.
    n
        Current index.

    Returns
    -------
    DescentOutcome
        ``BOUND_REACHED`` if a Dickson witness exists below ``I(n)``, otherwise
        ``MEASURE_DECREASED``, in which case ``phi(I(n)) < phi(n)``.
    """
    match key(f, g, n, psi(f, g, n)):
        case EqualPair():
            return DescentOutcome.BOUND_REACHED
        case LargeF(j):
            i = mini(g, n)
            reached = g.eval(i) <= g.eval(j)
        case LargeG(j):
            i = mini(f, n)
            reached = f.eval(i) <= f.eval(j)
    if reached:
        return DescentOutcome.BOUND_REACHED
    return DescentOutcome.MEASURE_DECREASED


def iterate_trace(f: NatFunction, g: NatFunction, n: int, m: int) -> list[int]:
    """
    Get the iterates ``I^0(n), ..., I^m(n)``.

    Parameters
    ----------
    f
        First function.
    g
        Second function.
    n
        Starting index.
    m
        Number of iterations.

    Returns
    -------
    list[int]
        Strictly increasing iterates, starting with `n`.
    """
    trace = [n]
    for _ in range(m):
        trace.append(big_i(f, g, trace[-1]))
    return trace


def iterate_i(f: NatFunction, g: NatFunction, n: int, m: int) -> int:
    """
    Apply ``I`` `m` times starting at `n`.

    Parameters
    ----------
    f
        First function.
    g
        Second function.
    n
        Starting index.
    m
        Number of iterations.

    Returns
    -------
    int
        ``I^m(n)``.
    """
    return iterate_trace(f, g, n, m)[-1]


def guessed_trace(f: NatFunction, g: NatFunction) -> list[int]:
    """
    Get the iterates of ``I`` at 0 leading to the guessed bound.

    Parameters
    ----------
    f
        First function.
    g
        Second function.

    Returns
    -------
    list[int]
        ``I^0(0), ..., I^(f_0 + g_0 + 1)(0)``.
    """
    return iterate_trace(f, g, 0, f.eval(0) + g.eval(0) + 1)


def guessed_bound(f: NatFunction, g: NatFunction) -> int:
    """
    Get the bound ``I^(f_0 + g_0 + 1)(0)``.

    ``Φ(0) = f_0 + g_0`` can decrease at most that many times, so one more
    iteration of ``I`` reaches a Dickson bound.

    Parameters
    ----------
    f
        First function.
    g
        Second function.

    Returns
    -------
    int
        Guessed Dickson bound.
    """
    return guessed_trace(f, g)[-1]


def grec(
    measure: Callable[[T], int],
    x: T,
    step: Callable[[T, Callable[[T], R]], R],
    fallback: Callable[[T], R] | None = None,
) -> R:
    """
    General recursion with a natural-valued measure.

    Computes ``step(x, h)`` where ``h(y)`` recurses only if
    ``measure(y) < measure(x)``, and otherwise returns ``fallback(y)``.

    Parameters
    ----------
    measure
        Measure on arguments.
    x
        Argument to compute at.
    step
        Step function, receiving the argument and the guarded recursive call.
    fallback
        Result for calls that do not decrease the measure. Default is `None`,
        which raises :class:`InvariantError` for such calls.

    Returns
    -------
    R
        Result of `step` at `x`.
    """
    bound = measure(x)

    def recurse(y: T) -> R:
        """
        Recurse on a smaller argument.

        Parameters
        ----------
        y
            Argument to recurse on.

        Returns
        -------
        R
            Result of the recursion at `y`, or the fallback.
        """
        if measure(y) < bound:
            return grec(measure, y, step, fallback)
        if fallback is None:
            raise InvariantError(
                f"Recursive call at {y!r} does not decrease the measure {bound}"
            )
        return fallback(y)

    return step(x, recurse)


def literal_guard(f: NatFunction, g: NatFunction, n: int) -> bool:
    """
    Evaluate the recursion condition ``Φ(I(n)) < I(n)``.

    Parameters
    ----------
    f
        First function.
    g
        Second function.
    n
        Current index.

    Returns
    -------
    bool
        Whether ``phi(I(n)) < I(n)``.
    """
    window_end = big_i(f, g, n)
    return phi(f, g, window_end) < window_end


def extracted_trace(
    f: NatFunction, g: NatFunction, n: int, guard: Guard = "measure"
) -> list[int]:
    """
    Follow the extracted recursion from `n` until a bound is reached.

    Parameters
    ----------
    f
        First function.
    g
        Second function.
    n
        Starting index.
    guard
        Condition for recursing when the descent step does not reach a bound.
        "measure" requires ``phi(I(m)) < phi(m)``, "literal" requires
        ``phi(I(m)) < I(m)``. Default is "measure".

    Returns
    -------
    list[int]
        Visited indices ``n, I(n), ...``, the last being the bound.

    Raises
    ------
    InvariantError
        If the recursion takes more than ``phi(n) + 1`` steps, or a recursive call
        fails its guard.
    """
    trace = [n]
    fuel = phi(f, g, n) + 1

    def step(m: int, recurse: Callable[[int], int]) -> int:
        """
        Return ``I(m)`` if the descent step reaches a bound, else recurse.

        Parameters
        ----------
        m
            Current index.
        recurse
            Guarded recursive call.

        Returns
        -------
        int
            Bound reached from `m`.
        """
        nonlocal fuel
        if fuel == 0:
            raise InvariantError(f"Extracted recursion from n={n} ran out of fuel")
        fuel -= 1

        window_end = big_i(f, g, m)
        trace.append(window_end)
        if descent(f, g, m) is DescentOutcome.BOUND_REACHED:
            return window_end
        logging.debug(f"Φ decreases from {m} to {window_end}")
        if guard == "literal" and not literal_guard(f, g, m):
            raise InvariantError(f"Φ(I(n)) < I(n) fails at n={m}")
        return recurse(window_end)

    grec(lambda m: phi(f, g, m), n, step)
    return trace


def extracted_bound(
    f: NatFunction, g: NatFunction, n: int, guard: Guard = "measure"
) -> int:
    """
    Get the Dickson bound computed by the extracted recursion.

    Parameters
    ----------
    f
        First function.
    g
        Second function.
    n
        Starting index.
    guard
        Condition for recursing, see :func:`extracted_trace`. Default is "measure".

    Returns
    -------
    int
        Bound ``B(n)`` with ``I(n) <= B(n)``.
    """
    return extracted_trace(f, g, n, guard)[-1]

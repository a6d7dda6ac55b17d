"""Square-filling pair code, disjunctive pigeonhole principles and key lemmas."""

from __future__ import annotations

import dataclasses
from enum import Enum
import math

from dickson_bounds.seq.seq import NatFunction, scan_stop
from dickson_bounds.utils.exceptions import ContractError, InvariantError
from dickson_bounds.utils.utils import checked, checked_pow


def pair_code(n: int, m: int) -> int:
    """
    Encode a pair of naturals, filling squares of the grid one shell at a time.

    Parameters
    ----------
    n
        First component.
    m
        Second component.

    Returns
    -------
    int
        ``n**2 + m`` if ``m < n``, otherwise ``m**2 + m + n``.
    """
    if m < n:
        return checked(n * n + m, f"pair code <{n},{m}>")
    return checked(m * m + m + n, f"pair code <{n},{m}>")


class Side(Enum):
    """Which component of a pair is known to be large."""

    F = "f"
    G = "g"


def code_sq_fill(n: int, m: int, k: int) -> Side:
    """
    Decide which component of a pair is at least `k`, given its code is at least k².

    Parameters
    ----------
    n
        First component.
    m
        Second component.
    k
        Lower bound to certify.

    Returns
    -------
    Side
        ``Side.F`` if ``k <= n``, otherwise ``Side.G``, in which case ``k <= m``.

    Raises
    ------
    ContractError
        If ``k**2 > pair_code(n, m)``.
    """
    if k * k > pair_code(n, m):
        raise ContractError(f"code_sq_fill requires {k}² <= <{n},{m}>")
    if k <= n:
        return Side.F
    if k <= m:
        return Side.G
    raise InvariantError(f"Pair code <{n},{m}> is not square-filling for k={k}")


@dataclasses.dataclass(frozen=True)
class PairedSeq:
    """
    Sequence of pair codes ``i -> <left_i, right_i>``.

    Parameters
    ----------
    left
        Function in the first component.
    right
        Function in the second component.
    """

    left: NatFunction
    right: NatFunction

    def eval(self, n: int) -> int:
        """
        Evaluate the coded sequence at an index.

        Parameters
        ----------
        n
            Index to evaluate at.

        Returns
        -------
        int
            ``pair_code(left.eval(n), right.eval(n))``.
        """
        return pair_code(self.left.eval(n), self.right.eval(n))

    def shift(self, n: int) -> PairedSeq:
        """
        Shift both components.

        Parameters
        ----------
        n
            Offset of the shift.

        Returns
        -------
        PairedSeq
            Coded sequence of the shifted components.
        """
        return PairedSeq(self.left.shift(n), self.right.shift(n))

    def cycle(self) -> tuple[int, int]:
        """
        Get where both components repeat together, and their common period.

        Returns
        -------
        tuple[int, int]
            Later of the two starts, and the least common multiple of the periods.
        """
        left_start, left_period = self.left.cycle()
        right_start, right_period = self.right.cycle()
        return max(left_start, right_start), math.lcm(left_period, right_period)


@dataclasses.dataclass(frozen=True)
class EqualPair:
    """
    Two distinct indices where the inspected functions agree.

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
            raise ContractError(f"EqualPair requires i < j, got ({self.i}, {self.j})")


@dataclasses.dataclass(frozen=True)
class Large:
    """
    Index where the single inspected function is large.

    Parameters
    ----------
    j
        Index of the large value.
    """

    j: int


@dataclasses.dataclass(frozen=True)
class LargeF:
    """
    Index where the first function is large.

    Parameters
    ----------
    j
        Index of the large value.
    """

    j: int


@dataclasses.dataclass(frozen=True)
class LargeG:
    """
    Index where the second function is large.

    Parameters
    ----------
    j
        Index of the large value.
    """

    j: int


@dataclasses.dataclass(frozen=True)
class LargeH:
    """
    Index where the third function is large.

    Parameters
    ----------
    j
        Index of the large value.
    """

    j: int


@dataclasses.dataclass(frozen=True)
class EqualTriple(EqualPair):
    """Two distinct indices where three functions all agree."""


PigeonholeOutcome = EqualPair | Large
KeyOutcome = EqualPair | LargeF | LargeG
Key3Outcome = EqualTriple | LargeF | LargeG | LargeH


def maxi(f: NatFunction, n: int) -> int:
    """
    Get the first index where `f` is maximal on ``0, ..., n``.

    Parameters
    ----------
    f
        Function to inspect.
    n
        Last index of the range.

    Returns
    -------
    int
        Least index of a maximal value.
    """
    return max(range(scan_stop(f, n) + 1), key=f.eval)


@dataclasses.dataclass(frozen=True)
class _Occurrences:
    """
    Indices in ``0, ..., m`` where an eventually periodic function takes one value.

    Parameters
    ----------
    leading
        Indices before the function starts repeating, in increasing order.
    residues
        Indices in the first period, in increasing order.
    period
        Period of the function.
    m
        Last index.
    """

    leading: tuple[int, ...]
    residues: tuple[int, ...]
    period: int
    m: int

    def __len__(self) -> int:
        """
        Count the indices.

        Returns
        -------
        int
            Number of indices up to `m`.
        """
        repeats = ((self.m - residue) // self.period + 1 for residue in self.residues)
        return len(self.leading) + sum(repeats)

    def __getitem__(self, k: int) -> int:
        """
        Get the `k`-th index in increasing order.

        Parameters
        ----------
        k
            Position, less than the number of indices.

        Returns
        -------
        int
            Index.
        """
        if k < len(self.leading):
            return self.leading[k]
        cycles, position = divmod(k - len(self.leading), len(self.residues))
        return self.residues[position] + cycles * self.period


def fph_disj(m: int, f: NatFunction) -> PigeonholeOutcome:
    """
    Find equal values or a large value among ``f_0, ..., f_m``.

    Follows the induction on `m`: at each level the first maximal value either
    reaches the level, or it is removed and the level decreases. A large value
    found after a removal equals the removed maximum. Ties go to the least
    index, as in :func:`maxi`.

    Removals are counted per value rather than per index, so only the values
    on ``0, ..., scan_stop(f, m)`` are evaluated.

    Parameters
    ----------
    m
        Last index inspected.
    f
        Function to inspect.

    Returns
    -------
    PigeonholeOutcome
        ``EqualPair(i, j)`` with ``i < j <= m`` and ``f_i == f_j``, or
        ``Large(j)`` with ``j <= m`` and ``m <= f_j``.
    """
    start, period = f.cycle()
    groups: dict[int, tuple[list[int], list[int]]] = {}
    for index in range(scan_stop(f, m) + 1):
        leading, residues = groups.setdefault(f.eval(index), ([], []))
        (leading if index < start else residues).append(index)

    removed = 0
    # Values are removed from the largest down, each in increasing index order
    for value in sorted(groups, reverse=True):
        leading, residues = groups[value]
        occurrences = _Occurrences(tuple(leading), tuple(residues), period, m)
        # First removal count at which this value reaches the level m - count
        stop_at = max(removed, m - value)
        if stop_at < removed + len(occurrences):
            break
        removed += len(occurrences)

    if stop_at == 0:
        return Large(maxi(f, m))
    position = stop_at - removed
    if position == 0:
        raise InvariantError(
            f"Removed maximum differs from f_{occurrences[0]}={value} at m={m}"
        )
    return EqualPair(occurrences[position - 1], occurrences[position])


def fph_disj2(f: NatFunction, g: NatFunction, k: int) -> KeyOutcome:
    """
    Find a common repetition of two functions, or a large value, up to k².

    Parameters
    ----------
    f
        First function.
    g
        Second function.
    k
        Lower bound for large values.

    Returns
    -------
    KeyOutcome
        ``EqualPair(i, j)`` with ``i < j <= k**2`` where both functions agree,
        ``LargeF(j)`` with ``j <= k**2`` and ``k <= f_j``, or ``LargeG(j)``
        with ``j <= k**2`` and ``k <= g_j``.
    """
    outcome = fph_disj(checked_pow(k, 2, f"k² at k={k}"), PairedSeq(f, g))
    match outcome:
        case EqualPair():
            return outcome
        case Large(j):
            if code_sq_fill(f.eval(j), g.eval(j), k) is Side.F:
                return LargeF(j)
            return LargeG(j)


def key(f: NatFunction, g: NatFunction, n: int, k: int) -> KeyOutcome:
    """
    Apply :func:`fph_disj2` to the window of indices after `n`.

    Parameters
    ----------
    f
        First function.
    g
        Second function.
    n
        Index after which the window starts.
    k
        Lower bound for large values.

    Returns
    -------
    KeyOutcome
        Outcome with absolute indices in ``n + 1, ..., n + k**2 + 1``.
    """
    start = n + 1
    match fph_disj2(f.shift(n), g.shift(n), k):
        case EqualPair(i, j):
            return EqualPair(start + i, start + j)
        case LargeF(j):
            return LargeF(start + j)
        case LargeG(j):
            return LargeG(start + j)


def key3(
    f: NatFunction, g: NatFunction, h: NatFunction, n: int, k: int
) -> Key3Outcome:
    """
    Apply :func:`key` to the coded pair ``<f, g>`` and `h` at strength k².

    Parameters
    ----------
    f
        First function.
    g
        Second function.
    h
        Third function.
    n
        Index after which the window starts.
    k
        Lower bound for large values.

    Returns
    -------
    Key3Outcome
        ``EqualTriple(i, j)`` with ``n < i < j <= n + k**4 + 1`` where all three
        functions agree, or ``LargeF(j)``, ``LargeG(j)`` or ``LargeH(j)`` with
        ``n < j <= n + k**4 + 1`` and `k` at most the corresponding value.
    """
    match key(PairedSeq(f, g), h, n, checked_pow(k, 2, f"k² at k={k}")):
        case EqualPair(i, j):
            return EqualTriple(i, j)
        case LargeF(j):
            if code_sq_fill(f.eval(j), g.eval(j), k) is Side.F:
                return LargeF(j)
            return LargeG(j)
        case LargeG(j):
            return LargeH(j)

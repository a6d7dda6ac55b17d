"""Eventually constant and eventually periodic sequences of natural numbers."""

from __future__ import annotations

from collections.abc import Iterable
import dataclasses
import re
from typing import Protocol

from dickson_bounds.utils.exceptions import (
    LiteralOverflowError,
    SeqSyntaxError,
)
from dickson_bounds.utils.utils import U64_MAX


class NatFunction(Protocol):
    """Total function from indices to natural numbers."""

    def eval(self, n: int) -> int:
        """
        Evaluate the function at an index.

        Parameters
        ----------
        n
            Index to evaluate at.

        Returns
        -------
        int
            Value at `n`.
        """

    def shift(self, n: int) -> NatFunction:
        """
        Get the function ``i -> self.eval(n + 1 + i)``.

        Parameters
        ----------
        n
            Offset of the shift.

        Returns
        -------
        NatFunction
            Shifted function.
        """

    def cycle(self) -> tuple[int, int]:
        """
        Get where the function starts repeating, and its period.

        Returns
        -------
        tuple[int, int]
            ``(start, period)`` with ``eval(i + period) == eval(i)`` for all
            ``i >= start``.
        """


def scan_stop(f: NatFunction, n: int) -> int:
    """
    Get the last index needed to see every value `f` takes on ``0, ..., n``.

    Each value first occurs at or before the returned index, so least-index
    searches over ``0, ..., n`` may stop there.

    Parameters
    ----------
    f
        Function to inspect.
    n
        Last index of the range.

    Returns
    -------
    int
        ``min(n, start + period - 1)`` for the cycle of `f`.
    """
    start, period = f.cycle()
    return min(n, start + period - 1)


def _check_naturals(values: Iterable[int], field: str) -> None:
    """
    Check values are naturals representable in 64 bits.

    Parameters
    ----------
    values
        Values to check.
    field
        Name of the field holding `values`, for error messages.
    """
    for value in values:
        if not isinstance(value, int) or value < 0 or value > U64_MAX:
            raise ValueError(f"{field} values must be 64-bit naturals, got {value!r}")


@dataclasses.dataclass(frozen=True)
class Constant:
    """
    Constant tail of a sequence.

    Parameters
    ----------
    value
        Value repeated forever after the prefix.
    """

    value: int = 0

    def __post_init__(self) -> None:
        """Validate tail value."""
        _check_naturals((self.value,), "Constant")


@dataclasses.dataclass(frozen=True)
class Periodic:
    """
    Periodic tail of a sequence.

    Parameters
    ----------
    block
        Nonempty block repeated forever after the prefix.
    """

    block: tuple[int, ...]

    def __post_init__(self) -> None:
        """Validate tail block."""
        object.__setattr__(self, "block", tuple(self.block))
        if not self.block:
            raise ValueError("Periodic block must be nonempty")
        _check_naturals(self.block, "Periodic")


Tail = Constant | Periodic


@dataclasses.dataclass(frozen=True)
class Seq:
    """
    Total function on the natural numbers given by a prefix and a tail.

    Shifting a sequence only moves `offset`, so no tail information is lost.

    Parameters
    ----------
    prefix
        Initial values.
    tail
        Constant or periodic continuation after `prefix`.
    offset
        Number of leading values dropped by shifting. Default is 0.
    """

    prefix: tuple[int, ...] = ()
    tail: Tail = dataclasses.field(default_factory=Constant)
    offset: int = 0

    def __post_init__(self) -> None:
        """Normalise prefix and validate fields."""
        object.__setattr__(self, "prefix", tuple(self.prefix))
        _check_naturals(self.prefix, "prefix")
        if self.offset < 0:
            raise ValueError(f"offset must be non-negative, got {self.offset}")

    @classmethod
    def from_values(cls, values: Iterable[int], tail: int = 0) -> Seq:
        """
        Build a sequence from a prefix and a constant tail.

        Parameters
        ----------
        values
            Prefix values.
        tail
            Constant tail value. Default is 0.

        Returns
        -------
        Seq
            Sequence with the given prefix and ``Constant(tail)``.
        """
        return cls(tuple(values), Constant(tail))

    def eval(self, n: int) -> int:
        """
        Evaluate the sequence at an index.

        Parameters
        ----------
        n
            Index to evaluate at.

        Returns
        -------
        int
            Value at `n`.
        """
        index = self.offset + n
        if index < len(self.prefix):
            return self.prefix[index]
        match self.tail:
            case Constant(value):
                return value
            case Periodic(block):
                return block[(index - len(self.prefix)) % len(block)]

    def shift(self, n: int) -> Seq:
        """
        Get the sequence ``i -> self.eval(n + 1 + i)``.

        Parameters
        ----------
        n
            Offset of the shift.

        Returns
        -------
        Seq
            Reindexed sequence sharing prefix and tail with `self`.
        """
        return dataclasses.replace(self, offset=self.offset + n + 1)

    def cycle(self) -> tuple[int, int]:
        """
        Get where the tail starts, and the length of its block.

        Returns
        -------
        tuple[int, int]
            Index of the first tail value after shifting, and the block length,
            which is 1 for constant tails.
        """
        period = len(self.tail.block) if isinstance(self.tail, Periodic) else 1
        return max(len(self.prefix) - self.offset, 0), period

    def values(self, start: int, stop: int) -> list[int]:
        """
        Evaluate the sequence on a half-open window of indices.

        Parameters
        ----------
        start
            First index.
        stop
            Index after the last one.

        Returns
        -------
        list[int]
            Values at ``start, ..., stop - 1``.
        """
        return [self.eval(index) for index in range(start, stop)]

    def canonical(self) -> Seq:
        """
        Get the equivalent sequence with zero offset.

        Returns
        -------
        Seq
            Sequence denoting the same function with the shift materialised in
            the prefix and, for periodic tails, a rotated block.
        """
        if not self.offset:
            return self
        prefix = self.prefix[self.offset :]
        tail = self.tail
        if isinstance(tail, Periodic):
            rotation = max(self.offset - len(self.prefix), 0) % len(tail.block)
            tail = Periodic(tail.block[rotation:] + tail.block[:rotation])
        return Seq(prefix, tail)

    @property
    def horizon(self) -> int:
        """
        Get an index range sufficient to compare sequences observationally.

        Returns
        -------
        int
            ``2 * (len(prefix) + len(block))``, with a block length of 1 for
            constant tails.
        """
        canonical = self.canonical()
        period = (
            len(canonical.tail.block) if isinstance(canonical.tail, Periodic) else 1
        )
        return 2 * (len(canonical.prefix) + period)

    def same_on(self, other: NatFunction, stop: int | None = None) -> bool:
        """
        Compare with another function on an initial segment of indices.

        Parameters
        ----------
        other
            Function to compare against.
        stop
            Number of indices to compare. Default is `None`, which uses the larger
            horizon of the two sequences.

        Returns
        -------
        bool
            Whether both agree on ``0, ..., stop - 1``.
        """
        if stop is None:
            stop = max(self.horizon, getattr(other, "horizon", 0))
        return all(self.eval(index) == other.eval(index) for index in range(stop))


# ASCII digits and whitespace only
_TOKEN = re.compile(r"\s*(?:(?P<nat>[0-9]+)|(?P<sep>[,;%]))", re.ASCII)
_BLANK = re.compile(r"\s*", re.ASCII)


class _LiteralParser:
    """
    Recursive descent parser for sequence literals.

    Parameters
    ----------
    text
        Literal to parse.
    """

    def __init__(self, text: str) -> None:
        """
        Tokenise a literal.

        Parameters
        ----------
        text
            Literal to parse.
        """
        self.text = text
        self.tokens: list[tuple[str, str, int]] = []
        position = 0
        while position < len(text):
            blank = _BLANK.match(text, position).end()
            if blank == len(text):
                break
            match = _TOKEN.match(text, position)
            if match is None:
                # Point at the offending character, not the whitespace before it
                raise SeqSyntaxError(f"unexpected character {text[blank]!r}", blank)
            group = match.lastgroup
            token = match.group(group)
            kind = "nat" if group == "nat" else token
            self.tokens.append((kind, token, match.start(group)))
            position = match.end()
        self.end = len(text)
        self.index = 0

    def _peek(self) -> tuple[str, str, int] | None:
        """
        Get the next token without consuming it.

        Returns
        -------
        tuple[str, str, int] | None
            Kind, text and position of the next token, or `None` at the end.
        """
        return self.tokens[self.index] if self.index < len(self.tokens) else None

    def _nat(self) -> int:
        """
        Consume a natural number.

        Returns
        -------
        int
            Parsed value.
        """
        token = self._peek()
        if token is None:
            raise SeqSyntaxError("expected natural number", self.end)
        kind, text, position = token
        if kind != "nat":
            raise SeqSyntaxError(
                f"expected natural number, found {text!r}", position
            )
        value = int(text)
        if value > U64_MAX:
            raise LiteralOverflowError("natural number exceeds 2^64 - 1", position)
        self.index += 1
        return value

    def _nat_list(self) -> list[int]:
        """
        Consume a nonempty comma-separated list of natural numbers.

        Returns
        -------
        list[int]
            Parsed values.
        """
        values = [self._nat()]
        while (token := self._peek()) is not None and token[0] == ",":
            self.index += 1
            values.append(self._nat())
        return values

    def parse(self) -> Seq:
        """
        Parse the whole literal.

        Returns
        -------
        Seq
            Sequence denoted by the literal.
        """
        token = self._peek()
        if token is None:
            raise SeqSyntaxError("expected natural number", self.end)

        prefix = self._nat_list() if token[0] == "nat" else []

        tail: Tail = Constant(0)
        token = self._peek()
        if token is not None:
            kind, text, position = token
            if kind == ";":
                self.index += 1
                tail = Constant(self._nat())
            elif kind == "%":
                self.index += 1
                tail = Periodic(tuple(self._nat_list()))
            elif not prefix:
                raise SeqSyntaxError(
                    f"expected natural number, found {text!r}", position
                )

        token = self._peek()
        if token is not None:
            raise SeqSyntaxError(f"unexpected {token[1]!r}", token[2])

        return Seq(tuple(prefix), tail)


def parse_seq(text: str) -> Seq:
    """
    Parse a sequence literal.

    The grammar is ``prefix [";" nat | "%" nat ("," nat)*]`` with ``prefix`` a
    comma-separated list of naturals, empty only when a tail is given. The default
    tail is ``Constant(0)``. Whitespace around tokens is ignored.

    Parameters
    ----------
    text
        Literal to parse, e.g. "1,0;7" or "0%1,2".

    Returns
    -------
    Seq
        Sequence denoted by the literal.

    Raises
    ------
    SeqSyntaxError
        If `text` does not conform to the grammar. The error carries the
        character position.
    LiteralOverflowError
        If a natural number in `text` does not fit in 64 bits.
    """
    return _LiteralParser(text).parse()


def render_seq(seq: Seq) -> str:
    """
    Render the canonical literal of a sequence, with an explicit tail.

    Parameters
    ----------
    seq
        Sequence to render.

    Returns
    -------
    str
        Literal such as "1,0;0", ";0" or "0%1,2".
    """
    canonical = seq.canonical()
    prefix = ",".join(str(value) for value in canonical.prefix)
    match canonical.tail:
        case Constant(value):
            return f"{prefix};{value}"
        case Periodic(block):
            return f"{prefix}%{','.join(str(value) for value in block)}"


def render_csv_cell(seq: Seq) -> str:
    """
    Render a literal for a CSV cell, using "." in place of ",".

    Parameters
    ----------
    seq
        Sequence to render.

    Returns
    -------
    str
        Literal such as "1.0;0".
    """
    return render_seq(seq).replace(",", ".")


def parse_csv_cell(text: str) -> Seq:
    """
    Parse a literal written by :func:`render_csv_cell`.

    Parameters
    ----------
    text
        CSV cell literal, e.g. "1.0;0".

    Returns
    -------
    Seq
        Sequence denoted by the literal.
    """
    return parse_seq(text.replace(".", ","))

"""Brute-force Dickson witnesses, minimal bounds and verified bound reports."""

from __future__ import annotations

from collections.abc import Iterator, Sequence
import dataclasses
from enum import Enum
from typing import Any

from dickson_bounds.core.bounds import (
    DicksonWitness,
    extracted_trace,
    guessed_bound,
    guessed_trace,
    iterate_i,
)
from dickson_bounds.core.measures import phi, three_fn_measures
from dickson_bounds.oracle.get_settings import get_settings
from dickson_bounds.seq.seq import NatFunction, Seq, parse_seq
from dickson_bounds.utils.exceptions import ContractError, InvariantError
from dickson_bounds.utils.utils import U64_MAX


def _witnesses(funcs: Sequence[NatFunction], n: int) -> Iterator[DicksonWitness]:
    """
    Yield, for each ``j <= n`` in order, the least ``i < j`` where all `funcs` increase.

    Values are evaluated lazily, so stopping early never evaluates beyond the
    last witness yielded.

    Parameters
    ----------
    funcs
        Functions to inspect.
    n
        Largest index inspected.

    Yields
    ------
    DicksonWitness
        Witnesses ordered by `j`.
    """
    seen: list[tuple[int, ...]] = []
    for j in range(n + 1):
        current = tuple(func.eval(j) for func in funcs)
        for i, earlier in enumerate(seen):
            if all(old <= new for old, new in zip(earlier, current, strict=True)):
                yield DicksonWitness(i, j)
                break
        seen.append(current)


def holds_d(f: NatFunction, g: NatFunction, n: int) -> DicksonWitness | None:
    """
    Search for ``i < j <= n`` with ``f_i <= f_j`` and ``g_i <= g_j``.

    Parameters
    ----------
    f
        First function.
    g
        Second function.
    n
        Candidate bound.

    Returns
    -------
    DicksonWitness | None
        Witness with least `j`, then least `i`, or `None` if `n` is not a bound.
    """
    return next(_witnesses((f, g), n), None)


def holds_d3(
    f: NatFunction, g: NatFunction, h: NatFunction, n: int
) -> DicksonWitness | None:
    """
    Search for ``i < j <= n`` where `f`, `g` and `h` all weakly increase.

    Parameters
    ----------
    f
        First function.
    g
        Second function.
    h
        Third function.
    n
        Candidate bound.

    Returns
    -------
    DicksonWitness | None
        Witness with least `j`, then least `i`, or `None`.
    """
    return next(_witnesses((f, g, h), n), None)


def oracle_min_bound(f: NatFunction, g: NatFunction) -> int:
    """
    Get the least `n` such that ``holds_d(f, g, n)`` finds a witness.

    Parameters
    ----------
    f
        First function.
    g
        Second function.

    Returns
    -------
    int
        Optimal Dickson bound, at least 1.

    The search stops at the first witness, and the guessed bound is checked
    afterwards.

    Raises
    ------
    InvariantError
        If no witness exists up to the guessed bound.
    """
    witness = holds_d(f, g, U64_MAX)
    cap = guessed_bound(f, g)
    if witness is None or witness.j > cap:
        raise InvariantError(f"No Dickson witness up to the guessed bound {cap}")
    return witness.j


def descent_corollary(f: NatFunction, g: NatFunction, m: int) -> bool:
    """
    Check ``D(I^m(0))`` or ``Φ(I^m(0)) + m <= Φ(0)``.

    Parameters
    ----------
    f
        First function.
    g
        Second function.
    m
        Number of iterations of ``I``.

    Returns
    -------
    bool
        Whether either alternative holds.
    """
    end = iterate_i(f, g, 0, m)
    if holds_d(f, g, end) is not None:
        return True
    return phi(f, g, end) + m <= phi(f, g, 0)


class BoundMethod(Enum):
    """How a reported bound was produced."""

    GUESSED = "guessed"
    EXTRACTED = "extracted"
    ORACLE_MIN = "oracle_min"


@dataclasses.dataclass(frozen=True)
class BoundReport:
    """
    Bound together with the witness certifying it.

    Parameters
    ----------
    method
        How the bound was produced.
    bound
        Dickson bound.
    witness
        Witness with ``j <= bound``, or `None`.
    trace
        Iterates of ``I`` leading to the bound. Empty for ``ORACLE_MIN``.
    """

    method: BoundMethod
    bound: int
    witness: DicksonWitness | None
    trace: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        """Check witness and trace are consistent with the bound."""
        object.__setattr__(self, "trace", tuple(self.trace))
        if self.witness is not None and self.witness.j > self.bound:
            raise ContractError(
                f"Witness {self.witness} lies beyond the bound {self.bound}"
            )
        if any(a >= b for a, b in zip(self.trace, self.trace[1:])):
            raise ContractError(f"Trace {self.trace} is not strictly increasing")


def bound_report(f: NatFunction, g: NatFunction, method: BoundMethod) -> BoundReport:
    """
    Compute a bound and certify it with a witness.

    Parameters
    ----------
    f
        First function.
    g
        Second function.
    method
        Method to compute the bound with. The extracted bound starts at 0.

    Returns
    -------
    BoundReport
        Bound, witness and trace.

    Raises
    ------
    InvariantError
        If no witness exists below the bound.
    """
    match method:
        case BoundMethod.GUESSED:
            trace = guessed_trace(f, g)
            bound = trace[-1]
        case BoundMethod.EXTRACTED:
            trace = extracted_trace(f, g, 0)
            bound = trace[-1]
        case BoundMethod.ORACLE_MIN:
            trace = []
            bound = oracle_min_bound(f, g)

    witness = holds_d(f, g, bound)
    if witness is None:
        raise InvariantError(f"{method.value} bound {bound} has no Dickson witness")
    return BoundReport(method=method, bound=bound, witness=witness, trace=trace)


@dataclasses.dataclass(frozen=True)
class Clause:
    """
    Checked statement about the three-function counterexample.

    Parameters
    ----------
    name
        Name of the clause.
    expected
        Expected value.
    actual
        Computed value.
    """

    name: str
    expected: Any
    actual: Any

    @property
    def passed(self) -> bool:
        """
        Whether the computed value matches the expected one.

        Returns
        -------
        bool
            Whether `actual` equals `expected`.
        """
        return self.expected == self.actual


@dataclasses.dataclass(frozen=True)
class CounterexampleReport:
    """
    Result of checking the three-function counterexample.

    Parameters
    ----------
    n
        Index the descent step was checked at.
    clauses
        Checked clauses, in order.
    """

    n: int
    clauses: tuple[Clause, ...]

    @property
    def failures(self) -> tuple[Clause, ...]:
        """
        Get the clauses that do not hold.

        Returns
        -------
        tuple[Clause, ...]
            Failed clauses, in order.
        """
        return tuple(clause for clause in self.clauses if not clause.passed)

    @property
    def passed(self) -> bool:
        """
        Whether every clause holds.

        Returns
        -------
        bool
            Whether there are no failures.
        """
        return not self.failures


def verify_counterexample3(
    f: Seq | None = None,
    g: Seq | None = None,
    h: Seq | None = None,
    n: int | None = None,
    strict: bool = True,
) -> CounterexampleReport:
    """
    Check that the three-function descent step fails for the given triple.

    At `n`, the clauses are ``phi3``, ``psi3`` and ``i3`` matching the published
    values, ``no_d3_witness`` (no witness up to ``i3``) and ``no_phi3_decrease``
    (``phi3`` at ``i3`` equals ``phi3`` at `n`).

    Parameters
    ----------
    f
        First function. Default is `None`, which uses the configured triple.
    g
        Second function. Default is `None`, which uses the configured triple.
    h
        Third function. Default is `None`, which uses the configured triple.
    n
        Index to check at. Default is `None`, which uses the configured index.
    strict
        Whether to raise on the first failed clause. Default is `True`.

    Returns
    -------
    CounterexampleReport
        Checked clauses.

    Raises
    ------
    ContractError
        If `strict` and a clause fails. The message names the clause.
    """
    settings = get_settings("counterexample3")
    f = f if f is not None else parse_seq(settings["f"])
    g = g if g is not None else parse_seq(settings["g"])
    h = h if h is not None else parse_seq(settings["h"])
    n = n if n is not None else settings["n"]
    expected = settings["expected"]

    measures = three_fn_measures(f, g, h, n)
    clauses = (
        Clause("phi3", expected["phi3"], measures.phi3),
        Clause("psi3", expected["psi3"], measures.psi3),
        Clause("i3", expected["i3"], measures.i3),
        Clause("no_d3_witness", None, holds_d3(f, g, h, measures.i3)),
        Clause(
            "no_phi3_decrease",
            measures.phi3,
            three_fn_measures(f, g, h, measures.i3).phi3,
        ),
    )
    report = CounterexampleReport(n=n, clauses=clauses)

    if strict and report.failures:
        clause = report.failures[0]
        raise ContractError(
            f"Counterexample clause '{clause.name}' failed: expected "
            f"{clause.expected}, got {clause.actual}"
        )
    return report

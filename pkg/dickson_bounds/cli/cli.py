"""Set up commandline interface."""

from __future__ import annotations

from collections.abc import Iterator
from contextlib import contextmanager
import json
import logging
from pathlib import Path
from typing import Annotated, Any, Literal

from typer import BadParameter, Exit, Option, Typer, echo

from dickson_bounds import __version__
from dickson_bounds.core.bounds import DicksonWitness
from dickson_bounds.oracle.oracle import (
    BoundMethod,
    BoundReport,
    bound_report,
    holds_d,
    verify_counterexample3,
)
from dickson_bounds.seq.seq import Seq, parse_seq, render_seq
from dickson_bounds.utils.exceptions import (
    ArithmeticOverflowError,
    ContractError,
    InvariantError,
    SeqSyntaxError,
)


def parse_literal(text: str) -> Seq:
    """
    Parse a sequence literal given on the command line.

    Parameters
    ----------
    text
        Sequence literal.

    Returns
    -------
    Seq
        Parsed sequence.

    Raises
    ------
    BadParameter
        If `text` is not a valid literal, reported as a usage error.
    """
    if isinstance(text, Seq):
        return text
    try:
        return parse_seq(text)
    except SeqSyntaxError as err:
        raise BadParameter(f"{text!r}: {err}") from err


@contextmanager
def report_errors() -> Iterator[None]:
    """
    Report computation errors on stderr and exit with status 1.

    Yields
    ------
    None
        Control to the wrapped command.
    """
    try:
        yield
    except (ArithmeticOverflowError, ContractError, InvariantError) as err:
        echo(f"Error: {err}", err=True)
        raise Exit(1) from err


def witness_pair(witness: DicksonWitness | None) -> list[int] | None:
    """
    Convert a witness to a JSON-friendly pair.

    Parameters
    ----------
    witness
        Witness to convert.

    Returns
    -------
    list[int] | None
        ``[i, j]``, or `None` if there is no witness.
    """
    return None if witness is None else [witness.i, witness.j]


def describe_witness(witness: DicksonWitness | None) -> str:
    """
    Describe a witness for human-readable output.

    Parameters
    ----------
    witness
        Witness to describe.

    Returns
    -------
    str
        Description such as "(1, 2)", or "none".
    """
    return "none" if witness is None else f"({witness.i}, {witness.j})"


def emit(facts: dict[str, Any], lines: list[str], json_output: bool) -> None:
    """
    Print command results.

    Parameters
    ----------
    facts
        Results as a flat dictionary, printed as JSON.
    lines
        Results as human-readable lines.
    json_output
        Whether to print `facts` as JSON rather than `lines`.
    """
    if json_output:
        print(json.dumps(facts))
    else:
        print("\n".join(lines))


SeqOption = Annotated[
    Seq,
    Option(
        parser=parse_literal,
        metavar="LITERAL",
        help='Sequence literal, e.g. "1,0;0" or "0%1,2".',
    ),
]
JsonOption = Annotated[
    bool, Option("--json", help="Print results as a single JSON object.")
]


app = Typer(
    name="dickson-bounds",
    no_args_is_help=True,
    epilog="Try 'dickson-bounds COMMAND --help' for subcommand options",
)


@app.command(name="bound", help="Compute certified Dickson bounds")
def bound(
    f: SeqOption,
    g: SeqOption,
    method: Annotated[
        Literal["guessed", "extracted", "both"],
        Option(help="Bound to compute.", case_sensitive=False),
    ] = "both",
    json_output: JsonOption = False,
) -> None:
    """
    Compute guessed and/or extracted bounds, each with a verified witness.

    Parameters
    ----------
    f
        First sequence.
    g
        Second sequence.
    method
        Bound to compute. Default is "both".
    json_output
        Whether to print results as JSON. Default is `False`.
    """
    methods = {
        "guessed": [BoundMethod.GUESSED],
        "extracted": [BoundMethod.EXTRACTED],
        "both": [BoundMethod.GUESSED, BoundMethod.EXTRACTED],
    }[method.lower()]

    with report_errors():
        reports: list[BoundReport] = [bound_report(f, g, item) for item in methods]

    facts: dict[str, Any] = {"command": "bound", "f": render_seq(f), "g": render_seq(g)}
    lines = []
    for report in reports:
        name = report.method.value
        facts[name] = report.bound
        facts[f"{name}_trace"] = list(report.trace)
        facts[f"{name}_witness"] = witness_pair(report.witness)
        lines.extend(
            [
                f"{name} bound: {report.bound}",
                f"{name} trace: {' -> '.join(str(step) for step in report.trace)}",
                f"{name} witness: {describe_witness(report.witness)}",
            ]
        )
    emit(facts, lines, json_output)


@app.command(name="witness", help="Search for a Dickson witness below a bound")
def witness(
    f: SeqOption,
    g: SeqOption,
    n: Annotated[int, Option(min=0, help="Candidate bound.")],
    json_output: JsonOption = False,
) -> None:
    """
    Search for ``i < j <= n`` where both sequences weakly increase.

    Parameters
    ----------
    f
        First sequence.
    g
        Second sequence.
    n
        Candidate bound.
    json_output
        Whether to print results as JSON. Default is `False`.
    """
    with report_errors():
        found = holds_d(f, g, n)

    emit(
        {
            "command": "witness",
            "f": render_seq(f),
            "g": render_seq(g),
            "n": n,
            "witness": witness_pair(found),
        },
        [f"witness up to {n}: {describe_witness(found)}"],
        json_output,
    )


@app.command(name="oracle", help="Compute the optimal Dickson bound by brute force")
def oracle(
    f: SeqOption,
    g: SeqOption,
    json_output: JsonOption = False,
) -> None:
    """
    Compute the least bound with a Dickson witness.

    Parameters
    ----------
    f
        First sequence.
    g
        Second sequence.
    json_output
        Whether to print results as JSON. Default is `False`.
    """
    with report_errors():
        report = bound_report(f, g, BoundMethod.ORACLE_MIN)

    emit(
        {
            "command": "oracle",
            "f": render_seq(f),
            "g": render_seq(g),
            "oracle_min": report.bound,
            "witness": witness_pair(report.witness),
        },
        [
            f"oracle_min bound: {report.bound}",
            f"oracle_min witness: {describe_witness(report.witness)}",
        ],
        json_output,
    )


@app.command(name="sweep", help="Compare bounds over a family of sequences")
def sweep(
    max_prefix: Annotated[int, Option(help="Longest prefix in the family.")],
    max_value: Annotated[int, Option(help="Largest value in a prefix.")],
    out: Annotated[Path, Option(help="CSV file to write.")],
    workers: Annotated[
        int | None,
        Option(help="Number of worker processes. Default is from oracle.yml."),
    ] = None,
    progress: Annotated[bool, Option(help="Whether to show a progress bar.")] = False,
    verbose: Annotated[bool, Option(help="Whether to log sweep progress.")] = False,
    json_output: JsonOption = False,
) -> None:
    """
    Compute optimal, extracted and guessed bounds for every pair in a family.

    Parameters
    ----------
    max_prefix
        Longest prefix in the family.
    max_value
        Largest value in a prefix.
    out
        CSV file to write.
    workers
        Number of worker processes. Default is `None`, which uses oracle.yml.
    progress
        Whether to show a progress bar. Default is `False`.
    verbose
        Whether to log sweep progress. Default is `False`.
    json_output
        Whether to print results as JSON. Default is `False`.
    """
    from dickson_bounds.oracle.sweep import sweep as run_sweep
    from dickson_bounds.oracle.sweep import write_sweep_csv

    if verbose:
        logging.basicConfig(
            level=logging.INFO, format="%(asctime)s %(levelname)s %(message)s"
        )

    with report_errors():
        rows = run_sweep(max_prefix, max_value, workers=workers, progress=progress)
    path = write_sweep_csv(rows, out)

    emit(
        {"command": "sweep", "rows": len(rows), "out": str(path)},
        [f"Wrote {len(rows)} rows to {path}"],
        json_output,
    )


@app.command(
    name="counterexample3",
    help="Check the three-function counterexample to the descent step",
)
def counterexample3(json_output: JsonOption = False) -> None:
    """
    Check the five clauses of the three-function counterexample.

    Parameters
    ----------
    json_output
        Whether to print results as JSON. Default is `False`.
    """
    report = verify_counterexample3(strict=False)
    actual = {clause.name: clause.actual for clause in report.clauses}

    emit(
        {
            "command": "counterexample3",
            "n": report.n,
            "phi3": actual["phi3"],
            "psi3": actual["psi3"],
            "i3": actual["i3"],
            "d3_witness": witness_pair(actual["no_d3_witness"]),
            "phi3_at_i3": actual["no_phi3_decrease"],
            "passed": report.passed,
        },
        [
            f"{clause.name}: {'pass' if clause.passed else 'FAIL'} "
            f"(expected {clause.expected}, got {clause.actual})"
            for clause in report.clauses
        ],
        json_output,
    )
    if not report.passed:
        echo(
            f"Error: failed clauses: {', '.join(c.name for c in report.failures)}",
            err=True,
        )
        raise Exit(1)


@app.callback(invoke_without_command=True, help="")
def print_version(
    version: Annotated[
        bool, Option("--version", help="Print dickson-bounds version and exit.")
    ] = None,
) -> None:
    """
    Print current dickson-bounds version and exit.

    Parameters
    ----------
    version
        Whether to print the current dickson-bounds version.
    """
    if version:
        print(f"dickson-bounds version: {__version__}")
        raise Exit()


def run(argv: list[str] | None = None) -> int:
    """
    Run the command-line interface and return its exit status.

    Parameters
    ----------
    argv
        Arguments, excluding the program name. Default is `None`, which reads
        ``sys.argv``.

    Returns
    -------
    int
        0 on success, 1 on computation errors, 2 on usage errors.
    """
    try:
        app(args=argv, prog_name="dickson-bounds")
    except SystemExit as exit_:
        # Standalone mode reports every outcome, usage errors included, via sys.exit
        return exit_.code if isinstance(exit_.code, int) else 0
    return 0

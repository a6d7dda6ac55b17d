"""Compare bounds against the oracle over finite families of sequences."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
import dataclasses
from itertools import product
import logging
from pathlib import Path

import pandas as pd
from tqdm import tqdm

from dickson_bounds.core.bounds import extracted_bound, guessed_bound
from dickson_bounds.oracle.get_settings import get_settings
from dickson_bounds.oracle.oracle import oracle_min_bound
from dickson_bounds.seq.seq import Seq, parse_seq, render_csv_cell, render_seq
from dickson_bounds.utils.exceptions import ContractError, InvariantError

SWEEP_COLUMNS = ["f", "g", "oracle_min", "extracted", "guessed"]


@dataclasses.dataclass(frozen=True)
class SweepRow:
    """
    Bounds for one pair of sequences.

    No order between `extracted` and `guessed` is asserted.

    Parameters
    ----------
    f_literal
        Literal of the first sequence.
    g_literal
        Literal of the second sequence.
    oracle_min
        Optimal bound.
    extracted
        Extracted bound at 0.
    guessed
        Guessed bound.
    """

    f_literal: str
    g_literal: str
    oracle_min: int
    extracted: int
    guessed: int

    def __post_init__(self) -> None:
        """Check the optimal bound is below both computed bounds."""
        if self.oracle_min > min(self.extracted, self.guessed):
            raise InvariantError(
                f"Optimal bound {self.oracle_min} exceeds a computed bound for "
                f"f={self.f_literal}, g={self.g_literal}"
            )


def enumerate_family(max_prefix: int, max_value: int) -> list[Seq]:
    """
    Get all sequences with a short prefix of small values and a zero tail.

    Parameters
    ----------
    max_prefix
        Longest prefix, at least 1.
    max_value
        Largest value in a prefix.

    Returns
    -------
    list[Seq]
        Sequences with prefix length ``1, ..., max_prefix``, values
        ``0, ..., max_value`` and ``Constant(0)`` tail, sorted lexicographically by
        prefix.

    Raises
    ------
    ContractError
        If the family exceeds the configured guard rails.
    """
    limits = get_settings("sweep")
    if not 1 <= max_prefix <= limits["max_prefix"]:
        raise ContractError(
            f"max_prefix must be between 1 and {limits['max_prefix']}, "
            f"got {max_prefix}"
        )
    if not 0 <= max_value <= limits["max_value"]:
        raise ContractError(
            f"max_value must be between 0 and {limits['max_value']}, got {max_value}"
        )

    prefixes = sorted(
        values
        for length in range(1, max_prefix + 1)
        for values in product(range(max_value + 1), repeat=length)
    )
    return [Seq.from_values(values) for values in prefixes]


def sweep_row(pair: tuple[Seq, Seq]) -> SweepRow:
    """
    Compute all bounds for a pair of sequences.

    Parameters
    ----------
    pair
        First and second sequence.

    Returns
    -------
    SweepRow
        Optimal, extracted and guessed bounds.
    """
    f, g = pair
    return SweepRow(
        f_literal=render_seq(f),
        g_literal=render_seq(g),
        oracle_min=oracle_min_bound(f, g),
        extracted=extracted_bound(f, g, 0),
        guessed=guessed_bound(f, g),
    )


def sweep(
    max_prefix: int,
    max_value: int,
    workers: int | None = None,
    progress: bool = False,
) -> list[SweepRow]:
    """
    Compute bounds for every ordered pair of sequences in a family.

    Parameters
    ----------
    max_prefix
        Longest prefix in the family.
    max_value
        Largest value in a prefix.
    workers
        Number of worker processes. Default is `None`, which uses the configured
        number.
    progress
        Whether to show a progress bar. Default is `False`.

    Returns
    -------
    list[SweepRow]
        One row per pair, ordered by first sequence, then second, as in
        :func:`enumerate_family`.
    """
    family = enumerate_family(max_prefix, max_value)
    total = len(family) ** 2
    workers = workers if workers is not None else get_settings("sweep")["workers"]
    logging.info(f"Sweeping {total} pairs of {len(family)} sequences")

    pairs = product(family, repeat=2)
    if workers > 1:
        # map preserves input order
        with ProcessPoolExecutor(max_workers=workers) as executor:
            results = executor.map(sweep_row, pairs, chunksize=256)
            rows = list(tqdm(results, total=total, desc="sweep", disable=not progress))
    else:
        rows = [
            sweep_row(pair)
            for pair in tqdm(pairs, total=total, desc="sweep", disable=not progress)
        ]

    logging.info(f"Computed {len(rows)} sweep rows")
    return rows


def sweep_frame(rows: list[SweepRow]) -> pd.DataFrame:
    """
    Tabulate sweep rows with CSV-safe literals.

    Parameters
    ----------
    rows
        Rows to tabulate.

    Returns
    -------
    pd.DataFrame
        Columns ``f, g, oracle_min, extracted, guessed``, with "." replacing ","
        inside literals.
    """
    return pd.DataFrame(
        [
            {
                "f": render_csv_cell(parse_seq(row.f_literal)),
                "g": render_csv_cell(parse_seq(row.g_literal)),
                "oracle_min": row.oracle_min,
                "extracted": row.extracted,
                "guessed": row.guessed,
            }
            for row in rows
        ],
        columns=SWEEP_COLUMNS,
    )


def write_sweep_csv(rows: list[SweepRow], path: Path | str) -> Path:
    """
    Write sweep rows as CSV.

    Parameters
    ----------
    rows
        Rows to write.
    path
        File to write to. Parent directories are created.

    Returns
    -------
    Path
        Path written to.
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    sweep_frame(rows).to_csv(path, index=False)
    return path


def summarize_sweep(frame: pd.DataFrame) -> dict[str, float]:
    """
    Summarise how far computed bounds are from the optimal bound.

    Parameters
    ----------
    frame
        Table from :func:`sweep_frame`.

    Returns
    -------
    dict[str, float]
        Mean and maximum of ``extracted / oracle_min`` and ``guessed / oracle_min``,
        and the fraction of rows where the extracted bound is optimal.
    """
    extracted_ratio = frame["extracted"] / frame["oracle_min"]
    guessed_ratio = frame["guessed"] / frame["oracle_min"]
    return {
        "mean_extracted_ratio": float(extracted_ratio.mean()),
        "max_extracted_ratio": float(extracted_ratio.max()),
        "mean_guessed_ratio": float(guessed_ratio.mean()),
        "max_guessed_ratio": float(guessed_ratio.max()),
        "extracted_optimal_fraction": float(
            (frame["extracted"] == frame["oracle_min"]).mean()
        ),
    }

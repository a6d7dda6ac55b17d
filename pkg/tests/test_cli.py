"""Test the command-line interface."""

from __future__ import annotations

import json
from pathlib import Path

import pytest
from typer.testing import CliRunner

from dickson_bounds import __version__
from dickson_bounds.cli.cli import app, run

runner = CliRunner()


@pytest.mark.parametrize(
    "args, expected",
    [
        (
            ["bound", "--f", "1,0;0", "--g", ";0", "--method", "both", "--json"],
            '{"command": "bound", "f": "1,0;0", "g": ";0", "guessed": 4, '
            '"guessed_trace": [0, 2, 4], "guessed_witness": [1, 2], "extracted": 2, '
            '"extracted_trace": [0, 2], "extracted_witness": [1, 2]}',
        ),
        (
            ["oracle", "--f", "1,0;0", "--g", ";0", "--json"],
            '{"command": "oracle", "f": "1,0;0", "g": ";0", "oracle_min": 2, '
            '"witness": [1, 2]}',
        ),
        (
            ["witness", "--f", ";0", "--g", ";0", "--n", "1", "--json"],
            '{"command": "witness", "f": ";0", "g": ";0", "n": 1, "witness": [0, 1]}',
        ),
    ],
)
def test_golden_json(args: list[str], expected: str):
    """Test JSON output matches exactly."""
    result = runner.invoke(app, args)
    assert result.exit_code == 0
    assert result.stdout == expected + "\n"


def test_run_golden(capsys):
    """Test run returns the exit status and prints the same JSON."""
    assert run(["witness", "--f", ";0", "--g", ";0", "--n", "1", "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["witness"] == [0, 1]


def test_bound_text():
    """Test human-readable bound output."""
    result = runner.invoke(app, ["bound", "--f", "1,0;0", "--g", ";0"])
    assert result.exit_code == 0
    assert result.stdout.splitlines() == [
        "guessed bound: 4",
        "guessed trace: 0 -> 2 -> 4",
        "guessed witness: (1, 2)",
        "extracted bound: 2",
        "extracted trace: 0 -> 2",
        "extracted witness: (1, 2)",
    ]


def test_bound_single_method():
    """Test only the requested bound is reported."""
    result = runner.invoke(
        app,
        ["bound", "--f", "0,1;0", "--g", "1,0;0", "--method", "extracted", "--json"],
    )
    assert result.exit_code == 0
    assert json.loads(result.stdout) == {
        "command": "bound",
        "f": "0,1;0",
        "g": "1,0;0",
        "extracted": 4,
        "extracted_trace": [0, 2, 4],
        "extracted_witness": [2, 3],
    }


def test_periodic_literal():
    """Test periodic literals are parsed and rendered."""
    result = runner.invoke(app, ["oracle", "--f", "0%1,2", "--g", " ; 0", "--json"])
    assert result.exit_code == 0
    assert json.loads(result.stdout) == {
        "command": "oracle",
        "f": "0%1,2",
        "g": ";0",
        "oracle_min": 1,
        "witness": [0, 1],
    }


def test_witness_none():
    """Test a bound without a witness is reported as none."""
    result = runner.invoke(app, ["witness", "--f", "1,0;0", "--g", ";0", "--n", "1"])
    assert result.exit_code == 0
    assert result.stdout == "witness up to 1: none\n"


@pytest.mark.parametrize(
    "args",
    [
        ["bound", "--f", "1,,0", "--g", ";0"],
        ["bound", "--f", ";18446744073709551616", "--g", ";0"],
        ["bound", "--f", "1,0;0"],
        ["witness", "--f", ";0", "--g", ";0", "--n", "-1"],
        ["bound", "--f", ";0", "--g", ";0", "--method", "fastest"],
    ],
)
def test_usage_errors(args: list[str]):
    """Test invalid literals and options exit with status 2."""
    assert runner.invoke(app, args).exit_code == 2


def flatten(text: str) -> str:
    """Collapse panel borders and line wrapping in error output."""
    return " ".join(text.replace("│", " ").split())


def test_syntax_error_position(capsys):
    """Test literal errors report the character position."""
    assert run(["bound", "--f", "1,,0", "--g", ";0"]) == 2
    assert "at position 2" in flatten(capsys.readouterr().err)


@pytest.mark.parametrize(
    "args",
    [
        ["bound", "--f", "1,0;0"],
        ["witness", "--f", "1,x", "--g", ";0", "--n", "3"],
        ["bound", "--f", ";0", "--g", ";0", "--method", "fastest"],
        ["no-such-command"],
    ],
)
def test_run_usage_errors(args: list[str], capsys):
    """Test run returns status 2 for usage errors instead of raising."""
    assert run(args) == 2
    assert capsys.readouterr().err


def test_run_success():
    """Test run returns status 0 after a command completes."""
    assert run(["witness", "--f", ";0", "--g", ";0", "--n", "1"]) == 0


def test_overflow(capsys):
    """Test computational overflow exits with status 1."""
    assert run(["bound", "--f", ";4294967296", "--g", ";0"]) == 1
    assert "exceeds 64-bit range" in capsys.readouterr().err


def test_overflow_guessed(capsys):
    """Test a large constant overflows the guessed bound without long scans."""
    args = ["bound", "--f", ";2147483648", "--g", ";0", "--method", "guessed"]
    assert run(args) == 1
    assert "exceeds 64-bit range" in capsys.readouterr().err


def test_oracle_large_constant():
    """Test the optimal bound of a large constant is found at the first index."""
    result = runner.invoke(app, ["oracle", "--f", ";1000", "--g", ";0", "--json"])
    assert result.exit_code == 0
    assert json.loads(result.stdout)["oracle_min"] == 1


def test_sweep(tmp_path: Path):
    """Test sweep writes a CSV and reports the row count."""
    out = tmp_path / "sweep.csv"
    result = runner.invoke(
        app,
        ["sweep", "--max-prefix", "2", "--max-value", "1", "--out", str(out), "--json"],
    )
    assert result.exit_code == 0
    assert json.loads(result.stdout) == {
        "command": "sweep",
        "rows": 36,
        "out": str(out),
    }
    assert len(out.read_text().splitlines()) == 37


def test_sweep_text(tmp_path: Path):
    """Test human-readable sweep output."""
    out = tmp_path / "sweep.csv"
    result = runner.invoke(
        app, ["sweep", "--max-prefix", "1", "--max-value", "1", "--out", str(out)]
    )
    assert result.exit_code == 0
    assert result.stdout == f"Wrote 4 rows to {out}\n"


def test_sweep_guard_rails(tmp_path: Path, capsys):
    """Test families beyond the guard rails exit with status 1."""
    out = tmp_path / "sweep.csv"
    args = ["sweep", "--max-prefix", "6", "--max-value", "1", "--out", str(out)]
    assert run(args) == 1
    assert "max_prefix must be between 1 and 5" in capsys.readouterr().err
    assert not out.exists()


def test_counterexample3():
    """Test the counterexample check passes with JSON output."""
    result = runner.invoke(app, ["counterexample3", "--json"])
    assert result.exit_code == 0
    assert result.stdout == (
        '{"command": "counterexample3", "n": 2, "phi3": 0, "psi3": 1, "i3": 4, '
        '"d3_witness": null, "phi3_at_i3": 0, "passed": true}\n'
    )


def test_counterexample3_text():
    """Test the counterexample check reports each clause."""
    result = runner.invoke(app, ["counterexample3"])
    assert result.exit_code == 0
    assert result.stdout.splitlines() == [
        "phi3: pass (expected 0, got 0)",
        "psi3: pass (expected 1, got 1)",
        "i3: pass (expected 4, got 4)",
        "no_d3_witness: pass (expected None, got None)",
        "no_phi3_decrease: pass (expected 0, got 0)",
    ]


def test_version():
    """Test the version is printed."""
    result = runner.invoke(app, ["--version"])
    assert result.exit_code == 0
    assert result.stdout == f"dickson-bounds version: {__version__}\n"

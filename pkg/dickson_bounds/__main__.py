"""Run the command-line interface as ``python -m dickson_bounds``."""

from __future__ import annotations

from dickson_bounds.cli.cli import run

raise SystemExit(run())

"""Brute-force ground truth for Dickson bounds."""

from __future__ import annotations

from pathlib import Path

ORACLE_ROOT = Path(__file__).parent

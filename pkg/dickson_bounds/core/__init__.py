"""Pigeonhole principles, descent measures and bounds for Dickson's lemma."""

from __future__ import annotations

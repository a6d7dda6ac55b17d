"""Certified bounds for the two-function case of Dickson's lemma."""

from __future__ import annotations

from importlib.metadata import version

__version__ = version("dickson-bounds")

"""Finite representations of number-theoretic functions."""

from __future__ import annotations

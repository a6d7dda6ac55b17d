"""Get oracle settings."""

from __future__ import annotations

from copy import deepcopy
from functools import lru_cache
from typing import Any

import yaml

from dickson_bounds.oracle import ORACLE_ROOT

SETTINGS_PATH = ORACLE_ROOT / "oracle.yml"


@lru_cache(maxsize=1)
def _load_settings_yaml() -> dict[str, Any]:
    """
    Load and cache oracle.yml.

    Returns
    -------
    dict[str, Any]
        Parsed oracle.yml settings.
    """
    with open(SETTINGS_PATH, encoding="utf8") as file:
        return yaml.safe_load(file) or {}


def get_settings(section: str) -> dict[str, Any]:
    """
    Get a section of the oracle settings.

    Parameters
    ----------
    section
        Top-level key in oracle.yml, e.g. "sweep".

    Returns
    -------
    dict[str, Any]
        Copy of the settings in `section`, safe to modify.
    """
    settings = _load_settings_yaml()
    if section not in settings:
        raise KeyError(f"Section '{section}' not found in {SETTINGS_PATH}")
    return deepcopy(settings[section])

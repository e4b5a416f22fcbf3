"""Capacity caps, overridable through environment variables.

``CIRCCHI_ORACLE_MAX_N``
    largest order accepted by the exhaustive subset sweep (default 26).
``CIRCCHI_SEARCH_MAX_N``
    largest order accepted by class enumeration and the zero search (default 40).
``CIRCCHI_MEMO_BYTES``
    approximate memory budget of the branch-and-factor memo table
    (default 512 MiB).
``CIRCCHI_EXHAUSTIVE_HALF``
    verification sweeps run over all connection sets while n // 2 stays at
    or below this value, and over a seeded sample above it (default 14).
"""

from __future__ import annotations

import os

MAX_ORDER = 64


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"environment variable {name}={raw!r} is not an integer") from None


def oracle_max_n() -> int:
    return _env_int("CIRCCHI_ORACLE_MAX_N", 26)


def search_max_n() -> int:
    return _env_int("CIRCCHI_SEARCH_MAX_N", 40)


def memo_bytes() -> int:
    return _env_int("CIRCCHI_MEMO_BYTES", 512 * 1024 * 1024)


def exhaustive_half() -> int:
    return _env_int("CIRCCHI_EXHAUSTIVE_HALF", 14)

# SPDX-License-Identifier: MIT
"""Shared utilities and constants for the cutcolor package.

Design goals
------------
- No imports from other cutcolor modules (avoid cycles).
- Structured, minimal logging; DEBUG when CUTCOLOR_DEBUG is set.
- Reproducible randomness: every random draw goes through a numpy Generator
  built from an explicit seed.

Public API
----------
- get_logger(name) -> logging.Logger ("cutcolor.<name>")
- _env_bool(name, default=False) -> bool
- _env_int(name, default) -> int
- ORACLE_BUDGET, LAYOUT_BUDGET, TABLE_BUDGET (+ current_* readers)
- make_rng(seed) -> numpy.random.Generator
- spawn_seeds(seed, count) -> list[numpy.random.SeedSequence]
- _short(obj, maxlen=120) -> str
"""
from __future__ import annotations

import logging
import os
from typing import Any, Dict, List

import numpy as np

__all__ = [
    "get_logger",
    "_env_bool",
    "_env_int",
    "ORACLE_BUDGET",
    "LAYOUT_BUDGET",
    "TABLE_BUDGET",
    "current_oracle_budget",
    "current_layout_budget",
    "current_table_budget",
    "make_rng",
    "spawn_seeds",
    "_short",
]

_TRUTHY = {"1", "true", "yes", "on"}
_configured: Dict[str, bool] = {}


# ---------------------------------------------------------------------------
# Logger bootstrap (opt-in verbose logging via CUTCOLOR_DEBUG)
# ---------------------------------------------------------------------------
def get_logger(name: str) -> logging.Logger:
    """Return the ``cutcolor.<name>`` logger, attaching a handler if debugging.

    Handlers are only forced when CUTCOLOR_DEBUG is on, so host applications
    keep control of logging otherwise.
    """
    log = logging.getLogger(f"cutcolor.{name}")
    if _configured.get(name):
        return log
    _configured[name] = True
    dbg = (os.getenv("CUTCOLOR_DEBUG") or "").strip().lower()
    if dbg in _TRUTHY:
        if not log.handlers:
            handler = logging.StreamHandler()
            handler.setFormatter(
                logging.Formatter(f"[cutcolor][{name}] %(levelname)s: %(message)s")
            )
            log.addHandler(handler)
        log.setLevel(logging.DEBUG)
    return log


logger = get_logger("util")


# ---------------------------------------------------------------------------
# Env helpers & constants
# ---------------------------------------------------------------------------


def _env_bool(name: str, default: bool = False) -> bool:
    """Parse a boolean from an environment variable with safe defaults."""
    v = (os.getenv(name) or "").strip().lower()
    if not v:
        return default
    return v in _TRUTHY


def _env_int(name: str, default: int) -> int:
    """Parse an int from an environment variable with a fallback on errors.

    Accepts plain integers and powers written as ``2**24``.
    """
    raw = (os.getenv(name) or "").strip()
    if not raw:
        return default
    try:
        if "**" in raw:
            base, exp = raw.split("**", 1)
            return int(base) ** int(exp)
        return int(raw)
    except ValueError:
        logger.debug("env: ignoring unparsable %s=%r", name, raw)
        return default


# Enumeration / search tunables (override via env when needed)
ORACLE_BUDGET: int = max(1, _env_int("CUTCOLOR_ORACLE_BUDGET", 2**24))
LAYOUT_BUDGET: int = max(1, _env_int("CUTCOLOR_LAYOUT_BUDGET", 2_000_000))
TABLE_BUDGET: int = max(1, _env_int("CUTCOLOR_TABLE_BUDGET", 2**26))


def current_oracle_budget() -> int:
    """Budget as seen right now (env may have been loaded after import)."""
    return max(1, _env_int("CUTCOLOR_ORACLE_BUDGET", ORACLE_BUDGET))


def current_layout_budget() -> int:
    return max(1, _env_int("CUTCOLOR_LAYOUT_BUDGET", LAYOUT_BUDGET))


def current_table_budget() -> int:
    """Cell limit for one dense DP table."""
    return max(1, _env_int("CUTCOLOR_TABLE_BUDGET", TABLE_BUDGET))


# ---------------------------------------------------------------------------
# Seeded randomness
# ---------------------------------------------------------------------------


def make_rng(seed: int | np.random.SeedSequence) -> np.random.Generator:
    """PCG64 generator for *seed*; identical seeds give identical streams."""
    return np.random.default_rng(seed)


def spawn_seeds(seed: int, count: int) -> List[np.random.SeedSequence]:
    """Independent child seed sequences, one per trial or instance.

    Child *t* depends only on (seed, t), so trial t is reproducible on its own
    and does not depend on how many trials run.
    """
    root = np.random.SeedSequence(int(seed))
    return root.spawn(int(count))


# ---------------------------------------------------------------------------
# Small utilities
# ---------------------------------------------------------------------------


def _short(obj: Any, maxlen: int = 120) -> str:
    """Truncate a repr for compact, readable logs."""
    s = str(obj)
    if len(s) <= maxlen:
        return s
    return "…" + s[-(maxlen - 1) :]

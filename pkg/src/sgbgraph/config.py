"""Runtime limits read from the environment."""

from __future__ import annotations

import os
import warnings

DEFAULT_MAX_ORDER = 512
# Largest order for which a multiplication table is materialized.
TABLE_LIMIT = 4096


def max_order() -> int:
    """Order cap for full B(G) construction; ``SGB_MAX_ORDER`` overrides it."""
    raw = os.environ.get("SGB_MAX_ORDER")
    if not raw:
        return DEFAULT_MAX_ORDER
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"SGB_MAX_ORDER must be an integer, got {raw!r}") from None
    if cap < 1:
        raise ValueError("SGB_MAX_ORDER must be positive")
    if cap > TABLE_LIMIT:
        raise ValueError(f"SGB_MAX_ORDER cannot exceed {TABLE_LIMIT}")
    if cap > DEFAULT_MAX_ORDER:
        warnings.warn(
            f"order cap raised to {cap}; pair enumeration grows as |G|^2",
            RuntimeWarning,
            stacklevel=2,
        )
    return cap


def worker_count() -> int:
    raw = os.environ.get("SGB_THREADS")
    if not raw:
        return 1
    return max(1, int(raw))

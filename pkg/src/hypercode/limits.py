"""Evaluation budget shared by the exhaustive search engines.

Minimum-distance computation is exponential, so every search takes a hard
cap on the number of weight evaluations it may perform.  Exceeding the cap
raises instead of silently truncating: an exhaustive answer is either exact
or an error, never a quiet bound.
"""

from __future__ import annotations

import os

DEFAULT_ENUM_CAP = 1 << 32
ENUM_CAP_ENV_VAR = "HYPERCODE_ENUM_CAP"


class EnumerationCapError(RuntimeError):
    """A search would exceed the configured evaluation budget."""


def resolve_enum_cap(cap: int | None = None) -> int:
    """Return the effective evaluation cap.

    An explicit ``cap`` wins; otherwise the ``HYPERCODE_ENUM_CAP``
    environment variable, read at call time; otherwise ``DEFAULT_ENUM_CAP``.
    """
    if cap is not None:
        if cap < 0:
            raise ValueError("enumeration cap must be non-negative")
        return cap
    raw = os.environ.get(ENUM_CAP_ENV_VAR)
    if raw is None:
        return DEFAULT_ENUM_CAP
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(
            f"{ENUM_CAP_ENV_VAR} must be an integer, got {raw!r}"
        ) from None
    if value < 0:
        raise ValueError(f"{ENUM_CAP_ENV_VAR} must be non-negative, got {value}")
    return value

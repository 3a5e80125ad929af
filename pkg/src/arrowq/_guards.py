"""Size guards shared across modules.

Every exhaustive operation checks its input against a fixed limit before
doing factorial or exponential work.  Limits can be raised (never lowered)
by setting the ARROWQ_GUARD_OVERRIDE environment variable to a positive
integer multiplier.
"""

import os

GUARD_ENV = "ARROWQ_GUARD_OVERRIDE"


class SizeLimitError(ValueError):
    """An input exceeds the configured exhaustive-search size guard."""


def guard_multiplier() -> int:
    raw = os.environ.get(GUARD_ENV)
    if raw is None:
        return 1
    try:
        mult = int(raw)
    except ValueError:
        raise ValueError(f"{GUARD_ENV} must be an integer, got {raw!r}") from None
    if mult < 1:
        raise ValueError(f"{GUARD_ENV} must be >= 1, got {mult}")
    return mult


def check_guard(value: int, base_limit: int, what: str) -> None:
    limit = base_limit * guard_multiplier()
    if value > limit:
        raise SizeLimitError(
            f"{what} = {value} exceeds the size guard {limit}"
            f" (set {GUARD_ENV} to raise it)"
        )

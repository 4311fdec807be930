"""Exception hierarchy and carrier limits."""

from __future__ import annotations

import os

MAX_CARRIER = 16
MAX_ENUMERATION = 4
MAX_FUNCTION_SWEEP = 3
MAX_SUBSET_SWEEP = 4

ENV_MAX_N = "TOPOFORGE_MAX_N"


class TopoforgeError(Exception):
    """Base class for all package errors."""


class InputError(TopoforgeError, ValueError):
    """Malformed or inconsistent input (bad masks, dimension mismatch, bad JSON)."""


class CapabilityError(TopoforgeError):
    """The request exceeds a carrier or enumeration limit."""


class CrossValidationError(TopoforgeError):
    """The bitmask path and the naive oracle disagree."""

    def __init__(self, message: str, predicate: str):
        super().__init__(message)
        self.predicate = predicate


def limit(default: int) -> int:
    """Return ``default`` lowered by ``TOPOFORGE_MAX_N`` if that is set.

    The environment variable can only tighten a cap, never raise it.
    """
    raw = os.environ.get(ENV_MAX_N)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise InputError(f"{ENV_MAX_N}: expected an integer, got {raw!r}") from None
    if value < 0:
        raise InputError(f"{ENV_MAX_N}: must be non-negative, got {value}")
    return min(default, value)


def check_carrier(n: int, cap: int | None = None, what: str = "carrier") -> None:
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise InputError(f"{what} size must be a non-negative integer, got {n!r}")
    top = limit(MAX_CARRIER if cap is None else cap)
    if n > top:
        raise CapabilityError(f"{what} size {n} exceeds the limit of {top}")

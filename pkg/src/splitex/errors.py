"""Exception types shared across the package.

Domain errors (bad arguments, violated preconditions) use plain ValueError;
everything here is for failure modes a caller may want to branch on.
"""

from __future__ import annotations


class CapacityError(Exception):
    """A construction or enumeration exceeded the 64-vertex representation."""


class Graph6ParseError(ValueError):
    """Malformed graph6 input; `offset` is the byte position of the defect."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class PrecisionError(RuntimeError):
    """A numeric routine could not reach the requested certified tolerance."""

    def __init__(self, message: str, best_err: float | None = None):
        super().__init__(message)
        self.best_err = best_err


class UndecidableComparisonError(PrecisionError):
    """Interval refinement and the exact fallback both failed to order two values."""

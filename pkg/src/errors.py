"""Exception hierarchy; every error knows its CLI reason tag and exit code."""

from __future__ import annotations

from .constants import (
    EXIT_BAD_IMAGE,
    EXIT_CAPACITY,
    EXIT_CORRUPT,
    EXIT_IO,
    REASON_BAD_IMAGE,
    REASON_CAPACITY,
    REASON_CORRUPT,
    REASON_IO,
)


class RDHError(Exception):
    """Base class for data-hiding failures surfaced to callers."""

    reason = REASON_BAD_IMAGE
    exit_code = EXIT_BAD_IMAGE


class BadImageError(RDHError, ValueError):
    reason = REASON_BAD_IMAGE
    exit_code = EXIT_BAD_IMAGE


class PGMParseError(BadImageError):
    """Raised when bytes are not a well-formed binary graymap."""


class MalformedHeaderError(PGMParseError):
    pass


class UnsupportedMaxvalError(PGMParseError):
    pass


class TruncatedDataError(PGMParseError):
    # A short file is an I/O failure from the command line's point of view.
    reason = REASON_IO
    exit_code = EXIT_IO


class DimensionError(BadImageError):
    """Image too small, wrongly shaped, or mismatched with its counterpart."""


class PixelClassError(BadImageError):
    """An anchor pixel was used where an interpolated pixel is required."""


class CapacityExceededError(RDHError, ValueError):
    reason = REASON_CAPACITY
    exit_code = EXIT_CAPACITY

    def __init__(self, available: int, required: int) -> None:
        super().__init__(f"available={available} bits, required={required} bits")
        self.available = available
        self.required = required


class CorruptStreamError(RDHError, ValueError):
    reason = REASON_CORRUPT
    exit_code = EXIT_CORRUPT


class TamperError(CorruptStreamError):
    """A stego pixel holds a value its capacity cannot produce."""


class BitStreamExhaustedError(CorruptStreamError):
    pass


class MetricError(ValueError):
    pass


__all__ = [
    "BadImageError",
    "BitStreamExhaustedError",
    "CapacityExceededError",
    "CorruptStreamError",
    "DimensionError",
    "MalformedHeaderError",
    "MetricError",
    "PGMParseError",
    "PixelClassError",
    "RDHError",
    "TamperError",
    "TruncatedDataError",
    "UnsupportedMaxvalError",
]

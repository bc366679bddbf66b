"""Stream framing shared by both codecs.

A stream is either the bare payload (raw mode) or a 32-bit big-endian payload
length followed by the payload. Pixels consume the stream in traversal order,
``widths[k]`` bits each; if fewer bits remain at a pixel, only those are
written there as a shorter group.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from ..constants import HEADER_BITS
from ..errors import CapacityExceededError, CorruptStreamError, TamperError
from .bitstream import BitString, pack_groups, unpack_groups

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PackedStream:
    """Per-pixel values to add to the embedding base, and how many bits each carries."""

    values: np.ndarray
    used: np.ndarray
    active: np.ndarray
    header_bits: int
    payload_bits: int

    @property
    def stream_bits(self) -> int:
        return self.header_bits + self.payload_bits


def frame(payload: BitString, raw: bool = False) -> BitString:
    if raw:
        return BitString(payload.bits)
    if len(payload) >= 1 << HEADER_BITS:
        raise ValueError(f"payload of {len(payload)} bits does not fit a {HEADER_BITS}-bit header")
    return BitString.from_int(len(payload), HEADER_BITS) + payload


def _offsets(widths: np.ndarray) -> np.ndarray:
    return np.cumsum(widths) - widths


def group_widths(widths: np.ndarray, stream_len: int) -> np.ndarray:
    """Bits actually written per pixel for a stream of ``stream_len`` bits."""
    widths = np.asarray(widths, dtype=np.int64)
    return np.clip(stream_len - _offsets(widths), 0, widths)


def pack_stream(widths: np.ndarray, payload: BitString, raw: bool = False) -> PackedStream:
    """Lay ``payload`` (framed unless ``raw``) over pixels of the given capacities."""
    widths = np.asarray(widths, dtype=np.int64)
    stream = frame(payload, raw)
    available = int(widths.sum())
    if len(stream) > available:
        raise CapacityExceededError(available=available, required=len(stream))
    used = group_widths(widths, len(stream))
    active = _offsets(widths) < len(stream)
    values = pack_groups(stream.bits, used)
    logger.debug("packed %d stream bits into %d of %d pixels", len(stream), int(active.sum()), widths.size)
    return PackedStream(
        values=values,
        used=used,
        active=active,
        header_bits=0 if raw else HEADER_BITS,
        payload_bits=len(payload),
    )


def _check_groups(values: np.ndarray, used: np.ndarray) -> None:
    read = used > 0
    bad = read & ((values < 0) | (values >= (np.int64(1) << used)))
    if bad.any():
        k = int(np.flatnonzero(bad)[0])
        raise TamperError(
            f"pixel #{k} in traversal order holds offset {int(values[k])}, "
            f"outside the {int(used[k])}-bit range"
        )


def _to_int(bits: np.ndarray) -> int:
    result = 0
    for bit in bits.tolist():
        result = (result << 1) | int(bit)
    return result


def _resolve_length(values: np.ndarray, widths: np.ndarray) -> int:
    """Decode the payload length from the header-bearing pixels."""
    offsets = _offsets(widths)
    ends = offsets + widths
    crossing = np.flatnonzero(ends >= HEADER_BITS)
    if crossing.size == 0:
        raise CorruptStreamError(f"image holds {int(widths.sum())} bits, too few for a length header")
    k = int(crossing[0])
    _check_groups(values[:k], widths[:k])
    prefix = _to_int(unpack_groups(values[:k], widths[:k]))
    start, width, value = int(offsets[k]), int(widths[k]), int(values[k])
    need = HEADER_BITS - start

    # Full group first, then every shorter group the stream may have ended with.
    candidates = [(width, True)] + [(r, False) for r in range(need, width)]
    for r, full in candidates:
        if value < 0 or value >= 1 << r:
            continue
        length = (prefix << need) | (value >> (r - need))
        if full and (need == width or length >= width - need):
            return length
        if not full and length == r - need:
            return length
    raise CorruptStreamError("length header is inconsistent with the pixel that carries it")


def unpack_stream(values: np.ndarray, widths: np.ndarray, raw: bool = False) -> BitString:
    """Recover the payload from per-pixel offsets (stego value minus embedding base)."""
    values = np.asarray(values, dtype=np.int64)
    widths = np.asarray(widths, dtype=np.int64)
    if raw:
        _check_groups(values, widths)
        return BitString(unpack_groups(values[widths > 0], widths[widths > 0]))

    length = _resolve_length(values, widths)
    available = int(widths.sum())
    total = HEADER_BITS + length
    if total > available:
        raise CorruptStreamError(
            f"header declares {length} payload bits but only {available - HEADER_BITS} are recoverable"
        )
    used = group_widths(widths, total)
    _check_groups(values, used)
    read = used > 0
    bits = unpack_groups(values[read], used[read])
    logger.debug("recovered %d payload bits", length)
    return BitString(bits[HEADER_BITS:])


__all__ = ["PackedStream", "frame", "group_widths", "pack_stream", "unpack_stream"]

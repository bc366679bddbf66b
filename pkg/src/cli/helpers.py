"""Helpers shared by the command handlers: file I/O, payload formats, summaries."""

from __future__ import annotations

import math
from pathlib import Path
from typing import Mapping

from ..errors import CorruptStreamError
from ..services.bitstream import BitString
from ..services.image_core import GrayImage, load_pgm, save_pgm


def read_image(path: Path) -> GrayImage:
    return load_pgm(Path(path).read_bytes())


def write_image(path: Path, image: GrayImage) -> None:
    Path(path).write_bytes(save_pgm(image))


def read_payload(path: Path, raw: bool) -> BitString:
    """Raw mode reads an ASCII bit dump; header mode reads raw bytes."""
    data = Path(path).read_bytes()
    if raw:
        return BitString.from_text(data.decode("ascii", errors="replace"))
    return BitString.from_bytes(data)


def encode_payload(bits: BitString, raw: bool) -> bytes:
    if raw:
        return (bits.to_text() + "\n").encode("ascii")
    if len(bits) % 8:
        raise CorruptStreamError(f"recovered {len(bits)} bits, which is not a whole number of bytes")
    return bits.to_bytes()


def format_number(value: float, digits: int = 4) -> str:
    if isinstance(value, int):
        return str(value)
    if math.isinf(value):
        return "inf"
    return f"{value:.{digits}f}"


def summary_line(fields: Mapping[str, object]) -> str:
    """``key=value`` pairs joined by spaces, for machine parsing."""
    parts = []
    for key, value in fields.items():
        text = format_number(value) if isinstance(value, float) else str(value)
        parts.append(f"{key}={text}")
    return " ".join(parts)


__all__ = [
    "encode_payload",
    "format_number",
    "read_image",
    "read_payload",
    "summary_line",
    "write_image",
]

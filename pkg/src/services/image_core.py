"""Grayscale image value type, binary PGM I/O and the down/crop helpers."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, List, Sequence

import numpy as np

from ..constants import PGM_MAGIC, PGM_MAXVAL
from ..errors import (
    BadImageError,
    DimensionError,
    MalformedHeaderError,
    TruncatedDataError,
    UnsupportedMaxvalError,
)

# magic, width, height, maxval, then exactly one whitespace byte before the raster.
_HEADER_TOKEN = re.compile(rb"(?:\s|#[^\n]*\n)*(\S+)")


@dataclass(frozen=True, eq=False)
class GrayImage:
    """Immutable 8-bit luminance buffer, indexed as ``pixels[row, col]``."""

    pixels: np.ndarray

    def __post_init__(self) -> None:
        array = np.asarray(self.pixels)
        if array.ndim != 2 or array.shape[0] < 1 or array.shape[1] < 1:
            raise DimensionError(f"image must be a non-empty 2-D array, got shape {array.shape}")
        if array.dtype != np.uint8:
            if array.size and (array.min() < 0 or array.max() > 255):
                raise BadImageError("samples must lie in [0, 255]")
            array = array.astype(np.uint8)
        else:
            array = array.copy()
        array.setflags(write=False)
        object.__setattr__(self, "pixels", array)

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]]) -> "GrayImage":
        return cls(np.array([list(row) for row in rows], dtype=np.int64))

    @property
    def width(self) -> int:
        return int(self.pixels.shape[1])

    @property
    def height(self) -> int:
        return int(self.pixels.shape[0])

    @property
    def samples(self) -> bytes:
        """Row-major sample sequence."""
        return self.pixels.tobytes()

    def to_rows(self) -> List[List[int]]:
        return self.pixels.astype(int).tolist()

    def __getitem__(self, index) -> int:
        return int(self.pixels[index])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GrayImage):
            return NotImplemented
        return self.pixels.shape == other.pixels.shape and bool(np.array_equal(self.pixels, other.pixels))

    def __hash__(self) -> int:
        return hash((self.pixels.shape, self.pixels.tobytes()))

    def __repr__(self) -> str:
        return f"GrayImage({self.width}x{self.height})"


def load_pgm(data: bytes) -> GrayImage:
    """Parse a binary portable graymap (P5, maxval <= 255) without rescaling."""
    tokens = []
    pos = 0
    for _ in range(4):
        match = _HEADER_TOKEN.match(data, pos)
        if match is None:
            raise MalformedHeaderError("incomplete PGM header")
        tokens.append(match.group(1))
        pos = match.end()

    magic, raw_width, raw_height, raw_maxval = tokens
    if magic != PGM_MAGIC:
        raise MalformedHeaderError(f"expected magic {PGM_MAGIC!r}, got {magic[:8]!r}")
    try:
        width, height, maxval = int(raw_width), int(raw_height), int(raw_maxval)
    except ValueError:
        raise MalformedHeaderError("PGM dimensions and maxval must be decimal integers")
    if width < 1 or height < 1:
        raise MalformedHeaderError(f"invalid PGM dimensions {width}x{height}")
    if maxval < 1 or maxval > PGM_MAXVAL:
        raise UnsupportedMaxvalError(f"maxval {maxval} is outside 1..{PGM_MAXVAL}")
    if pos >= len(data) or not data[pos : pos + 1].isspace():
        raise MalformedHeaderError("PGM header must end with a single whitespace byte")
    pos += 1

    expected = width * height
    raster = data[pos : pos + expected]
    if len(raster) < expected:
        raise TruncatedDataError(f"expected {expected} pixel bytes, found {len(raster)}")
    pixels = np.frombuffer(raster, dtype=np.uint8).reshape(height, width)
    if maxval < PGM_MAXVAL and int(pixels.max()) > maxval:
        raise MalformedHeaderError(f"sample exceeds declared maxval {maxval}")
    return GrayImage(pixels)


def save_pgm(img: GrayImage) -> bytes:
    """Serialize to the canonical ``P5\\n<w> <h>\\n255\\n`` form."""
    header = b"%s\n%d %d\n%d\n" % (PGM_MAGIC, img.width, img.height, PGM_MAXVAL)
    return header + img.samples


def downscale_half(img: GrayImage) -> GrayImage:
    """Even-coordinate subsampling to floor(w/2) x floor(h/2)."""
    if img.width < 2 or img.height < 2:
        raise DimensionError(f"cannot downscale a {img.width}x{img.height} image; need at least 2x2")
    rows, cols = img.height // 2, img.width // 2
    return GrayImage(img.pixels[0 : 2 * rows : 2, 0 : 2 * cols : 2])


def crop(img: GrayImage, width: int, height: int) -> GrayImage:
    """Top-left ``width`` x ``height`` sub-image."""
    if width < 1 or height < 1 or width > img.width or height > img.height:
        raise DimensionError(
            f"crop {width}x{height} is out of bounds for a {img.width}x{img.height} image"
        )
    return GrayImage(img.pixels[:height, :width])


__all__ = ["GrayImage", "crop", "downscale_half", "load_pgm", "save_pgm"]

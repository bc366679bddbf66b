"""Neighbor Mean Interpolation upscaling and anchor-neighbor extrema."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from ..errors import DimensionError, PixelClassError
from .image_core import GrayImage


class PixelClass(enum.Enum):
    ORIGINAL = "original"
    ROW_INTERP = "row"
    COL_INTERP = "col"
    DIAG_INTERP = "diag"


@dataclass(frozen=True)
class Extrema:
    """Max/Min over the anchor neighbors of one interpolated pixel."""

    min_val: int
    max_val: int

    @property
    def d(self) -> int:
        return self.max_val - self.min_val

    @property
    def n_bits(self) -> int:
        return capacity_bits(self.d)


def capacity_bits(d: int) -> int:
    """floor(log2 d) for d >= 2; zero for d in {0, 1}."""
    return int(d).bit_length() - 1 if d >= 2 else 0


def capacity_bits_array(d: np.ndarray) -> np.ndarray:
    """Vectorised :func:`capacity_bits` for non-negative integer differences up to 255."""
    d = np.asarray(d, dtype=np.int64)
    # frexp gives d = m * 2**e with 0.5 <= m < 1, so floor(log2 d) = e - 1 exactly.
    _, exponent = np.frexp(np.maximum(d, 1).astype(np.float64))
    return np.where(d >= 2, exponent - 1, 0).astype(np.int64)


def classify(i: int, j: int) -> PixelClass:
    """Parity-based class of cover coordinate (i, j)."""
    row_odd, col_odd = i % 2, j % 2
    if not row_odd and not col_odd:
        return PixelClass.ORIGINAL
    if not row_odd:
        return PixelClass.ROW_INTERP
    if not col_odd:
        return PixelClass.COL_INTERP
    return PixelClass.DIAG_INTERP


def check_cover_shape(width: int, height: int) -> Tuple[int, int]:
    """Validate a (2M-1) x (2N-1) shape and return the original (M, N) as (rows, cols)."""
    if width < 3 or height < 3 or width % 2 == 0 or height % 2 == 0:
        raise DimensionError(
            f"expected a (2M-1)x(2N-1) image with M, N >= 2, got {width}x{height}"
        )
    return (height + 1) // 2, (width + 1) // 2


def nmi_upscale(original: GrayImage) -> GrayImage:
    """Expand an M x N original into its (2M-1) x (2N-1) cover image."""
    rows, cols = original.height, original.width
    if rows < 2 or cols < 2:
        raise DimensionError(f"NMI needs an original of at least 2x2, got {cols}x{rows}")

    cover = np.zeros((2 * rows - 1, 2 * cols - 1), dtype=np.int64)
    cover[0::2, 0::2] = original.pixels
    cover[0::2, 1::2] = (cover[0::2, 0:-1:2] + cover[0::2, 2::2]) // 2
    cover[1::2, 0::2] = (cover[0:-1:2, 0::2] + cover[2::2, 0::2]) // 2
    # Diagonal pixels read the row- and column-interpolated values computed above.
    cover[1::2, 1::2] = (
        cover[0:-1:2, 0:-1:2] + cover[0:-1:2, 1::2] + cover[1::2, 0:-1:2]
    ) // 3
    return GrayImage(cover)


def _neighbor_coords(i: int, j: int):
    kind = classify(i, j)
    if kind is PixelClass.ROW_INTERP:
        return ((i, j - 1), (i, j + 1))
    if kind is PixelClass.COL_INTERP:
        return ((i - 1, j), (i + 1, j))
    if kind is PixelClass.DIAG_INTERP:
        return ((i - 1, j - 1), (i - 1, j + 1), (i + 1, j - 1))
    raise PixelClassError(f"pixel ({i}, {j}) is an anchor and has no interpolation neighbors")


def neighbor_extrema(image: GrayImage, i: int, j: int) -> Extrema:
    """Extrema over the anchors an interpolated pixel depends on.

    Anchors are untouched by embedding, so cover and stego give the same answer.
    """
    coords = _neighbor_coords(i, j)
    for r, c in coords:
        assert 0 <= r < image.height and 0 <= c < image.width, (
            f"neighbor ({r}, {c}) of ({i}, {j}) is outside a {image.width}x{image.height} image"
        )
    values = [image[r, c] for r, c in coords]
    return Extrema(min_val=min(values), max_val=max(values))


def extrema_grids(image: GrayImage) -> Tuple[np.ndarray, np.ndarray]:
    """Min and Max grids for every interpolated pixel of a (2M-1) x (2N-1) image.

    Anchor positions hold equal Min and Max (their own value) and are never read.
    """
    check_cover_shape(image.width, image.height)
    px = image.pixels.astype(np.int64)
    lo = px.copy()
    hi = px.copy()

    left, right = px[0::2, 0:-1:2], px[0::2, 2::2]
    lo[0::2, 1::2] = np.minimum(left, right)
    hi[0::2, 1::2] = np.maximum(left, right)

    up, down = px[0:-1:2, 0::2], px[2::2, 0::2]
    lo[1::2, 0::2] = np.minimum(up, down)
    hi[1::2, 0::2] = np.maximum(up, down)

    a, b, c = px[0:-1:2, 0:-1:2], px[0:-1:2, 2::2], px[2::2, 0:-1:2]
    lo[1::2, 1::2] = np.minimum(np.minimum(a, b), c)
    hi[1::2, 1::2] = np.maximum(np.maximum(a, b), c)
    return lo, hi


__all__ = [
    "Extrema",
    "PixelClass",
    "capacity_bits",
    "capacity_bits_array",
    "check_cover_shape",
    "classify",
    "extrema_grids",
    "neighbor_extrema",
    "nmi_upscale",
]

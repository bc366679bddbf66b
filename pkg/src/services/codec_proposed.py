"""Max/Min neighbor-difference embedding over NMI cover images.

Each interpolated pixel hides ``floor(log2(Max - Min))`` bits as an offset
from the smallest of its anchor neighbors. Anchors are never touched, so the
extractor recomputes the same capacities from the stego image alone.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterator, List, Tuple

import numpy as np

from .bitstream import BitString
from .framing import pack_stream, unpack_stream
from .image_core import GrayImage
from .interpolation import capacity_bits_array, check_cover_shape, extrema_grids, nmi_upscale

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class CapacityMap:
    """Per-pixel capacity in traversal order.

    ``min_vals`` is the value that encodes offset zero; ``max_vals`` is the upper
    reference of the pixel (Max for this scheme).
    """

    width: int
    height: int
    coords: np.ndarray
    n_bits: np.ndarray
    min_vals: np.ndarray
    max_vals: np.ndarray

    @property
    def total_bits(self) -> int:
        return int(self.n_bits.sum())

    def __len__(self) -> int:
        return int(self.n_bits.size)

    def entries(self) -> Iterator[Tuple[int, int, int, int, int]]:
        """Yield ``(i, j, n_bits, min_val, max_val)`` in traversal order."""
        for (i, j), n, lo, hi in zip(
            self.coords.tolist(), self.n_bits.tolist(), self.min_vals.tolist(), self.max_vals.tolist()
        ):
            yield i, j, n, lo, hi

    def bits_list(self) -> List[int]:
        return self.n_bits.tolist()


@dataclass(frozen=True, eq=False)
class EmbedResult:
    stego: GrayImage
    payload_bits_embedded: int
    header_bits: int
    capacity: CapacityMap
    used: np.ndarray

    @property
    def stream_bits(self) -> int:
        return self.header_bits + self.payload_bits_embedded


def traversal_coords(width: int, height: int) -> np.ndarray:
    """Row-major ``(i, j)`` array of every interpolated pixel of a cover."""
    check_cover_shape(width, height)
    rows, cols = np.indices((height, width))
    interpolated = (rows % 2 == 1) | (cols % 2 == 1)
    return np.argwhere(interpolated)


def traversal_order(cover_dims: Tuple[int, int]) -> List[Tuple[int, int]]:
    width, height = cover_dims
    return [tuple(pair) for pair in traversal_coords(width, height).tolist()]


def capacity_of(image: GrayImage) -> CapacityMap:
    """Capacity map from the anchors of a cover or stego image."""
    coords = traversal_coords(image.width, image.height)
    lo, hi = extrema_grids(image)
    rows, cols = coords[:, 0], coords[:, 1]
    min_vals, max_vals = lo[rows, cols], hi[rows, cols]
    return CapacityMap(
        width=image.width,
        height=image.height,
        coords=coords,
        n_bits=capacity_bits_array(max_vals - min_vals),
        min_vals=min_vals,
        max_vals=max_vals,
    )


def compute_capacity(original: GrayImage) -> CapacityMap:
    capacity = capacity_of(nmi_upscale(original))
    logger.debug(
        "capacity of %dx%d original: %d bits over %d pixels",
        original.width,
        original.height,
        capacity.total_bits,
        len(capacity),
    )
    return capacity


def embed(original: GrayImage, payload: BitString, raw: bool = False) -> EmbedResult:
    """Hide ``payload`` in the NMI cover of ``original``.

    Interpolated pixels reached by the stream become ``Min + offset``; pixels
    past its end keep their interpolated values.
    """
    cover = nmi_upscale(original)
    capacity = capacity_of(cover)
    packed = pack_stream(capacity.n_bits, payload, raw)

    stego = cover.pixels.astype(np.int64)
    active = packed.active
    rows, cols = capacity.coords[active, 0], capacity.coords[active, 1]
    stego[rows, cols] = capacity.min_vals[active] + packed.values[active]
    return EmbedResult(
        stego=GrayImage(stego),
        payload_bits_embedded=packed.payload_bits,
        header_bits=packed.header_bits,
        capacity=capacity,
        used=packed.used,
    )


def extract(stego: GrayImage, raw: bool = False) -> BitString:
    capacity = capacity_of(stego)
    rows, cols = capacity.coords[:, 0], capacity.coords[:, 1]
    offsets = stego.pixels[rows, cols].astype(np.int64) - capacity.min_vals
    return unpack_stream(offsets, capacity.n_bits, raw)


def recover_original(stego: GrayImage) -> GrayImage:
    """The anchors of a stego image are the original's pixels."""
    check_cover_shape(stego.width, stego.height)
    return GrayImage(stego.pixels[0::2, 0::2])


__all__ = [
    "CapacityMap",
    "EmbedResult",
    "capacity_of",
    "compute_capacity",
    "embed",
    "extract",
    "recover_original",
    "traversal_coords",
    "traversal_order",
]

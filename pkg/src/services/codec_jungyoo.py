"""Jung-Yoo interpolation baseline used for head-to-head comparison.

The cover is tiled into 2x2 blocks anchored at even coordinates. The three
interpolated cells of each block carry ``floor(log2 |C(p,q) - C(i,j)|)`` bits,
added on top of their interpolated value.
"""

from __future__ import annotations

import logging

import numpy as np

from ..constants import PEAK_VALUE
from .bitstream import BitString
from .codec_proposed import CapacityMap, EmbedResult
from .framing import pack_stream, unpack_stream
from .image_core import GrayImage
from .interpolation import capacity_bits_array, check_cover_shape, nmi_upscale

logger = logging.getLogger(__name__)

# (row, col) offsets from the block anchor, in embedding order.
_BLOCK_CELLS = np.array([(0, 1), (1, 0), (1, 1)], dtype=np.int64)


def block_coords(width: int, height: int) -> np.ndarray:
    """Embedding cells of every complete 2x2 block, block by block in raster order.

    Cells on the last row and column belong to no complete block and carry nothing.
    """
    rows, cols = check_cover_shape(width, height)
    anchor_i, anchor_j = np.meshgrid(
        np.arange(0, 2 * (rows - 1), 2), np.arange(0, 2 * (cols - 1), 2), indexing="ij"
    )
    anchors = np.stack([anchor_i.ravel(), anchor_j.ravel()], axis=1)
    return (anchors[:, None, :] + _BLOCK_CELLS[None, :, :]).reshape(-1, 2)


def _capacity_of_cover(cover: GrayImage) -> CapacityMap:
    coords = block_coords(cover.width, cover.height)
    px = cover.pixels.astype(np.int64)
    rows, cols = coords[:, 0], coords[:, 1]
    base = px[rows, cols]
    anchor = px[rows - rows % 2, cols - cols % 2]
    n_bits = capacity_bits_array(np.abs(base - anchor))
    # Largest group that cannot push base + offset past the peak value.
    headroom = capacity_bits_array(PEAK_VALUE + 1 - base)
    n_bits = np.minimum(n_bits, headroom)
    return CapacityMap(
        width=cover.width,
        height=cover.height,
        coords=coords,
        n_bits=n_bits,
        min_vals=base,
        max_vals=base + (np.int64(1) << n_bits) - 1,
    )


def jy_capacity(original: GrayImage) -> CapacityMap:
    capacity = _capacity_of_cover(nmi_upscale(original))
    logger.debug("jung-yoo capacity: %d bits over %d cells", capacity.total_bits, len(capacity))
    return capacity


def jy_embed(original: GrayImage, payload: BitString, raw: bool = False) -> EmbedResult:
    cover = nmi_upscale(original)
    capacity = _capacity_of_cover(cover)
    packed = pack_stream(capacity.n_bits, payload, raw)

    stego = cover.pixels.astype(np.int64)
    rows, cols = capacity.coords[:, 0], capacity.coords[:, 1]
    stego[rows, cols] = capacity.min_vals + packed.values
    return EmbedResult(
        stego=GrayImage(stego),
        payload_bits_embedded=packed.payload_bits,
        header_bits=packed.header_bits,
        capacity=capacity,
        used=packed.used,
    )


def jy_extract(stego: GrayImage, raw: bool = False) -> BitString:
    check_cover_shape(stego.width, stego.height)
    cover = nmi_upscale(GrayImage(stego.pixels[0::2, 0::2]))
    capacity = _capacity_of_cover(cover)
    rows, cols = capacity.coords[:, 0], capacity.coords[:, 1]
    offsets = stego.pixels[rows, cols].astype(np.int64) - capacity.min_vals
    return unpack_stream(offsets, capacity.n_bits, raw)


__all__ = ["block_coords", "jy_capacity", "jy_embed", "jy_extract"]

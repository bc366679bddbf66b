import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from src.errors import DimensionError, PixelClassError
from src.services.image_core import GrayImage
from src.services.interpolation import (
    PixelClass,
    capacity_bits,
    capacity_bits_array,
    classify,
    extrema_grids,
    neighbor_extrema,
    nmi_upscale,
)
from tests.support import naive_nmi

originals = arrays(np.uint8, st.tuples(st.integers(2, 9), st.integers(2, 9)))


def test_golden_cover(golden_original, golden_cover):
    assert nmi_upscale(golden_original) == golden_cover


def test_constant_image_stays_constant():
    cover = nmi_upscale(GrayImage(np.full((3, 4), 93, dtype=np.uint8)))
    assert (cover.width, cover.height) == (7, 5)
    assert np.all(cover.pixels == 93)


def test_hard_edge_values():
    cover = nmi_upscale(GrayImage.from_rows([[0, 255], [0, 255]]))
    assert cover.to_rows() == [[0, 127, 255], [0, 42, 255], [0, 127, 255]]


def test_too_small_original():
    with pytest.raises(DimensionError):
        nmi_upscale(GrayImage.from_rows([[1, 2]]))


@settings(max_examples=60, deadline=None)
@given(originals)
def test_anchors_preserved_and_matches_naive(pixels):
    original = GrayImage(pixels)
    cover = nmi_upscale(original)
    assert np.array_equal(cover.pixels[0::2, 0::2], pixels)
    assert cover.to_rows() == naive_nmi(original.to_rows())


@settings(max_examples=60, deadline=None)
@given(originals)
def test_interpolated_values_stay_in_neighbor_hull(pixels):
    cover = nmi_upscale(GrayImage(pixels))
    lo, hi = extrema_grids(cover)
    assert np.all(cover.pixels >= lo)
    assert np.all(cover.pixels <= hi)


def test_classify():
    assert classify(0, 0) is PixelClass.ORIGINAL
    assert classify(0, 1) is PixelClass.ROW_INTERP
    assert classify(1, 0) is PixelClass.COL_INTERP
    assert classify(1, 1) is PixelClass.DIAG_INTERP
    assert classify(6, 4) is PixelClass.ORIGINAL


@pytest.mark.parametrize(
    "pos, expected",
    [((0, 1), (152, 161, 9, 3)), ((1, 0), (152, 185, 33, 5)), ((1, 1), (152, 185, 33, 5)), ((2, 1), (185, 188, 3, 1))],
)
def test_neighbor_extrema_golden(golden_cover, pos, expected):
    ext = neighbor_extrema(golden_cover, *pos)
    assert (ext.min_val, ext.max_val, ext.d, ext.n_bits) == expected


def test_neighbor_extrema_same_on_stego(golden_cover, golden_stego):
    for pos in [(0, 1), (1, 0), (1, 1), (1, 2), (2, 1)]:
        assert neighbor_extrema(golden_cover, *pos) == neighbor_extrema(golden_stego, *pos)


def test_neighbor_extrema_rejects_anchor(golden_cover):
    with pytest.raises(PixelClassError):
        neighbor_extrema(golden_cover, 2, 2)


@pytest.mark.parametrize("d, n", [(0, 0), (1, 0), (2, 1), (3, 1), (4, 2), (9, 3), (33, 5), (128, 7), (255, 7)])
def test_capacity_bits(d, n):
    assert capacity_bits(d) == n


def test_capacity_bits_array_matches_scalar():
    d = np.arange(256)
    assert capacity_bits_array(d).tolist() == [capacity_bits(int(v)) for v in d]


def test_capacity_monotone_in_max():
    for lo in range(0, 256, 17):
        bits = [capacity_bits(hi - lo) for hi in range(lo, 256)]
        assert bits == sorted(bits)


def test_extrema_grids_match_pointwise(rng):
    cover = nmi_upscale(GrayImage(rng.integers(0, 256, size=(5, 6), dtype=np.uint8)))
    lo, hi = extrema_grids(cover)
    for i in range(cover.height):
        for j in range(cover.width):
            if classify(i, j) is PixelClass.ORIGINAL:
                continue
            ext = neighbor_extrema(cover, i, j)
            assert (lo[i, j], hi[i, j]) == (ext.min_val, ext.max_val)


def test_extrema_grids_reject_even_shape():
    with pytest.raises(DimensionError):
        extrema_grids(GrayImage(np.zeros((4, 5), dtype=np.uint8)))

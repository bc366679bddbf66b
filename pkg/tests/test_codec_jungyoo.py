import numpy as np
import pytest

from src.errors import CapacityExceededError, CorruptStreamError
from src.services.bitstream import BitString
from src.services.codec_jungyoo import _capacity_of_cover, block_coords, jy_capacity, jy_embed, jy_extract
from src.services.image_core import GrayImage
from tests.support import random_image


def test_block_order_three_by_five():
    assert block_coords(5, 3).tolist() == [[0, 1], [1, 0], [1, 1], [0, 3], [1, 2], [1, 3]]


def test_golden_capacity(golden_original):
    capacity = jy_capacity(golden_original)
    assert capacity.bits_list() == [2, 4, 2]
    assert capacity.total_bits == 8


def test_constant_image_has_no_capacity(golden_original):
    original = GrayImage(np.full((5, 5), 120, dtype=np.uint8))
    assert jy_capacity(original).total_bits == 0
    stego = jy_embed(original, BitString(), raw=True).stego
    assert np.all(stego.pixels == 120)


@pytest.mark.parametrize("shift", [-100, -7, 30, 60])
def test_capacity_invariant_under_constant_shift(golden_original, shift):
    shifted = GrayImage(golden_original.pixels.astype(int) + shift)
    assert jy_capacity(shifted).bits_list() == jy_capacity(golden_original).bits_list()


def test_golden_block_embed(golden_original, golden_cover):
    stego = jy_embed(golden_original, BitString.from_text("11" + "1101"), raw=True).stego
    assert stego[0, 1] == 159
    assert stego[1, 0] == 181
    assert stego[1, 1] == golden_cover[1, 1]


def test_golden_block_extract(golden_original):
    stego = jy_embed(golden_original, BitString.from_text("11011010"), raw=True).stego
    bits = jy_extract(stego, raw=True)
    assert bits.to_text()[:2] == "11"
    assert bits == "11011010"


def test_unmodified_cover_reads_zero_offsets(golden_original, golden_cover):
    assert jy_extract(golden_cover, raw=True) == "0" * 8


def test_overflow_guard_limits_bits():
    # A bright cell next to a dark anchor: d = 250 would give 7 bits, 256 - 250 allows 2.
    cover = GrayImage.from_rows([[0, 250, 0], [0, 0, 0], [0, 0, 0]])
    capacity = _capacity_of_cover(cover)
    assert capacity.bits_list()[0] == 2
    assert int(capacity.max_vals[0]) == 253


def test_stego_never_overflows(rng):
    for _ in range(30):
        original = random_image(rng, 5, 5)
        capacity = jy_capacity(original)
        stego = jy_embed(original, BitString(np.ones(capacity.total_bits, dtype=np.uint8)), raw=True).stego
        assert int(stego.pixels.max()) <= 255


def test_header_roundtrip(rng):
    for _ in range(25):
        original = random_image(rng, 8, 8)
        room = jy_capacity(original).total_bits - 32
        payload = BitString.random(int(rng.integers(0, room + 1)), rng)
        result = jy_embed(original, payload)
        assert jy_extract(result.stego) == payload
        assert GrayImage(result.stego.pixels[0::2, 0::2]) == original


def test_capacity_exceeded(golden_original):
    with pytest.raises(CapacityExceededError):
        jy_embed(golden_original, BitString.from_text("1" * 9), raw=True)


def test_lowered_pixel_is_corrupt(golden_original):
    stego = jy_embed(golden_original, BitString.from_text("00000000"), raw=True).stego
    pixels = stego.pixels.copy()
    pixels[0, 1] -= 1
    with pytest.raises(CorruptStreamError):
        jy_extract(GrayImage(pixels), raw=True)

"""Shared fixtures: the worked 2x2 example and its cover/stego images."""

from __future__ import annotations

from pathlib import Path

import numpy as np
import pytest

from src.services.image_core import GrayImage
from tests.support import GOLDEN_COVER, GOLDEN_ORIGINAL, GOLDEN_STEGO

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture
def golden_original() -> GrayImage:
    return GrayImage.from_rows(GOLDEN_ORIGINAL)


@pytest.fixture
def golden_cover() -> GrayImage:
    return GrayImage.from_rows(GOLDEN_COVER)


@pytest.fixture
def golden_stego() -> GrayImage:
    return GrayImage.from_rows(GOLDEN_STEGO)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(0)

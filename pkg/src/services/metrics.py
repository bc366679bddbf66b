"""Image quality and capacity metrics."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from ..constants import PEAK_VALUE
from ..errors import DimensionError, MetricError
from .image_core import GrayImage


@dataclass(frozen=True)
class QualityReport:
    mse: float
    psnr_db: float
    bpp: float

    @property
    def lossless(self) -> bool:
        return math.isinf(self.psnr_db)


def _check_same_shape(a: GrayImage, b: GrayImage) -> None:
    if a.pixels.shape != b.pixels.shape:
        raise DimensionError(f"cannot compare {a.width}x{a.height} with {b.width}x{b.height}")


def mse(a: GrayImage, b: GrayImage) -> float:
    _check_same_shape(a, b)
    diff = a.pixels.astype(np.int64) - b.pixels.astype(np.int64)
    return float(np.mean(diff * diff))


def psnr(a: GrayImage, b: GrayImage) -> float:
    """Peak signal-to-noise ratio in dB; ``inf`` for identical images."""
    error = mse(a, b)
    if error == 0:
        return math.inf
    return 10.0 * math.log10(PEAK_VALUE**2 / error)


def bpp(bits_embedded: int, stego: GrayImage) -> float:
    return bits_embedded / (stego.width * stego.height)


def gain_rate(bpp_proposed: float, bpp_baseline: float) -> float:
    """Relative capacity improvement of the proposed scheme over the baseline."""
    if bpp_baseline <= 0:
        raise MetricError("gain rate is undefined for a zero baseline")
    return (bpp_proposed - bpp_baseline) / bpp_baseline


def mean_gain(gains: Sequence[float]) -> float:
    finite = [g for g in gains if not math.isnan(g)]
    return float(np.mean(finite)) if finite else math.nan


def quality_report(reference: GrayImage, stego: GrayImage, bits_embedded: int) -> QualityReport:
    return QualityReport(
        mse=mse(reference, stego),
        psnr_db=psnr(reference, stego),
        bpp=bpp(bits_embedded, stego),
    )


__all__ = ["QualityReport", "bpp", "gain_rate", "mean_gain", "mse", "psnr", "quality_report"]

"""Service-layer modules: imaging, codecs, metrics and the benchmark harness."""

from . import (
    bench,
    bitstream,
    codec_jungyoo,
    codec_proposed,
    framing,
    image_core,
    interpolation,
    metrics,
)

__all__ = [
    "bench",
    "bitstream",
    "codec_jungyoo",
    "codec_proposed",
    "framing",
    "image_core",
    "interpolation",
    "metrics",
]

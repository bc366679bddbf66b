"""Corpus benchmark comparing the proposed scheme with the Jung-Yoo baseline."""

from __future__ import annotations

import logging
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np
import pandas as pd
from tqdm import tqdm

from ..constants import (
    BENCH_COLUMNS,
    GAIN_COLUMNS,
    GAIN_MEAN_LABEL,
    PAYLOAD_FILE,
    PAYLOAD_POLICIES,
    PAYLOAD_RANDOM,
    SCHEME_JUNGYOO,
    SCHEME_PROPOSED,
    SCHEMES,
)
from ..errors import RDHError
from .bitstream import BitString
from .codec_jungyoo import jy_capacity, jy_embed
from .codec_proposed import CapacityMap, EmbedResult, compute_capacity, embed
from .image_core import GrayImage, crop, downscale_half, load_pgm
from .interpolation import nmi_upscale
from .metrics import bpp, gain_rate, mean_gain, psnr

logger = logging.getLogger(__name__)

_SCHEME_FUNCS: Dict[str, Tuple[Callable[[GrayImage], CapacityMap], Callable[..., EmbedResult]]] = {
    SCHEME_PROPOSED: (compute_capacity, embed),
    SCHEME_JUNGYOO: (jy_capacity, jy_embed),
}


@dataclass(frozen=True)
class BenchRow:
    image_name: str
    scheme: str
    width: int
    height: int
    bits: int
    bpp: float
    psnr_vs_input: Optional[float]
    psnr_vs_cover: float
    elapsed_ms: float

    def as_record(self) -> Dict[str, object]:
        return {
            "image": self.image_name,
            "scheme": self.scheme,
            "width": self.width,
            "height": self.height,
            "bits": self.bits,
            "bpp": round(self.bpp, 4),
            "psnr_vs_input": None if self.psnr_vs_input is None else _round_db(self.psnr_vs_input),
            "psnr_vs_cover": _round_db(self.psnr_vs_cover),
            "elapsed_ms": round(self.elapsed_ms, 3),
        }


@dataclass(frozen=True)
class ImageOutcome:
    name: str
    rows: Tuple[BenchRow, ...]
    gain: float
    nmi_psnr: Optional[float]


@dataclass
class BenchReport:
    rows: List[BenchRow] = field(default_factory=list)
    gains: Dict[str, float] = field(default_factory=dict)
    nmi_psnr: Dict[str, float] = field(default_factory=dict)
    skipped: List[str] = field(default_factory=list)

    @property
    def mean_gain(self) -> float:
        return mean_gain(list(self.gains.values()))

    def mean_bpp(self, scheme: str) -> float:
        values = [row.bpp for row in self.rows if row.scheme == scheme]
        return float(np.mean(values)) if values else math.nan

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame([row.as_record() for row in self.rows], columns=list(BENCH_COLUMNS))

    def gain_frame(self) -> pd.DataFrame:
        records = [{"image": name, "gain_rate": _round_gain(g)} for name, g in self.gains.items()]
        if records:
            records.append({"image": GAIN_MEAN_LABEL, "gain_rate": _round_gain(self.mean_gain)})
        return pd.DataFrame(records, columns=list(GAIN_COLUMNS))

    def write(self, csv_path: Path, gain_path: Path) -> None:
        self.to_frame().to_csv(csv_path, index=False, lineterminator="\n")
        self.gain_frame().to_csv(gain_path, index=False, lineterminator="\n")

    def summary_lines(self) -> List[str]:
        lines = [f"{scheme} mean_bpp={_fmt(self.mean_bpp(scheme), 4)}" for scheme in SCHEMES]
        lines.append(f"mean_gain={_fmt(self.mean_gain, 4)}")
        if self.nmi_psnr:
            lines.append(f"nmi_psnr_vs_input={_fmt(float(np.mean(list(self.nmi_psnr.values()))), 2)}")
        if self.skipped:
            lines.append(f"skipped={','.join(self.skipped)}")
        return lines


def _round_db(value: float) -> float:
    return value if math.isinf(value) else round(value, 2)


def _round_gain(value: float) -> Optional[float]:
    return None if math.isnan(value) else round(value, 4)


def _fmt(value: float, digits: int) -> str:
    return "nan" if math.isnan(value) else f"{value:.{digits}f}"


def gain_path_for(csv_path: Path) -> Path:
    """Companion path for the gain-rate CSV (``bench.csv`` -> ``bench_gain.csv``)."""
    return csv_path.with_name(f"{csv_path.stem}_gain{csv_path.suffix or '.csv'}")


def list_corpus(corpus_dir: Path) -> List[Path]:
    return sorted(
        (p for p in corpus_dir.iterdir() if p.is_file() and p.suffix.lower() == ".pgm"),
        key=lambda p: p.name,
    )


def _payload_for(
    capacity: CapacityMap,
    policy: str,
    rng: np.random.Generator,
    fixed: Optional[BitString],
) -> BitString:
    if policy == PAYLOAD_FILE:
        if fixed is None:
            raise ValueError("the fixed-file payload policy needs a payload file")
        return BitString(fixed.bits[: capacity.total_bits])
    return BitString.random(capacity.total_bits, rng)


def bench_image(
    path: Path,
    seed_seq: np.random.SeedSequence,
    policy: str = PAYLOAD_RANDOM,
    fixed: Optional[BitString] = None,
    originals: bool = False,
    timing: bool = False,
) -> ImageOutcome:
    """Run both schemes at full capacity on one corpus image."""
    source = load_pgm(path.read_bytes())
    original = source if originals else downscale_half(source)
    cover = nmi_upscale(original)
    reference = None if originals else crop(source, cover.width, cover.height)
    rng = np.random.default_rng(seed_seq)

    rows = []
    for scheme in SCHEMES:
        capacity_fn, embed_fn = _SCHEME_FUNCS[scheme]
        started = time.perf_counter()
        payload = _payload_for(capacity_fn(original), policy, rng, fixed)
        result = embed_fn(original, payload, raw=True)
        elapsed = (time.perf_counter() - started) * 1000.0 if timing else 0.0
        stego = result.stego
        rows.append(
            BenchRow(
                image_name=path.name,
                scheme=scheme,
                width=stego.width,
                height=stego.height,
                bits=result.stream_bits,
                bpp=bpp(result.stream_bits, stego),
                psnr_vs_input=None if reference is None else psnr(reference, stego),
                psnr_vs_cover=psnr(cover, stego),
                elapsed_ms=elapsed,
            )
        )

    by_scheme = {row.scheme: row for row in rows}
    baseline = by_scheme[SCHEME_JUNGYOO].bpp
    gain = gain_rate(by_scheme[SCHEME_PROPOSED].bpp, baseline) if baseline > 0 else math.nan
    return ImageOutcome(
        name=path.name,
        rows=tuple(rows),
        gain=gain,
        nmi_psnr=None if reference is None else psnr(reference, cover),
    )


def _bench_job(args) -> Tuple[str, Optional[ImageOutcome], Optional[str]]:
    path = args[0]
    try:
        return path.name, bench_image(*args), None
    except (RDHError, OSError) as exc:
        return path.name, None, f"{type(exc).__name__}: {exc}"


def run_bench(
    corpus_dir: Path,
    policy: str = PAYLOAD_RANDOM,
    seed: int = 0,
    payload_file: Optional[Path] = None,
    originals: bool = False,
    workers: int = 1,
    timing: bool = False,
    progress: bool = True,
) -> BenchReport:
    """Benchmark every PGM in ``corpus_dir``; rows come back sorted by image name."""
    if policy not in PAYLOAD_POLICIES:
        raise ValueError(f"unknown payload policy {policy!r}")
    fixed = BitString.from_bytes(payload_file.read_bytes()) if payload_file is not None else None
    paths = list_corpus(corpus_dir)
    seeds = np.random.SeedSequence(seed).spawn(len(paths))
    jobs = [(path, seq, policy, fixed, originals, timing) for path, seq in zip(paths, seeds)]
    logger.info("benchmarking %d images from %s with seed %d", len(paths), corpus_dir, seed)

    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(tqdm(pool.map(_bench_job, jobs), total=len(jobs), disable=not progress))
    else:
        results = [_bench_job(job) for job in tqdm(jobs, disable=not progress)]

    report = BenchReport()
    for name, outcome, problem in sorted(results, key=lambda item: item[0]):
        if outcome is None:
            logger.warning("skipping %s: %s", name, problem)
            report.skipped.append(name)
            continue
        report.rows.extend(outcome.rows)
        report.gains[name] = outcome.gain
        if outcome.nmi_psnr is not None:
            report.nmi_psnr[name] = outcome.nmi_psnr
    return report


__all__ = [
    "BenchReport",
    "BenchRow",
    "ImageOutcome",
    "bench_image",
    "gain_path_for",
    "list_corpus",
    "run_bench",
]

"""Command-line entry point: embed, extract, recover, capacity and bench."""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Callable, Optional, Sequence

from .constants import (
    CORPUS_HELP,
    EXIT_IO,
    EXIT_OK,
    EXIT_USAGE,
    HEADER_BITS,
    PAYLOAD_POLICIES,
    PAYLOAD_RANDOM,
    REASON_IO,
    REASON_USAGE,
    SCHEME_JUNGYOO,
    SCHEMES,
)
from .cli.helpers import (
    encode_payload,
    format_number,
    read_image,
    read_payload,
    summary_line,
    write_image,
)
from .errors import RDHError
from .services import codec_jungyoo, codec_proposed
from .services.bench import gain_path_for, run_bench
from .services.image_core import downscale_half
from .services.interpolation import nmi_upscale
from .services.metrics import bpp, psnr
from .settings import RDHSettings, load_settings

logger = logging.getLogger(__name__)


def _codec(scheme: str):
    """(capacity, embed, extract) functions for a scheme name."""
    if scheme == SCHEME_JUNGYOO:
        return codec_jungyoo.jy_capacity, codec_jungyoo.jy_embed, codec_jungyoo.jy_extract
    return codec_proposed.compute_capacity, codec_proposed.embed, codec_proposed.extract


def cmd_embed(args: argparse.Namespace, settings: RDHSettings) -> int:
    original = read_image(args.original)
    payload = read_payload(args.payload, args.raw)
    _, embed_fn, _ = _codec(settings.scheme)
    result = embed_fn(original, payload, raw=args.raw)
    write_image(args.out, result.stego)
    cover = nmi_upscale(original)
    print(
        summary_line(
            {
                "scheme": settings.scheme,
                "bits": result.payload_bits_embedded,
                "stream_bits": result.stream_bits,
                "capacity": result.capacity.total_bits,
                "bpp": bpp(result.stream_bits, result.stego),
                "psnr_vs_cover": format_number(psnr(cover, result.stego), 2),
            }
        )
    )
    return EXIT_OK


def cmd_extract(args: argparse.Namespace, settings: RDHSettings) -> int:
    stego = read_image(args.stego)
    _, _, extract_fn = _codec(settings.scheme)
    bits = extract_fn(stego, raw=args.raw)
    data = encode_payload(bits, args.raw)
    if args.out is None:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    else:
        Path(args.out).write_bytes(data)
        print(summary_line({"scheme": settings.scheme, "bits": len(bits)}))
    return EXIT_OK


def cmd_recover(args: argparse.Namespace, settings: RDHSettings) -> int:
    stego = read_image(args.stego)
    original = codec_proposed.recover_original(stego)
    write_image(args.out, original)
    print(summary_line({"width": original.width, "height": original.height}))
    return EXIT_OK


def cmd_capacity(args: argparse.Namespace, settings: RDHSettings) -> int:
    original = read_image(args.original)
    capacity_fn, _, _ = _codec(settings.scheme)
    capacity = capacity_fn(original)
    pixels = capacity.width * capacity.height
    print(
        summary_line(
            {
                "scheme": settings.scheme,
                "width": capacity.width,
                "height": capacity.height,
                "bits": capacity.total_bits,
                "payload_bits": max(0, capacity.total_bits - (0 if args.raw else HEADER_BITS)),
                "bpp": capacity.total_bits / pixels,
            }
        )
    )
    if args.verbose:
        for i, j, n, lo, hi in capacity.entries():
            print(f"{i},{j},{n},{lo},{hi}")
    return EXIT_OK


def cmd_downscale(args: argparse.Namespace, settings: RDHSettings) -> int:
    original = downscale_half(read_image(args.input))
    write_image(args.out, original)
    print(summary_line({"width": original.width, "height": original.height}))
    return EXIT_OK


def cmd_upscale(args: argparse.Namespace, settings: RDHSettings) -> int:
    cover = nmi_upscale(read_image(args.original))
    write_image(args.out, cover)
    print(summary_line({"width": cover.width, "height": cover.height}))
    return EXIT_OK


def cmd_bench(args: argparse.Namespace, settings: RDHSettings) -> int:
    csv_path = Path(args.out or "bench.csv")
    report = run_bench(
        Path(args.corpus_dir),
        policy=args.payload,
        seed=settings.seed,
        payload_file=Path(args.payload_file) if args.payload_file else None,
        originals=args.originals,
        workers=settings.workers,
        timing=settings.timing,
        progress=not args.quiet,
    )
    gain_path = gain_path_for(csv_path)
    report.write(csv_path, gain_path)
    for line in report.summary_lines():
        print(line)
    print(summary_line({"rows": len(report.rows), "csv": csv_path, "gain_csv": gain_path}))
    return EXIT_OK


def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--scheme", choices=SCHEMES, default=None, help="embedding scheme")
    common.add_argument("--raw", action="store_true", help="no 32-bit length header; payloads are ASCII bit strings")
    common.add_argument("--seed", type=int, default=None, help="PRNG seed for generated payloads")
    common.add_argument("--out", default=None, help="output path")
    common.add_argument("--log-level", default=None, help="logging level (DEBUG, INFO, WARNING, ...)")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_parser()
    parser = argparse.ArgumentParser(
        prog="rdh",
        description="Reversible data hiding in NMI-upscaled grayscale PGM images.",
    )
    verbs = parser.add_subparsers(dest="verb", required=True)

    p = verbs.add_parser("embed", parents=[common], help="hide a payload in an original image")
    p.add_argument("original")
    p.add_argument("payload")
    p.set_defaults(handler=cmd_embed, needs_out=True)

    p = verbs.add_parser("extract", parents=[common], help="recover the payload from a stego image")
    p.add_argument("stego")
    p.set_defaults(handler=cmd_extract, needs_out=False)

    p = verbs.add_parser("recover", parents=[common], help="recover the original image")
    p.add_argument("stego")
    p.set_defaults(handler=cmd_recover, needs_out=True)

    p = verbs.add_parser("capacity", parents=[common], help="report embedding capacity")
    p.add_argument("original")
    p.add_argument("--verbose", action="store_true", help="also list i,j,n,min,max per pixel")
    p.set_defaults(handler=cmd_capacity, needs_out=False)

    p = verbs.add_parser("downscale", parents=[common], help="subsample an input image to its original")
    p.add_argument("input")
    p.set_defaults(handler=cmd_downscale, needs_out=True)

    p = verbs.add_parser("upscale", parents=[common], help="write the NMI cover image of an original")
    p.add_argument("original")
    p.set_defaults(handler=cmd_upscale, needs_out=True)

    p = verbs.add_parser(
        "bench",
        parents=[common],
        help="compare both schemes over a corpus",
        description=(
            "Run both schemes at full capacity on every PGM in a corpus. Unreadable images are "
            "logged as warnings and listed in the skipped= summary line; they get no CSV row."
        ),
    )
    p.add_argument("corpus_dir", help=CORPUS_HELP)
    p.add_argument("--payload", choices=PAYLOAD_POLICIES, default=PAYLOAD_RANDOM)
    p.add_argument("--payload-file", default=None, help="payload bytes for the fixed-file policy")
    p.add_argument("--originals", action="store_true", help="corpus images are already downscaled originals")
    p.add_argument("--workers", type=int, default=None, help="parallel worker processes")
    p.add_argument("--timing", action="store_true", default=None, help="record elapsed_ms (makes CSVs non-reproducible)")
    p.add_argument("--quiet", action="store_true", help="hide the progress bar")
    p.set_defaults(handler=cmd_bench, needs_out=False)
    return parser


def _fail(reason: str, message: str, code: int) -> int:
    print(f"{reason}: {message}", file=sys.stderr)
    return code


def run_app(argv: Optional[Sequence[str]] = None) -> int:
    """Parse ``argv``, run the chosen verb and return its exit status."""
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.needs_out and not args.out:
        parser.error(f"{args.verb} requires --out")

    try:
        settings = load_settings().override(
            seed=args.seed,
            scheme=args.scheme,
            workers=max(1, args.workers) if getattr(args, "workers", None) else None,
            log_level=args.log_level.upper() if args.log_level else None,
            timing=getattr(args, "timing", None),
        )
    except ValueError as exc:
        return _fail(REASON_USAGE, str(exc), EXIT_USAGE)
    settings.apply()
    if args.verb == "bench" and args.payload != PAYLOAD_RANDOM and not args.payload_file:
        return _fail(REASON_USAGE, "--payload fixed-file needs --payload-file", EXIT_USAGE)

    handler: Callable[[argparse.Namespace, RDHSettings], int] = args.handler
    try:
        return handler(args, settings)
    except RDHError as exc:
        return _fail(exc.reason, str(exc), exc.exit_code)
    except OSError as exc:
        return _fail(REASON_IO, str(exc), EXIT_IO)
    except ValueError as exc:
        return _fail(REASON_USAGE, str(exc), EXIT_USAGE)


__all__ = ["build_parser", "cmd_bench", "cmd_capacity", "cmd_embed", "cmd_extract", "cmd_recover", "run_app"]

"""Static values shared across the codecs, the bench harness and the CLI."""

from __future__ import annotations

HEADER_BITS = 32
PEAK_VALUE = 255
PGM_MAGIC = b"P5"
PGM_MAXVAL = 255

SCHEME_PROPOSED = "proposed"
SCHEME_JUNGYOO = "jungyoo"
SCHEMES = (SCHEME_PROPOSED, SCHEME_JUNGYOO)

PAYLOAD_RANDOM = "max-capacity-random"
PAYLOAD_FILE = "fixed-file"
PAYLOAD_POLICIES = (PAYLOAD_RANDOM, PAYLOAD_FILE)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_CAPACITY = 2
EXIT_CORRUPT = 3
EXIT_BAD_IMAGE = 4
EXIT_IO = 5

REASON_CAPACITY = "CAPACITY_EXCEEDED"
REASON_CORRUPT = "CORRUPT_STREAM"
REASON_BAD_IMAGE = "BAD_IMAGE"
REASON_IO = "IO"
REASON_USAGE = "USAGE"

BENCH_COLUMNS = (
    "image",
    "scheme",
    "width",
    "height",
    "bits",
    "bpp",
    "psnr_vs_input",
    "psnr_vs_cover",
    "elapsed_ms",
)
GAIN_COLUMNS = ("image", "gain_rate")
GAIN_MEAN_LABEL = "mean"

CORPUS_URL = "https://sipi.usc.edu/database/database.php?volume=misc"

CORPUS_HELP = (
    "Directory of binary PGM (P5) images. The standard 512x512 test photographs "
    f"(Baboon, Barbara, Boat, Goldhill, Jet, Lena, Sailboat) are available from {CORPUS_URL}; "
    "convert them to 8-bit PGM before benchmarking."
)

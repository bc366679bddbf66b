"""Golden vectors and a naive per-pixel reference implementation of both schemes.

The reference works on nested lists with plain loops and shares no code with
``src`` beyond the image type, so agreement with it is meaningful.
"""

from __future__ import annotations

from typing import List, Optional, Tuple

import numpy as np

from src.services.image_core import GrayImage

GOLDEN_ORIGINAL = [[152, 161], [185, 188]]
GOLDEN_COVER = [[152, 156, 161], [168, 158, 174], [185, 186, 188]]
GOLDEN_STEGO = [[152, 158, 161], [165, 166, 171], [185, 185, 188]]
GOLDEN_BITS = "110011010111010100"

Rows = List[List[int]]
Site = Tuple[int, int, int, int]  # i, j, base value, bit count


def random_image(rng: np.random.Generator, width: int, height: int) -> GrayImage:
    return GrayImage(rng.integers(0, 256, size=(height, width), dtype=np.uint8))


def _log2_floor(d: int) -> int:
    n = 0
    while (1 << (n + 1)) <= d:
        n += 1
    return n if d >= 2 else 0


def naive_nmi(original: Rows) -> Rows:
    rows, cols = len(original), len(original[0])
    c = [[0] * (2 * cols - 1) for _ in range(2 * rows - 1)]
    for m in range(rows):
        for n in range(cols):
            c[2 * m][2 * n] = original[m][n]
    for i in range(2 * rows - 1):
        for j in range(2 * cols - 1):
            if i % 2 == 0 and j % 2 == 1:
                c[i][j] = (c[i][j - 1] + c[i][j + 1]) // 2
            elif i % 2 == 1 and j % 2 == 0:
                c[i][j] = (c[i - 1][j] + c[i + 1][j]) // 2
    for i in range(1, 2 * rows - 1, 2):
        for j in range(1, 2 * cols - 1, 2):
            c[i][j] = (c[i - 1][j - 1] + c[i - 1][j] + c[i][j - 1]) // 3
    return c


def proposed_sites(image: Rows) -> List[Site]:
    sites = []
    for i in range(len(image)):
        for j in range(len(image[0])):
            if i % 2 == 0 and j % 2 == 0:
                continue
            if i % 2 == 0:
                ns = [image[i][j - 1], image[i][j + 1]]
            elif j % 2 == 0:
                ns = [image[i - 1][j], image[i + 1][j]]
            else:
                ns = [image[i - 1][j - 1], image[i - 1][j + 1], image[i + 1][j - 1]]
            sites.append((i, j, min(ns), _log2_floor(max(ns) - min(ns))))
    return sites


def jungyoo_sites(cover: Rows) -> List[Site]:
    sites = []
    for bi in range(0, len(cover) - 1, 2):
        for bj in range(0, len(cover[0]) - 1, 2):
            anchor = cover[bi][bj]
            for i, j in ((bi, bj + 1), (bi + 1, bj), (bi + 1, bj + 1)):
                base = cover[i][j]
                n = _log2_floor(abs(base - anchor))
                while n > 0 and base + (1 << n) - 1 > 255:
                    n -= 1
                sites.append((i, j, base, n))
    return sites


def _sites(scheme: str, image: Rows, cover: Rows) -> List[Site]:
    return proposed_sites(image) if scheme == "proposed" else jungyoo_sites(cover)


def naive_embed(scheme: str, original: Rows, bits: str, raw: bool) -> Optional[Rows]:
    """Stego rows, or None when the stream does not fit."""
    cover = naive_nmi(original)
    sites = _sites(scheme, cover, cover)
    stream = bits if raw else format(len(bits), "032b") + bits
    if len(stream) > sum(n for *_, n in sites):
        return None
    stego = [row[:] for row in cover]
    pos = 0
    for i, j, base, n in sites:
        if pos >= len(stream):
            break
        chunk = stream[pos : pos + n]
        stego[i][j] = base + (int(chunk, 2) if chunk else 0)
        pos += len(chunk)
    return stego


def _anchors(stego: Rows) -> Rows:
    return [row[0::2] for row in stego[0::2]]


def naive_extract_raw(scheme: str, stego: Rows) -> Optional[str]:
    """Full-width read of every site; None on an out-of-range pixel."""
    cover = naive_nmi(_anchors(stego))
    out = []
    for i, j, base, n in _sites(scheme, stego, cover):
        if n == 0:
            continue
        dec = stego[i][j] - base
        if dec < 0 or dec >= (1 << n):
            return None
        out.append(format(dec, f"0{n}b"))
    return "".join(out)


def naive_extract_header(scheme: str, stego: Rows) -> Optional[str]:
    """Try every payload length and keep the one the stego image is consistent with."""
    cover = naive_nmi(_anchors(stego))
    sites = _sites(scheme, stego, cover)
    total = sum(n for *_, n in sites)
    for length in range(0, total - 32 + 1):
        need = 32 + length
        pos, out, ok = 0, [], True
        for i, j, base, n in sites:
            if pos >= need:
                break
            r = min(n, need - pos)
            dec = stego[i][j] - base
            if r and (dec < 0 or dec >= (1 << r)):
                ok = False
                break
            if r:
                out.append(format(dec, f"0{r}b"))
            pos += r
        stream = "".join(out)
        if ok and int(stream[:32], 2) == length:
            return stream[32:]
    return None

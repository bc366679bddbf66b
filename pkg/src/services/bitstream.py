"""MSB-first bit strings with a read cursor, plus per-pixel group packing."""

from __future__ import annotations

from typing import Iterable, Optional

import numpy as np

from ..errors import BitStreamExhaustedError

MAX_GROUP = 8


class BitString:
    """Ordered bits (0/1) with a cursor for sequential reads."""

    def __init__(self, bits: Optional[Iterable[int]] = None) -> None:
        if bits is None:
            array = np.zeros(0, dtype=np.uint8)
        elif isinstance(bits, np.ndarray):
            array = bits.astype(np.uint8).ravel()
        else:
            array = np.fromiter((int(b) for b in bits), dtype=np.uint8)
        if array.size and int(array.max()) > 1:
            raise ValueError("bit values must be 0 or 1")
        array.setflags(write=False)
        self.bits = array
        self.cursor = 0

    @classmethod
    def from_bytes(cls, data: bytes) -> "BitString":
        return cls(np.unpackbits(np.frombuffer(bytes(data), dtype=np.uint8)))

    @classmethod
    def from_text(cls, text: str) -> "BitString":
        """Parse an ASCII '0'/'1' dump; whitespace is ignored."""
        cleaned = "".join(text.split())
        invalid = set(cleaned) - {"0", "1"}
        if invalid:
            raise ValueError(f"bit text may only contain 0 and 1, found {sorted(invalid)!r}")
        return cls(np.frombuffer(cleaned.encode("ascii"), dtype=np.uint8) - ord("0"))

    @classmethod
    def from_int(cls, value: int, width: int) -> "BitString":
        if value < 0 or value >= (1 << width):
            raise ValueError(f"{value} does not fit in {width} bits")
        return cls((value >> (width - 1 - t)) & 1 for t in range(width))

    @classmethod
    def random(cls, length: int, rng: np.random.Generator) -> "BitString":
        return cls(rng.integers(0, 2, size=length, dtype=np.uint8))

    def __len__(self) -> int:
        return int(self.bits.size)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, BitString):
            return bool(np.array_equal(self.bits, other.bits))
        if isinstance(other, str):
            return self.to_text() == other
        return NotImplemented

    def __repr__(self) -> str:
        text = self.to_text()
        return f"BitString({text[:64]!r}{'...' if len(text) > 64 else ''})"

    def __add__(self, other: "BitString") -> "BitString":
        return BitString(np.concatenate([self.bits, other.bits]))

    @property
    def remaining(self) -> int:
        return len(self) - self.cursor

    def read(self, count: int) -> "BitString":
        if count < 0 or count > self.remaining:
            raise BitStreamExhaustedError(
                f"cannot read {count} bits at position {self.cursor}; {self.remaining} left"
            )
        chunk = BitString(self.bits[self.cursor : self.cursor + count])
        self.cursor += count
        return chunk

    def read_int(self, count: int) -> int:
        return self.read(count).value()

    def value(self) -> int:
        """MSB-first integer value of the whole string."""
        result = 0
        for bit in self.bits.tolist():
            result = (result << 1) | bit
        return result

    def to_text(self) -> str:
        return (self.bits + ord("0")).tobytes().decode("ascii")

    def to_bytes(self) -> bytes:
        if len(self) % 8:
            raise ValueError(f"{len(self)} bits do not form whole bytes")
        return np.packbits(self.bits).tobytes()


def pack_groups(bits: np.ndarray, widths: np.ndarray) -> np.ndarray:
    """Consume ``widths[k]`` bits per group in order; return each group's MSB-first value."""
    widths = np.asarray(widths, dtype=np.int64)
    bits = np.asarray(bits, dtype=np.int64)
    if int(widths.sum()) != bits.size:
        raise ValueError(f"group widths sum to {int(widths.sum())}, stream has {bits.size} bits")
    if widths.size == 0 or bits.size == 0:
        return np.zeros(widths.size, dtype=np.int64)
    offsets = np.cumsum(widths) - widths
    lane = np.arange(MAX_GROUP)
    mask = lane[None, :] < widths[:, None]
    index = np.minimum(offsets[:, None] + lane[None, :], bits.size - 1)
    shifts = np.where(mask, widths[:, None] - 1 - lane[None, :], 0)
    gathered = np.where(mask, bits[index], 0)
    return (gathered << shifts).sum(axis=1)


def unpack_groups(values: np.ndarray, widths: np.ndarray) -> np.ndarray:
    """Inverse of :func:`pack_groups`: concatenated MSB-first encodings of each value."""
    widths = np.asarray(widths, dtype=np.int64)
    values = np.asarray(values, dtype=np.int64)
    if widths.size == 0:
        return np.zeros(0, dtype=np.uint8)
    lane = np.arange(MAX_GROUP)
    mask = lane[None, :] < widths[:, None]
    shifts = np.where(mask, widths[:, None] - 1 - lane[None, :], 0)
    grid = (values[:, None] >> shifts) & 1
    return grid[mask].astype(np.uint8)


__all__ = ["BitString", "pack_groups", "unpack_groups"]

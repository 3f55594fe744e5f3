"""Bit and symbol streams and their text file format."""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path
from typing import Union

import numpy as np

from .matcore import FormatError

LINE_WIDTH = 64
_HEADER = re.compile(r"# model=(\S+) seed=(\d+) length=(\d+)")


@dataclass(frozen=True, eq=False)
class BitStream:
    """Symbols in 0..alphabet-1 (bits when alphabet == 2) plus source metadata."""

    symbols: np.ndarray
    alphabet: int = 2
    model: str = "unknown"
    seed: int = 0

    def __post_init__(self):
        a = np.asarray(self.symbols)
        if a.ndim != 1:
            raise ValueError("stream must be one-dimensional")
        if a.size and (a.min() < 0 or a.max() >= self.alphabet):
            raise ValueError(f"symbols must lie in [0, {self.alphabet})")
        a = a.astype(np.uint8 if self.alphabet <= 256 else np.int64)
        a.setflags(write=False)
        object.__setattr__(self, "symbols", a)

    @classmethod
    def from_string(cls, s: str, **meta) -> "BitStream":
        return cls(np.frombuffer(s.encode("ascii"), dtype=np.uint8) - ord("0"), **meta)

    def __len__(self) -> int:
        return self.symbols.size

    def __eq__(self, other):
        if not isinstance(other, BitStream):
            return NotImplemented
        return self.alphabet == other.alphabet and np.array_equal(self.symbols, other.symbols)

    def __str__(self) -> str:
        return (self.symbols.astype(np.uint8) + ord("0")).tobytes().decode("ascii")

    @property
    def is_binary(self) -> bool:
        return self.alphabet == 2


def to_binary(s: BitStream) -> BitStream:
    """Expand each symbol into log2(alphabet) bits, most significant first.

    Only defined for power-of-two alphabets, so that every bit stays unbiased
    when the symbols are.
    """
    a = s.alphabet
    if a < 2 or a & (a - 1):
        raise ValueError(f"binary expansion needs a power-of-two alphabet, got {a}")
    width = a.bit_length() - 1
    shifts = np.arange(width - 1, -1, -1)
    bits = (s.symbols.astype(np.int64)[:, None] >> shifts) & 1
    return BitStream(bits.ravel(), 2, model=f"binary({s.model})", seed=s.seed)


def format_stream(s: BitStream) -> str:
    if s.alphabet > 10:
        raise ValueError("streams with more than 10 symbols cannot be written as digits; "
                         "expand to binary first")
    body = str(s)
    lines = [f"# model={s.model} seed={s.seed} length={len(s)}"]
    lines += [body[i:i + LINE_WIDTH] for i in range(0, len(body), LINE_WIDTH)]
    return "\n".join(lines) + "\n"


def parse_stream(text: str) -> BitStream:
    """Parse a stream file; '#' lines are comments and newlines are ignored.

    The alphabet is the larger of 2 and one more than the largest digit.
    """
    model, seed, declared = "unknown", 0, None
    chunks = []
    for line in text.split("\n"):
        if line.startswith("#"):
            m = _HEADER.fullmatch(line)
            if m and declared is None:
                model, seed, declared = m.group(1), int(m.group(2)), int(m.group(3))
            continue
        if line and not line.isdigit():
            raise FormatError(f"unexpected characters in stream line {line[:20]!r}")
        chunks.append(line)
    body = "".join(chunks)
    symbols = np.frombuffer(body.encode("ascii"), dtype=np.uint8) - ord("0")
    if declared is not None and declared != symbols.size:
        raise FormatError(f"header declares {declared} symbols, found {symbols.size}")
    alphabet = max(2, int(symbols.max()) + 1) if symbols.size else 2
    return BitStream(symbols, alphabet, model=model, seed=seed)


def read_stream(path: Union[str, Path]) -> BitStream:
    return parse_stream(Path(path).read_text(encoding="utf-8"))


def write_stream(path: Union[str, Path], s: BitStream) -> None:
    Path(path).write_bytes(format_stream(s).encode("utf-8"))

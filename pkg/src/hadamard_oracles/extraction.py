"""Von Neumann debiasing and finite-string Borel normality.

The normality test uses the finite form common in algorithmic randomness:
for a string of n bits, every block x of length m <= floor(log2 log2 n),
counted over the floor(n/m) non-overlapping m-blocks, must occur with
frequency within sqrt(log2(n) / n) of 2**-m.  It says nothing about whether
the bits fed to the extractor are actually independent.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .bitstream import BitStream
from .matcore import TestReport

MONOBIT_SIGMAS = 4.0


def _require_binary(s: BitStream) -> np.ndarray:
    if not s.is_binary:
        raise ValueError(f"expected a bit stream, got alphabet of size {s.alphabet}")
    return s.symbols


def von_neumann_extract(s: BitStream) -> BitStream:
    """Map pairs 01 -> 0 and 10 -> 1; drop 00, 11 and any trailing odd bit."""
    bits = _require_binary(s)
    pairs = bits[: bits.size // 2 * 2].reshape(-1, 2)
    keep = pairs[:, 0] != pairs[:, 1]
    return BitStream(pairs[keep, 0], 2, model=f"vonneumann({s.model})", seed=s.seed)


@dataclass(frozen=True)
class BorelParameters:
    n_bits: int
    m_max: int
    threshold: float

    @classmethod
    def for_length(cls, n_bits: int) -> "BorelParameters":
        if n_bits < 4:
            raise ValueError(f"Borel normality needs at least 4 bits, got {n_bits}")
        log_n = math.log2(n_bits)
        return cls(n_bits, math.floor(math.log2(log_n)), math.sqrt(log_n / n_bits))


def block_counts(bits: np.ndarray, m: int) -> np.ndarray:
    """Occurrences of each m-bit block (indexed by its binary value) among
    the non-overlapping blocks."""
    blocks = bits[: bits.size // m * m].reshape(-1, m).astype(np.int64)
    values = blocks @ (1 << np.arange(m - 1, -1, -1))
    return np.bincount(values, minlength=1 << m)


def borel_normality_test(s: BitStream, threshold: float | None = None) -> TestReport:
    """Check every block frequency for m = 1..m_max against the threshold.

    ``threshold`` overrides the default sqrt(log2(n)/n); the block lengths
    tested do not change.
    """
    bits = _require_binary(s)
    params = BorelParameters.for_length(bits.size)
    limit = params.threshold if threshold is None else threshold
    details = []
    passed = True
    for m in range(1, params.m_max + 1):
        counts = block_counts(bits, m)
        n_blocks = bits.size // m
        for value, count in enumerate(counts):
            freq = int(count) / n_blocks
            dev = abs(freq - 2.0**-m)
            passed &= dev <= limit
            details.append({"m": m, "x": format(value, f"0{m}b"), "freq": freq, "dev": dev})
    return TestReport(
        "borel",
        passed=bool(passed),
        details=details,
        summary={"n_bits": params.n_bits, "m_max": params.m_max, "threshold": limit},
    )


def monobit_summary(s: BitStream) -> TestReport:
    """Ones-frequency and its distance from 1/2 in units of 0.5/sqrt(n); passes within 4."""
    bits = _require_binary(s)
    if bits.size < 1:
        raise ValueError("monobit summary needs at least one bit")
    freq = float(bits.sum()) / bits.size
    sigma = 0.5 / math.sqrt(bits.size)
    z = (freq - 0.5) / sigma
    return TestReport(
        "monobit",
        passed=abs(z) <= MONOBIT_SIGMAS,
        summary={"n_bits": int(bits.size), "freq": freq, "sigma": sigma, "dev_sigma": z},
    )

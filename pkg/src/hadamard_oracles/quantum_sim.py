"""Beam splitters acting on a single quantum, and seeded simulated bit sources."""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .bitstream import BitStream
from .matcore import (
    TIGHT_TOL,
    TOL,
    PhaseMatrix,
    StateVector,
    TestReport,
    UnitaryDense,
    mat_apply,
    phase_to_unitary,
)
from .rng import MASK64, SplitMix64
from .schwinger import is_complex_hadamard, schwinger_basis


@dataclass(frozen=True)
class BeamSplitter:
    """An n-port lossless splitter; use ``beamsplitter_from`` to get a checked one."""

    unitary: UnitaryDense

    @property
    def n(self) -> int:
        return self.unitary.n


def beamsplitter_from(p: PhaseMatrix) -> BeamSplitter:
    """Splitter whose unitary is the complex Hadamard matrix ``p`` scaled by 1/sqrt(n)."""
    if not is_complex_hadamard(p):
        raise ValueError("phase matrix is not a complex Hadamard matrix")
    u = phase_to_unitary(p, normalize=True)
    if not u.unitary:
        raise ValueError("normalized phase matrix failed the unitarity check")
    return BeamSplitter(u)


def output_distribution(b: BeamSplitter, input_port: int) -> np.ndarray:
    """Detection probabilities at each output port for a quantum entering ``input_port``."""
    if not 0 <= input_port < b.n:
        raise ValueError(f"input port must be in [0, {b.n}), got {input_port}")
    probs = np.abs(b.unitary.entries[:, input_port]) ** 2
    if abs(probs.sum() - 1.0) > TIGHT_TOL:
        raise ValueError(f"column {input_port} is not normalized (sum {probs.sum()!r})")
    return probs


def mach_zehnder_check(b: BeamSplitter, v: StateVector) -> TestReport:
    """Send ``v`` through U and then U^dagger; pass iff the input comes back."""
    if v.n != b.n:
        raise ValueError(f"dimension mismatch: splitter has {b.n} ports, state has {v.n}")
    u = b.unitary
    out = mat_apply(u.dagger, mat_apply(u, v))
    err = float(np.linalg.norm(out.amplitudes - v.amplitudes))
    return TestReport("mach_zehnder", passed=err <= TOL, summary={"n": b.n, "error": err})


def random_state(n: int, seed: int) -> StateVector:
    """Normalized complex Gaussian state, reproducible from ``seed``."""
    rng = np.random.default_rng(seed)
    a = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    return StateVector(a / np.linalg.norm(a))


# ------------------------------------------------------------------ sources

class Model(enum.Enum):
    BEAMSPLITTER = "beamsplitter"
    SYMMETRY_BREAK = "symmetry"
    EMISSION = "emission"


@dataclass(frozen=True)
class GapSourceConfig:
    """A simulated source of coded outcomes.

    BEAMSPLITTER uses ``n`` and ``input_port``; SYMMETRY_BREAK uses ``p`` as
    the probability of falling to side 1; EMISSION uses ``p`` as the
    per-step probability that a photon is emitted (coded 1).
    """

    model: Model
    seed: int
    length: int
    n: int = 2
    input_port: int = 0
    p: float = 0.5

    def __post_init__(self):
        if not 0 <= self.seed <= MASK64:
            raise ValueError(f"seed must be an unsigned 64-bit integer, got {self.seed}")
        if self.length < 0:
            raise ValueError(f"length must be non-negative, got {self.length}")
        if not 0.0 <= self.p <= 1.0:
            raise ValueError(f"probability must lie in [0, 1], got {self.p}")
        if self.n < 1:
            raise ValueError(f"port count must be positive, got {self.n}")
        if not 0 <= self.input_port < self.n:
            raise ValueError(f"input port must be in [0, {self.n}), got {self.input_port}")

    def label(self) -> str:
        if self.model is Model.BEAMSPLITTER:
            return f"beamsplitter(n={self.n},port={self.input_port})"
        return f"{self.model.value}(p={self.p!r})"


def sample_bits(cfg: GapSourceConfig) -> BitStream:
    """Draw ``cfg.length`` outcomes from SplitMix64 seeded with ``cfg.seed``.

    Beam-splitter outcomes are port indices chosen by inverse CDF over the
    output distribution (symbols 0..n-1); the other models emit 1 when the
    uniform draw falls below ``p``.
    """
    u = SplitMix64(cfg.seed).uniforms(cfg.length)
    if cfg.model is Model.BEAMSPLITTER:
        splitter = beamsplitter_from(schwinger_basis(cfg.n))
        cdf = np.cumsum(output_distribution(splitter, cfg.input_port))
        cdf[-1] = 1.0
        symbols = np.searchsorted(cdf, u, side="right")
        alphabet = max(cfg.n, 2)
    else:
        symbols = u < cfg.p
        alphabet = 2
    return BitStream(symbols, alphabet, model=cfg.label(), seed=cfg.seed)

"""Exact sign/phase matrices, dense unitaries, and the .smat/.pmat file formats.

Matrix entries are kept exact (signs as integers, phases as integer numerators
over a common denominator); inner products and norms are evaluated in double
precision against the fixed tolerances below.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Final, Union

import numpy as np

TOL: Final[float] = 1e-9
TIGHT_TOL: Final[float] = 1e-12


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.array(a, copy=True)
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class SignMatrix:
    """Square matrix with entries in {-1, +1}."""

    entries: np.ndarray

    def __post_init__(self):
        a = np.asarray(self.entries)
        if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
            raise ValueError(f"sign matrix must be square and non-empty, got shape {a.shape}")
        if not np.all((a == 1) | (a == -1)):
            raise ValueError("sign matrix entries must be exactly -1 or +1")
        object.__setattr__(self, "entries", _frozen(a.astype(np.int8)))

    @property
    def n(self) -> int:
        return self.entries.shape[0]

    def __eq__(self, other):
        if not isinstance(other, SignMatrix):
            return NotImplemented
        return np.array_equal(self.entries, other.entries)

    def __hash__(self):
        return hash(self.entries.tobytes())

    def __repr__(self):
        return f"SignMatrix(n={self.n})"


@dataclass(frozen=True, eq=False)
class PhaseMatrix:
    """Square matrix of roots of unity; entry m stands for exp(2*pi*i*m/d)."""

    entries: np.ndarray
    d: int

    def __post_init__(self):
        a = np.asarray(self.entries)
        if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
            raise ValueError(f"phase matrix must be square and non-empty, got shape {a.shape}")
        if not isinstance(self.d, (int, np.integer)) or self.d < 1:
            raise ValueError(f"phase denominator must be a positive integer, got {self.d!r}")
        if not np.issubdtype(a.dtype, np.integer):
            if not np.all(a == np.round(a)):
                raise ValueError("phase numerators must be integers")
        a = a.astype(np.int64)
        if a.min() < 0 or a.max() >= self.d:
            raise ValueError(f"phase numerators must lie in [0, {self.d})")
        object.__setattr__(self, "d", int(self.d))
        object.__setattr__(self, "entries", _frozen(a))

    @property
    def n(self) -> int:
        return self.entries.shape[0]

    def with_denominator(self, d: int) -> "PhaseMatrix":
        """Re-express the phases over denominator ``d`` (a multiple of ``self.d``)."""
        if d % self.d:
            raise ValueError(f"denominator {d} is not a multiple of {self.d}")
        return PhaseMatrix(self.entries * (d // self.d), d)

    def phase(self, j: int, k: int) -> Fraction:
        return Fraction(int(self.entries[j, k]), self.d)

    def __eq__(self, other):
        # equal as matrices of roots of unity, regardless of denominator
        if not isinstance(other, PhaseMatrix):
            return NotImplemented
        if self.n != other.n:
            return False
        return np.array_equal(self.entries * other.d, other.entries * self.d)

    def reduced(self) -> "PhaseMatrix":
        """Same matrix over the smallest denominator that expresses every entry."""
        g = math.gcd(self.d, *(int(x) for x in np.unique(self.entries)))
        return PhaseMatrix(self.entries // g, self.d // g)

    def __hash__(self):
        r = self.reduced()
        return hash((r.d, r.entries.tobytes()))

    def __repr__(self):
        return f"PhaseMatrix(n={self.n}, d={self.d})"


@dataclass(frozen=True, eq=False)
class StateVector:
    amplitudes: np.ndarray
    normalized: bool = True

    def __post_init__(self):
        a = np.asarray(self.amplitudes, dtype=complex)
        if a.ndim != 1 or a.size < 1:
            raise ValueError("state vector must be one-dimensional and non-empty")
        if self.normalized and abs(np.vdot(a, a).real - 1.0) > TOL:
            raise ValueError("state flagged normalized but has squared norm "
                             f"{np.vdot(a, a).real!r}")
        object.__setattr__(self, "amplitudes", _frozen(a))

    @property
    def n(self) -> int:
        return self.amplitudes.size

    @classmethod
    def basis(cls, n: int, i: int) -> "StateVector":
        """Standard basis vector e_i (0-based)."""
        a = np.zeros(n, dtype=complex)
        a[i] = 1.0
        return cls(a)

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))


@dataclass(frozen=True, eq=False)
class UnitaryDense:
    """Dense complex matrix; when ``unitary`` is set, U^dagger U = I is enforced."""

    entries: np.ndarray
    unitary: bool = True

    def __post_init__(self):
        a = np.asarray(self.entries, dtype=complex)
        if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
            raise ValueError(f"matrix must be square and non-empty, got shape {a.shape}")
        object.__setattr__(self, "entries", _frozen(a))
        if self.unitary and unitarity_defect(self) > TOL:
            raise ValueError(f"matrix flagged unitary has defect {unitarity_defect(self):.3g}")

    @property
    def n(self) -> int:
        return self.entries.shape[0]

    @property
    def dagger(self) -> "UnitaryDense":
        return UnitaryDense(self.entries.conj().T, unitary=self.unitary)

    @classmethod
    def identity(cls, n: int) -> "UnitaryDense":
        return cls(np.eye(n, dtype=complex))


def unitarity_defect(u: UnitaryDense) -> float:
    """max |(U^dagger U - I)_jk|."""
    a = u.entries
    return float(np.abs(a.conj().T @ a - np.eye(a.shape[0])).max())


@dataclass
class TestReport:
    """Pass/fail verdict with one line of detail per individual check."""

    __test__ = False  # keep pytest from collecting this class

    name: str
    passed: bool
    details: list[dict] = field(default_factory=list)
    summary: dict = field(default_factory=dict)

    def to_text(self) -> str:
        lines = [f"verdict: {'PASS' if self.passed else 'FAIL'}"]
        for d in self.details:
            lines.append("detail: " + " ".join(f"{k}={_fmt(v)}" for k, v in d.items()))
        for key, value in self.summary.items():
            lines.append(f"{key}: {_fmt(value)}")
        return "\n".join(lines) + "\n"


def _fmt(v) -> str:
    if isinstance(v, (float, np.floating)):
        return repr(float(v))
    return str(v)


def sign_gram(h: SignMatrix) -> np.ndarray:
    """Return H @ H.T as an exact integer matrix.

    The product is formed with a floating-point BLAS call: every partial sum
    is an integer of magnitude at most n, far below 2**53, so the result is
    exact.
    """
    a = h.entries.astype(np.float64)
    return (a @ a.T).astype(np.int64)


def phase_to_unitary(p: PhaseMatrix, normalize: bool = True) -> UnitaryDense:
    """Materialize exp(2*pi*i*m/d) entrywise, scaled by 1/sqrt(n) if ``normalize``.

    The unitary flag is set only on a normalized result that passes the
    unitarity check.
    """
    # reduce m/d through (m mod d)/d in exact integers before going to floats
    theta = 2.0 * np.pi * (p.entries % p.d) / p.d
    a = np.cos(theta) + 1j * np.sin(theta)
    if not normalize:
        return UnitaryDense(a, unitary=False)
    u = UnitaryDense(a / math.sqrt(p.n), unitary=False)
    if unitarity_defect(u) <= TOL:
        u = UnitaryDense(u.entries, unitary=True)
    return u


def mat_apply(u: UnitaryDense, v: StateVector) -> StateVector:
    if u.n != v.n:
        raise ValueError(f"dimension mismatch: matrix is {u.n}x{u.n}, vector has {v.n}")
    out = u.entries @ v.amplitudes
    return StateVector(out, normalized=v.normalized and u.unitary)


PhaseLike = Union[Fraction, tuple[int, int]]


def as_phase(x: PhaseLike) -> Fraction:
    """Reduced phase in [0, 1); accepts a Fraction or an ``(m, d)`` pair."""
    if isinstance(x, Fraction):
        f = x
    else:
        m, d = x
        if d < 1:
            raise ValueError(f"phase denominator must be positive, got {d}")
        f = Fraction(m, d)
    return f - math.floor(f)


def phase_mul(a: PhaseLike, b: PhaseLike) -> Fraction:
    """Product of two roots of unity given as rational phases.

    >>> phase_mul((1, 8), (2, 8))
    Fraction(3, 8)
    >>> phase_mul((1, 2), (1, 2))
    Fraction(0, 1)
    """
    return as_phase(as_phase(a) + as_phase(b))


def sign_to_phase(h: SignMatrix) -> PhaseMatrix:
    """Embed a sign matrix as phases over d=2 (+1 -> 0, -1 -> 1)."""
    return PhaseMatrix((h.entries < 0).astype(np.int64), 2)


# ---------------------------------------------------------------- file formats

_UINT = r"(0|[1-9][0-9]*)"
_SMAT_HEADER = re.compile(rf"H {_UINT}")
_PMAT_HEADER = re.compile(rf"P {_UINT} {_UINT}")
_PMAT_ROW_ENTRY = re.compile(_UINT)


class FormatError(ValueError):
    """Raised when a matrix or bit-stream file deviates from its format."""


def _split_lines(text: str) -> list[str]:
    if "\r" in text:
        raise FormatError("carriage returns are not allowed")
    if not text.endswith("\n"):
        raise FormatError("file must end with a newline")
    return text[:-1].split("\n")


def format_smat(h: SignMatrix) -> str:
    rows = ["".join("+" if x > 0 else "-" for x in row) for row in h.entries]
    return f"H {h.n}\n" + "".join(r + "\n" for r in rows)


def parse_smat(text: str) -> SignMatrix:
    lines = _split_lines(text)
    m = _SMAT_HEADER.fullmatch(lines[0])
    if not m:
        raise FormatError(f"bad .smat header {lines[0]!r}")
    n = int(m.group(1))
    if n < 1:
        raise FormatError("order must be at least 1")
    if len(lines) != n + 1:
        raise FormatError(f"expected {n} rows, found {len(lines) - 1}")
    rows = []
    for i, line in enumerate(lines[1:], start=1):
        if len(line) != n or set(line) - {"+", "-"}:
            raise FormatError(f"row {i}: expected {n} characters from '+-', got {line!r}")
        rows.append([1 if c == "+" else -1 for c in line])
    return SignMatrix(np.array(rows, dtype=np.int8))


def format_pmat(p: PhaseMatrix) -> str:
    rows = [" ".join(str(int(x)) for x in row) for row in p.entries]
    return f"P {p.n} {p.d}\n" + "".join(r + "\n" for r in rows)


def parse_pmat(text: str) -> PhaseMatrix:
    lines = _split_lines(text)
    m = _PMAT_HEADER.fullmatch(lines[0])
    if not m:
        raise FormatError(f"bad .pmat header {lines[0]!r}")
    n, d = int(m.group(1)), int(m.group(2))
    if n < 1 or d < 1:
        raise FormatError("order and denominator must be at least 1")
    if len(lines) != n + 1:
        raise FormatError(f"expected {n} rows, found {len(lines) - 1}")
    rows = []
    for i, line in enumerate(lines[1:], start=1):
        fields = line.split(" ")
        if len(fields) != n or not all(_PMAT_ROW_ENTRY.fullmatch(f) for f in fields):
            raise FormatError(f"row {i}: expected {n} space-separated integers, got {line!r}")
        vals = [int(f) for f in fields]
        if max(vals) >= d:
            raise FormatError(f"row {i}: phase numerator out of range [0, {d})")
        rows.append(vals)
    return PhaseMatrix(np.array(rows, dtype=np.int64), d)


def read_matrix(path: Union[str, Path]) -> Union[SignMatrix, PhaseMatrix]:
    """Read a .smat or .pmat file, dispatching on the header letter."""
    data = Path(path).read_bytes()
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise FormatError(f"{path}: not valid UTF-8") from exc
    if text.startswith("H "):
        return parse_smat(text)
    if text.startswith("P "):
        return parse_pmat(text)
    raise FormatError(f"{path}: unrecognised matrix header")


def write_matrix(path: Union[str, Path], m: Union[SignMatrix, PhaseMatrix]) -> None:
    text = format_smat(m) if isinstance(m, SignMatrix) else format_pmat(m)
    Path(path).write_bytes(text.encode("utf-8"))

"""Bases unbiased to the standard basis via the cyclic shift, and a Dita-style explorer.

The shift maps the standard basis onto its cyclic relabelling
f_i = e_{i+1 mod n}; the unitary U = sum_i |e_i><f_i| has the Fourier vectors
v_k[j] = exp(2*pi*i*k*j/n) / sqrt(n) as eigenvectors (eigenvalue
exp(2*pi*i*k/n)), so the construction is exact over denominator n.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Union

import numpy as np

from .matcore import (
    TOL,
    PhaseMatrix,
    SignMatrix,
    TestReport,
    UnitaryDense,
    phase_to_unitary,
)

SCHWINGER_MAX_N = 4096

Basis = Union[PhaseMatrix, UnitaryDense]


def shifted_basis(n: int) -> np.ndarray:
    """Rows f_1..f_n: the standard basis cyclically shifted by one."""
    return np.roll(np.eye(n), 1, axis=1)


def shift_operator(n: int) -> UnitaryDense:
    """U = sum_i |e_i><f_i| for the shifted basis f."""
    e = np.eye(n)
    f = shifted_basis(n)
    return UnitaryDense(sum(np.outer(e[i], f[i]) for i in range(n)))


def schwinger_basis(n: int) -> PhaseMatrix:
    """Eigenbasis of the cyclic shift as an exact complex Hadamard matrix.

    Row k holds the phases (k*j mod n)/n of the eigenvector with eigenvalue
    exp(2*pi*i*k/n); rows are in ascending order of that eigenphase.
    """
    if not 1 <= n <= SCHWINGER_MAX_N:
        raise ValueError(f"n must be in [1, {SCHWINGER_MAX_N}], got {n}")
    k = np.arange(n, dtype=np.int64)
    return PhaseMatrix(np.outer(k, k) % n, n)


def identity_basis(n: int) -> UnitaryDense:
    return UnitaryDense.identity(n)


def _rows(b: Basis) -> np.ndarray:
    """Orthonormalised basis vectors as rows (phase rows get the 1/sqrt(n) factor)."""
    if isinstance(b, PhaseMatrix):
        return phase_to_unitary(b, normalize=True).entries
    return b.entries


def is_complex_hadamard(p: PhaseMatrix) -> bool:
    a = phase_to_unitary(p, normalize=False).entries
    gram = a @ a.conj().T
    off = gram - np.diag(np.diag(gram))
    return bool(np.abs(off).max(initial=0.0) <= TOL * p.n)


def unbiased_check(a: Basis, b: Basis) -> TestReport:
    """Check |<a_i|b_j>|^2 == 1/n for every pair of normalized basis vectors.

    Either argument may be a phase matrix (rows scaled by 1/sqrt(n)) or a
    dense matrix whose rows are already orthonormal, e.g. ``identity_basis(n)``.
    Failing pairs are listed in the report details.
    """
    ra, rb = _rows(a), _rows(b)
    if ra.shape != rb.shape:
        raise ValueError(f"dimension mismatch: {ra.shape[0]} vs {rb.shape[0]}")
    n = ra.shape[0]
    overlaps = np.abs(ra.conj() @ rb.T) ** 2
    dev = np.abs(overlaps - 1.0 / n)
    bad = np.argwhere(dev > TOL)
    details = [
        {"i": int(i), "j": int(j), "overlap": float(overlaps[i, j]), "dev": float(dev[i, j])}
        for i, j in bad
    ]
    return TestReport(
        "unbiased",
        passed=len(bad) == 0,
        details=details,
        summary={"n": n, "max_dev": float(dev.max())},
    )


def equiv_rows_phase(a: PhaseMatrix, b: PhaseMatrix) -> bool:
    """True iff some row permutation of ``a`` equals ``b`` up to a phase per row.

    Comparison is exact, over the least common denominator of the two
    matrices.
    """
    if a.n != b.n:
        return False
    L = math.lcm(a.d, b.d)
    ea = a.with_denominator(L).entries
    eb = b.with_denominator(L).entries
    n = a.n
    # compatible[k]: rows of a that differ from row k of b by a constant phase
    compatible = []
    for k in range(n):
        diff = (ea - eb[k]) % L
        compatible.append(np.flatnonzero((diff == diff[:, :1]).all(axis=1)).tolist())
    order = sorted(range(n), key=lambda k: len(compatible[k]))
    used = [False] * n

    def assign(t: int) -> bool:
        if t == n:
            return True
        for i in compatible[order[t]]:
            if not used[i]:
                used[i] = True
                if assign(t + 1):
                    return True
                used[i] = False
        return False

    return assign(0)


# ------------------------------------------------------------ Dita explorer

@dataclass
class DitaReport:
    """Assignments of the sign/angle parameterization giving real Hadamard matrices.

    A hit is a triple of bit strings (D0 signs, rotation angles, D1 signs);
    bit 0 means +1 or +pi/4, bit 1 means -1 or -pi/4.  Angles follow the
    lexicographic order of the coordinate planes (i, j), i < j.
    """

    n: int
    assignments_tested: int
    hadamard_hits: list[tuple[str, str, str]] = field(default_factory=list)

    def to_text(self) -> str:
        lines = [f"tested: {self.assignments_tested}"]
        lines += [f"hit: {d0} {th} {d1}" for d0, th, d1 in self.hadamard_hits]
        return "\n".join(lines) + "\n"


def planes(n: int) -> list[tuple[int, int]]:
    return list(itertools.combinations(range(n), 2))


def plane_rotation(n: int, i: int, j: int, theta: float) -> np.ndarray:
    g = np.eye(n)
    c, s = math.cos(theta), math.sin(theta)
    g[i, i] = g[j, j] = c
    g[i, j] = -s
    g[j, i] = s
    return g


def _words(k: int) -> list[str]:
    return ["".join(w) for w in itertools.product("01", repeat=k)]


def _signs(bits: str) -> np.ndarray:
    return np.array([1.0 if b == "0" else -1.0 for b in bits])


def dita_matrix(n: int, d0: str, thetas: str, d1: str) -> np.ndarray:
    """D0 @ G_(0,1) @ G_(0,2) @ ... @ G_(n-2,n-1) @ D1 for one bit assignment."""
    r = np.eye(n)
    for (i, j), bit in zip(planes(n), thetas):
        r = r @ plane_rotation(n, i, j, math.pi / 4 if bit == "0" else -math.pi / 4)
    return np.diag(_signs(d0)) @ r @ np.diag(_signs(d1))


def is_scaled_sign_matrix(u: np.ndarray) -> bool:
    """True iff sqrt(n) * u has every entry within TOL of -1 or +1."""
    scaled = math.sqrt(u.shape[0]) * u
    return bool(np.all(np.abs(np.abs(scaled) - 1.0) <= TOL))


def hit_to_sign_matrix(n: int, hit: tuple[str, str, str]) -> SignMatrix:
    return SignMatrix(np.sign(dita_matrix(n, *hit)).astype(np.int8))


def dita_explore(n: int) -> DitaReport:
    """Enumerate every sign/angle assignment and record the real Hadamard hits.

    Only evidence is gathered; nothing is assumed about whether hits exist.
    """
    if n not in (2, 4):
        raise ValueError(f"n must be 2 or 4, got {n}")
    n_planes = n * (n - 1) // 2
    rotations = {th: dita_matrix(n, "0" * n, th, "0" * n) for th in _words(n_planes)}
    tested = 0
    hits = []
    for d0 in _words(n):
        s0 = _signs(d0)
        for th, r in rotations.items():
            for d1 in _words(n):
                tested += 1
                u = s0[:, None] * r * _signs(d1)[None, :]
                if is_scaled_sign_matrix(u):
                    hits.append((d0, th, d1))
    return DitaReport(n, tested, sorted(hits))

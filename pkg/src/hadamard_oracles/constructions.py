"""Real Hadamard matrices: order admissibility, Sylvester and Paley constructions."""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .matcore import SignMatrix, sign_gram

SYLVESTER_MAX_K = 12
PALEY_MAX_Q = 1000


class Reason(enum.Enum):
    ORDER_ONE = "ORDER_ONE"
    ORDER_TWO = "ORDER_TWO"
    MULTIPLE_OF_FOUR = "MULTIPLE_OF_FOUR"
    EXCLUDED = "EXCLUDED"


@dataclass(frozen=True)
class AdmissibilityVerdict:
    order: int
    admissible: bool
    reason: Reason

    @property
    def k(self) -> int | None:
        """The k in order = 4k, when that is the reason for admissibility."""
        return self.order // 4 if self.reason is Reason.MULTIPLE_OF_FOUR else None


def admissible_order(n: int) -> AdmissibilityVerdict:
    """Necessary condition for an order-n Hadamard matrix: n = 1, 2 or 4k."""
    if n < 1:
        raise ValueError(f"order must be positive, got {n}")
    if n == 1:
        reason = Reason.ORDER_ONE
    elif n == 2:
        reason = Reason.ORDER_TWO
    elif n % 4 == 0:
        reason = Reason.MULTIPLE_OF_FOUR
    else:
        reason = Reason.EXCLUDED
    return AdmissibilityVerdict(n, reason is not Reason.EXCLUDED, reason)


def is_hadamard(h: SignMatrix) -> bool:
    """True iff H @ H.T == n * I exactly."""
    return bool(np.array_equal(sign_gram(h), h.n * np.eye(h.n, dtype=np.int64)))


def sylvester(k: int) -> SignMatrix:
    """Order-2**k Hadamard matrix by repeated doubling [[H, H], [H, -H]]."""
    if not 0 <= k <= SYLVESTER_MAX_K:
        raise ValueError(f"k must be in [0, {SYLVESTER_MAX_K}], got {k}")
    h = np.ones((1, 1), dtype=np.int8)
    for _ in range(k):
        h = np.block([[h, h], [h, -h]])
    return SignMatrix(h)


def is_prime(q: int) -> bool:
    if q < 2:
        return False
    if q % 2 == 0:
        return q == 2
    f = 3
    while f * f <= q:
        if q % f == 0:
            return False
        f += 2
    return True


def quadratic_character(q: int) -> np.ndarray:
    """chi(x) for x in 0..q-1: 0 at zero, +1 on nonzero squares, -1 elsewhere."""
    chi = -np.ones(q, dtype=np.int8)
    chi[0] = 0
    chi[(np.arange(1, q) ** 2) % q] = 1
    return chi


def paley(q: int) -> SignMatrix:
    """Order-(q+1) Paley type I Hadamard matrix for a prime q = 3 (mod 4).

    Built as H = I + S, where S borders the Jacobsthal matrix
    Q[i, j] = chi(i - j) with a first row of +1 and a first column of -1.
    """
    if not is_prime(q):
        raise ValueError(f"q must be prime, got {q}")
    if q % 4 != 3:
        raise ValueError(f"q must be 3 mod 4, got q = {q} = {q % 4} mod 4")
    if q > PALEY_MAX_Q:
        raise ValueError(f"q must not exceed {PALEY_MAX_Q}, got {q}")
    chi = quadratic_character(q)
    idx = np.arange(q)
    s = np.zeros((q + 1, q + 1), dtype=np.int8)
    s[0, 1:] = 1
    s[1:, 0] = -1
    s[1:, 1:] = chi[(idx[:, None] - idx[None, :]) % q]
    return SignMatrix(np.eye(q + 1, dtype=np.int8) + s)


def normalize_sign(h: SignMatrix) -> SignMatrix:
    """Negate rows, then columns, so the first column and first row are all +1."""
    if not is_hadamard(h):
        raise ValueError("input is not a Hadamard matrix")
    a = h.entries.astype(np.int8) * h.entries[:, :1]
    a = a * a[:1, :]
    return SignMatrix(a)

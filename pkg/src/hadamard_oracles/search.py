"""Exhaustive backtracking search for normalized Hadamard matrices of small order.

Rows are n-bit words: bit (n-1-j) holds column j, and a set bit means -1.
The integer order of row words is then the lexicographic order of the sign
patterns (with +1 before -1), and two rows are orthogonal exactly when their
XOR has popcount n/2.  A normalized matrix has row 0 = 0 and every row's top
bit clear.  Rows are placed in strictly increasing order, so the first
solution reached is the lexicographically least normalized Hadamard matrix.
"""

from __future__ import annotations

import enum
import math
import multiprocessing
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .constructions import admissible_order
from .matcore import SignMatrix

EXISTENCE_MAX_ORDER = 20
COUNT_MAX_ORDER = 8


class Outcome(enum.Enum):
    FOUND = "FOUND"
    NONE_EXISTS = "NONE_EXISTS"
    INADMISSIBLE = "INADMISSIBLE"


@dataclass(frozen=True)
class SearchResult:
    order: int
    outcome: Outcome
    matrix: SignMatrix | None
    nodes_explored: int
    elapsed: float  # seconds


def rows_to_matrix(rows: list[int], n: int) -> SignMatrix:
    shifts = np.arange(n - 1, -1, -1)
    bits = (np.array(rows, dtype=np.int64)[:, None] >> shifts) & 1
    return SignMatrix(1 - 2 * bits)


def matrix_to_rows(h: SignMatrix) -> list[int]:
    weights = 1 << np.arange(h.n - 1, -1, -1, dtype=np.int64)
    return [int(x) for x in (h.entries < 0).astype(np.int64) @ weights]


def _first_pool(n: int) -> np.ndarray:
    """Candidate rows orthogonal to the all-ones row: top bit clear, n/2 bits set."""
    words = np.arange(1 << (n - 1), dtype=np.int64)
    return words[2 * np.bitwise_count(words) == n]


class _Abandoned(Exception):
    pass


class _Searcher:
    """One depth-first search; owns its node counter and row stack."""

    def __init__(self, n: int, find_first: bool, prune: bool = True, should_stop=None):
        self.should_stop = should_stop
        self.n = n
        self.half = n // 2
        self.find_first = find_first
        self.prune = prune
        self.nodes = 0
        self.rows = [0]
        self.solution: list[int] | None = None
        self.count = 0

    def run(self, pool: np.ndarray) -> None:
        if self.prune:
            self._pooled(pool)
        else:
            self._generate_and_test()

    def _complete(self) -> bool:
        self.count += 1
        if self.solution is None:
            self.solution = list(self.rows)
        return self.find_first

    def _pooled(self, pool: np.ndarray) -> bool:
        # pool: rows above the last placed one that are orthogonal to every placed row
        need = self.n - len(self.rows)
        if need == 0:
            return self._complete()
        size = len(pool)
        for t in range(size):
            if size - t < need:
                break
            self.nodes += 1
            if self.should_stop is not None and not self.nodes & 0x3FF and self.should_stop():
                raise _Abandoned
            c = pool[t]
            rest = pool[t + 1:]
            rest = rest[np.bitwise_count(rest ^ c) == self.half]
            self.rows.append(int(c))
            stop = self._pooled(rest)
            self.rows.pop()
            if stop:
                return True
        return False

    def _generate_and_test(self) -> bool:
        # reference mode: every row word is tried, orthogonality tested only once placed
        if len(self.rows) == self.n:
            return self._complete()
        for c in range(self.rows[-1] + 1, 1 << (self.n - 1)):
            self.nodes += 1
            if any((c ^ r).bit_count() != self.half for r in self.rows):
                continue
            self.rows.append(c)
            stop = self._generate_and_test()
            self.rows.pop()
            if stop:
                return True
        return False


_worker_state: dict = {}


def _init_worker(n: int, best) -> None:
    _worker_state["pool"] = _first_pool(n)
    _worker_state["best"] = best


def _subtree(args: tuple[int, int, bool]) -> tuple[list[int] | None, int, int]:
    """Search with row 1 fixed to ``second``; returns (solution, count, nodes)."""
    n, second, find_first = args
    pool = _worker_state["pool"]
    best = _worker_state["best"]
    rest = pool[pool > second]
    rest = rest[np.bitwise_count(rest ^ second) == n // 2]
    # a branch may give up once a solution with a smaller second row is known
    s = _Searcher(n, find_first, should_stop=lambda: best.value < second)
    s.rows.append(second)
    s.nodes = 1
    if find_first and best.value < second:
        return None, 0, 0
    try:
        s.run(rest)
    except _Abandoned:
        return None, 0, s.nodes
    if find_first and s.solution is not None:
        with best.get_lock():
            best.value = min(best.value, second)
    return s.solution, s.count, s.nodes


def _parallel(n: int, find_first: bool, workers: int):
    """Split on the second row; reduce by minimum (search) or sum (count)."""
    tasks = [(n, int(c), find_first) for c in _first_pool(n)]
    ctx = multiprocessing.get_context("spawn")
    best = ctx.Value("q", 1 << 62)
    found: list[list[int]] = []
    count = nodes = 0
    # ordered waves: after a wave holding a solution no later branch can beat it
    wave = workers * 8 if find_first else len(tasks)
    with ProcessPoolExecutor(workers, ctx, _init_worker, (n, best)) as ex:
        for lo in range(0, len(tasks), wave):
            for solution, c, k in ex.map(_subtree, tasks[lo:lo + wave]):
                count += c
                nodes += k
                if solution is not None:
                    found.append(solution)
            if found:
                break
    return (min(found) if found else None), count, nodes


def search_existence(n: int, workers: int = 1, prune: bool = True) -> SearchResult:
    """Find the lexicographically least normalized Hadamard matrix of order n.

    Parameters
    ----------
    n : int
        Order, at most 20.
    workers : int
        Processes to use.  With more than one, the search is split on the
        second row and the least solution over all branches is reported, so
        the matrix returned does not depend on ``workers``.
    prune : bool
        With ``False`` every row word is generated and tested individually
        and no look-ahead is applied.  Only practical for n <= 8; exists to
        measure what pruning saves.
    """
    if not 1 <= n <= EXISTENCE_MAX_ORDER:
        raise ValueError(f"order must be in [1, {EXISTENCE_MAX_ORDER}], got {n}")
    start = time.perf_counter()
    if not admissible_order(n).admissible:
        return SearchResult(n, Outcome.INADMISSIBLE, None, 0, time.perf_counter() - start)
    if n == 1:
        return SearchResult(n, Outcome.FOUND, SignMatrix([[1]]), 1, time.perf_counter() - start)

    if workers > 1 and prune:
        solution, _, nodes = _parallel(n, True, workers)
    else:
        s = _Searcher(n, find_first=True, prune=prune)
        s.run(_first_pool(n))
        solution, nodes = s.solution, s.nodes
    elapsed = time.perf_counter() - start
    if solution is None:
        return SearchResult(n, Outcome.NONE_EXISTS, None, nodes, elapsed)
    return SearchResult(n, Outcome.FOUND, rows_to_matrix(solution, n), nodes, elapsed)


def count_normalized(n: int, workers: int = 1) -> int:
    """Number of order-n Hadamard matrices whose first row and column are all +1.

    Every row-sorted solution is enumerated; each accounts for (n-1)!
    matrices, one per ordering of the rows below the first.
    """
    if not 1 <= n <= COUNT_MAX_ORDER:
        raise ValueError(f"order must be in [1, {COUNT_MAX_ORDER}], got {n}")
    if n == 1:
        return 1
    # inadmissible orders are enumerated too, so a zero is observed rather than assumed
    pool = _first_pool(n)
    if workers > 1 and len(pool):
        _, sorted_count, _ = _parallel(n, False, workers)
    else:
        s = _Searcher(n, find_first=False)
        s.run(pool)
        sorted_count = s.count
    return sorted_count * math.factorial(n - 1)

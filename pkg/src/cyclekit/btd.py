"""Block-transposition distance tables and the hard-permutation lower bound.

A block transposition with cuts ``0 <= i < j < k <= n`` turns
``u_1..u_i | u_{i+1}..u_j | u_{j+1}..u_k | u_{k+1}..u_n`` into
``u_1..u_i u_{j+1}..u_k u_{i+1}..u_j u_{k+1}..u_n``.  Distances are to the
identity and are stored in a flat byte array indexed by the Lehmer
(lexicographic) rank of the one-line form.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial
from typing import Sequence

import numpy as np

from .oracle import EnumerationGuardError
from .permcore import Permutation, lehmer_rank
from .qformulas import q_even

__all__ = [
    "DistanceTable",
    "LowerBoundReport",
    "apply_block_transposition",
    "block_moves",
    "btd_bfs",
    "btd_distribution",
    "verify_lower_bound",
    "check_table",
    "rank_rows",
    "unrank_rows",
]

UNSEEN = 255


def apply_block_transposition(u: Permutation | Sequence[int], i: int, j: int, k: int) -> Permutation:
    seq = tuple(u.image if isinstance(u, Permutation) else u)
    if not 0 <= i < j < k <= len(seq):
        raise ValueError(f"cuts must satisfy 0 <= i < j < k <= {len(seq)}, got {(i, j, k)}")
    return Permutation(seq[:i] + seq[j:k] + seq[i:j] + seq[k:])


def block_moves(n: int) -> np.ndarray:
    """Position maps of all ``C(n+1, 3)`` block transpositions, one per row."""
    rows = []
    for i in range(n + 1):
        for j in range(i + 1, n + 1):
            for k in range(j + 1, n + 1):
                rows.append(list(range(i)) + list(range(j, k)) + list(range(i, j)) + list(range(k, n)))
    return np.array(rows, dtype=np.intp).reshape(len(rows), n)


def _factorials(n: int) -> np.ndarray:
    return np.array([factorial(n - 1 - i) for i in range(n)], dtype=np.int64)


def rank_rows(perms: np.ndarray) -> np.ndarray:
    """Lehmer ranks of 0-indexed one-line permutations stored row-wise."""
    m, n = perms.shape
    rank = np.zeros(m, dtype=np.int64)
    weights = _factorials(n)
    for i in range(n - 1):
        smaller = (perms[:, i + 1 :] < perms[:, i : i + 1]).sum(axis=1)
        rank += smaller * weights[i]
    return rank


def unrank_rows(ranks: np.ndarray, n: int) -> np.ndarray:
    ranks = np.asarray(ranks, dtype=np.int64).copy()
    m = ranks.shape[0]
    weights = _factorials(n)
    digits = np.empty((m, n), dtype=np.int64)
    for i in range(n):
        digits[:, i], ranks = np.divmod(ranks, weights[i])
    # digit i picks the digit-th smallest unused value; fix up right to left
    out = digits.copy()
    for i in range(n - 2, -1, -1):
        out[:, i + 1 :] += out[:, i + 1 :] >= out[:, i : i + 1]
    return out.astype(np.int8)


@dataclass(frozen=True)
class DistanceTable:
    n: int
    dist: np.ndarray

    def distance(self, u: Permutation | Sequence[int]) -> int:
        seq = u.image if isinstance(u, Permutation) else tuple(u)
        if len(seq) != self.n:
            raise ValueError(f"permutation of length {len(seq)} for a table of size {self.n}")
        return int(self.dist[lehmer_rank(seq)])

    @property
    def max_distance(self) -> int:
        return int(self.dist.max())


def btd_bfs(n: int, max_n: int = 10) -> DistanceTable:
    """Exact distance to the identity for every permutation of [n].

    Tables are cached and their arrays are read-only.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > max_n:
        raise EnumerationGuardError(f"n={n} exceeds the BFS guard max_n={max_n}")
    return _bfs(n)


@lru_cache(maxsize=4)
def _bfs(n: int) -> DistanceTable:
    dist = np.full(factorial(n), UNSEEN, dtype=np.uint8)
    dist[0] = 0
    frontier = np.arange(n, dtype=np.int8)[None, :]
    moves = block_moves(n)
    level = 0
    while frontier.shape[0]:
        level += 1
        found = []
        for move in moves:
            images = frontier[:, move]
            ranks = rank_rows(images)
            fresh = dist[ranks] == UNSEEN
            if fresh.any():
                dist[ranks[fresh]] = level
                found.append(images[fresh])
        frontier = np.concatenate(found) if found else frontier[:0]
    if (dist == UNSEEN).any():
        raise RuntimeError("BFS did not reach every permutation")
    dist.flags.writeable = False
    return DistanceTable(n, dist)


def btd_distribution(table: DistanceTable) -> dict[int, int]:
    counts = np.bincount(table.dist)
    return {d: int(c) for d, c in enumerate(counts) if c}


def check_table(table: DistanceTable) -> bool:
    """Every permutation at distance d > 0 has a neighbour at distance d - 1, none below."""
    n = table.n
    if n == 1:
        return table.dist.tolist() == [0]
    perms = unrank_rows(np.arange(factorial(n)), n)
    best = np.full(perms.shape[0], UNSEEN, dtype=np.int64)
    for move in block_moves(n):
        best = np.minimum(best, table.dist[rank_rows(perms[:, move])])
    d = table.dist.astype(np.int64)
    positive = d > 0
    return bool(d[0] == 0 and np.all(best[positive] == d[positive] - 1) and np.all(best >= d - 1))


@dataclass(frozen=True)
class LowerBoundReport:
    n: int
    threshold: int
    count_hard: int
    bound: int
    holds: bool

    @property
    def vacuous(self) -> bool:
        return self.bound == 0

    @property
    def tight(self) -> bool:
        return self.count_hard == self.bound


def verify_lower_bound(n: int, max_n: int = 9, table: DistanceTable | None = None) -> LowerBoundReport:
    """Compare ``#{u : btd(u) >= ceil((n+1)/2)}`` with ``n! q_{n+1}(even)``."""
    if n > max_n:
        raise EnumerationGuardError(f"n={n} exceeds the guard max_n={max_n}")
    table = btd_bfs(n, max_n) if table is None else table
    threshold = -(-(n + 1) // 2)
    count_hard = int((table.dist >= threshold).sum())
    bound = q_even(n + 1).value * factorial(n)
    if bound.denominator != 1:
        raise ArithmeticError(f"n! q_(n+1)(even) = {bound} is not an integer")
    return LowerBoundReport(n, threshold, count_hard, int(bound), count_hard >= bound)


def num_moves(n: int) -> int:
    return comb(n + 1, 3)

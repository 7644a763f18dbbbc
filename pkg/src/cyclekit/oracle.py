"""Brute-force and Monte-Carlo ground truth for the product-of-cycles probabilities.

Exhaustive routes fix the first factor to ``(1 2 ... n)`` and run over all
``(n-1)!`` cycles ``z`` for the second; this gives the same distribution
as drawing both factors uniformly.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

import numpy as np

from ._parallel import default_workers, map_reduce
from .aset import CycleLengthSet
from .permcore import CycleType, iter_arrangements
from .qformulas import QResult

__all__ = [
    "DEFAULT_MAX_N",
    "EnumerationGuardError",
    "ClassDistribution",
    "MonteCarloResult",
    "product_type_counts",
    "q_bruteforce",
    "product_class_distribution",
    "q_montecarlo",
    "count_no_backstep_cycles",
    "count_one_odd_cycle",
    "odd_cycle_histogram",
]

DEFAULT_MAX_N = 10
MC_BLOCK = 1 << 15


class EnumerationGuardError(ValueError):
    """Raised when an exhaustive search would exceed the configured size."""


def _guard(n: int, max_n: int) -> None:
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > max_n:
        raise EnumerationGuardError(f"n={n} exceeds the enumeration guard max_n={max_n}")


@dataclass(frozen=True)
class ClassDistribution:
    n: int
    entries: dict[CycleType, Fraction]

    def __getitem__(self, t: CycleType) -> Fraction:
        return self.entries.get(t, Fraction(0))


@dataclass(frozen=True)
class MonteCarloResult:
    estimate: float
    stderr: float
    hits: int
    trials: int


def _product_types_chunk(n: int, start: int, stop: int) -> Counter:
    # cycle types of (1 2 ... n) o z, z = (1 a_2 ... a_n); 0-indexed images
    counts: Counter = Counter()
    img = [0] * n
    seen = [False] * n
    for a in iter_arrangements(n, start, stop):
        prev = 0
        for v in a:
            img[prev] = v % n  # s(v) with v 1-indexed = v + 1, minus 1 for 0-indexing
            prev = v - 1
        img[prev] = 1 % n
        for i in range(n):
            seen[i] = False
        lengths = []
        for s in range(n):
            if seen[s]:
                continue
            length = 0
            i = s
            while not seen[i]:
                seen[i] = True
                i = img[i]
                length += 1
            lengths.append(length)
        lengths.sort(reverse=True)
        counts[tuple(lengths)] += 1
    return counts


@lru_cache(maxsize=16)
def _cached_type_counts(n: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    counts = map_reduce(_product_types_chunk, (n,), factorial(n - 1), default_workers())
    return tuple(sorted(counts.items(), reverse=True))


def product_type_counts(n: int, max_n: int = DEFAULT_MAX_N, workers: int | None = None) -> dict[CycleType, int]:
    """Number of n-cycles z giving each cycle type of ``(1 2 ... n) z``."""
    _guard(n, max_n)
    if workers is None:
        items = _cached_type_counts(n)
    else:
        counts = map_reduce(_product_types_chunk, (n,), factorial(n - 1), workers)
        items = tuple(sorted(counts.items(), reverse=True))
    return {CycleType(parts): c for parts, c in items}


def q_bruteforce(a: CycleLengthSet, n: int, max_n: int = DEFAULT_MAX_N, workers: int | None = None) -> QResult:
    counts = product_type_counts(n, max_n, workers)
    hits = sum(c for t, c in counts.items() if t.lengths_in(a))
    return QResult(n, a.descriptor, Fraction(hits, factorial(n - 1)))


def product_class_distribution(n: int, max_n: int = DEFAULT_MAX_N, workers: int | None = None) -> ClassDistribution:
    counts = product_type_counts(n, max_n, workers)
    total = factorial(n - 1)
    return ClassDistribution(n, {t: Fraction(c, total) for t, c in counts.items()})


def _no_backstep_chunk(n: int, start: int, stop: int) -> Counter:
    hits = 0
    for a in iter_arrangements(n, start, stop):
        # cycle 1 -> a_2 -> ... -> a_n -> 1; backstep means p(i) = i - 1 (mod n)
        ok = True
        prev = 1
        for v in a + (1,):
            if (v - prev) % n == n - 1:
                ok = False
                break
            prev = v
        hits += ok
    return Counter({"hits": hits})


def count_no_backstep_cycles(n: int, max_n: int = DEFAULT_MAX_N, workers: int | None = None) -> int:
    """n-cycles p with ``p(i) != i - 1 (mod n)`` for every i."""
    _guard(n, max_n)
    return map_reduce(_no_backstep_chunk, (n,), factorial(n - 1), workers)["hits"]


def odd_cycle_histogram(n: int, max_n: int = DEFAULT_MAX_N - 1, workers: int | None = None) -> dict[int, int]:
    """How many (n+1)-cycles z give ``(1 ... n+1) z`` with each number of odd cycles."""
    _guard(n, max_n)
    hist: Counter = Counter()
    for t, c in product_type_counts(n + 1, max_n + 1, workers).items():
        hist[sum(p % 2 for p in t.parts)] += c
    return dict(sorted(hist.items()))


def count_one_odd_cycle(n: int, max_n: int = DEFAULT_MAX_N - 1, workers: int | None = None) -> int:
    """Permutations u of [n] whose (n+1)-cycle image is one odd cycle and nothing else.

    Counted as ``n!`` times the fraction of (n+1)-cycles z for which
    ``(1 2 ... n+1) z`` is a single cycle (of odd length n+1), i.e. the
    number of such z.  Images with one odd cycle plus even cycles are not
    included; ``odd_cycle_histogram`` reports those.
    """
    _guard(n, max_n)
    counts = product_type_counts(n + 1, max_n + 1, workers)
    return sum(c for t, c in counts.items() if t.parts == (n + 1,) and (n + 1) % 2)


def _random_cycles(rng: np.random.Generator, m: int, n: int) -> np.ndarray:
    # m uniform n-cycles as 0-indexed image rows
    arrangement = rng.permuted(np.tile(np.arange(1, n, dtype=np.int64), (m, 1)), axis=1)
    order = np.concatenate([np.zeros((m, 1), dtype=np.int64), arrangement], axis=1)
    img = np.empty_like(order)
    np.put_along_axis(img, order, np.roll(order, -1, axis=1), axis=1)
    return img


def _cycle_lengths(perm: np.ndarray) -> np.ndarray:
    """Per-element cycle length for each row of 0-indexed images."""
    m, n = perm.shape
    label = np.broadcast_to(np.arange(n), (m, n)).copy()
    ptr = perm.copy()
    steps = 1
    while steps < n:
        label = np.minimum(label, np.take_along_axis(label, ptr, axis=1))
        ptr = np.take_along_axis(ptr, ptr, axis=1)
        steps *= 2
    gid = label + n * np.arange(m)[:, None]
    sizes = np.bincount(gid.ravel(), minlength=m * n)
    return sizes[gid]


def _mc_block(member: tuple[bool, ...], n: int, seed: int, block: int, size: int) -> int:
    rng = np.random.Generator(np.random.Philox(np.random.SeedSequence([seed, block])))
    p = _random_cycles(rng, size, n)
    q = _random_cycles(rng, size, n)
    product = np.take_along_axis(p, q, axis=1)
    allowed = np.array((False,) + member[:n])
    return int(allowed[_cycle_lengths(product)].all(axis=1).sum())


def _mc_chunk(member, n, seed, trials, start, stop) -> Counter:
    hits = 0
    for block in range(start, stop):
        size = min(MC_BLOCK, trials - block * MC_BLOCK)
        hits += _mc_block(member, n, seed, block, size)
    return Counter({"hits": hits})


def q_montecarlo(a: CycleLengthSet, n: int, trials: int, seed: int, workers: int | None = None) -> MonteCarloResult:
    """Estimate q_n(A) from ``trials`` independent pairs of uniform n-cycles.

    Trials are drawn in fixed-size blocks, each with its own counter-based
    stream keyed by ``(seed, block)``, so the estimate does not depend on
    how blocks are spread over workers.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if n < 1 or n > a.n_max:
        raise ValueError(f"n must be in 1..{a.n_max}")
    blocks = -(-trials // MC_BLOCK)
    hits = map_reduce(_mc_chunk, (a.member, n, seed, trials), blocks, workers)["hits"]
    est = hits / trials
    return MonteCarloResult(est, math.sqrt(est * (1 - est) / trials), hits, trials)

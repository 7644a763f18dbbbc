"""Permutations of [n], cycle types and enumeration of n-cycles.

Permutations are 1-indexed in their public form.  Products follow
``compose(p, q)(i) = p(q(i))``.  The n-cycles are enumerated as
``(1 a_2 ... a_n)`` over arrangements ``a`` of ``2..n`` in lexicographic
order; rank ``r`` in that order is the lexicographic rank of ``a``.
"""

from __future__ import annotations

import itertools
import re
from collections import Counter
from dataclasses import dataclass
from math import factorial, prod
from typing import Iterable, Iterator, Mapping, Sequence

import numpy as np

__all__ = [
    "Permutation",
    "CycleType",
    "compose",
    "cycle_type",
    "enumerate_ncycles",
    "random_ncycle",
    "class_size",
    "cycle_types_of",
    "canonical_cycle",
    "ncycle_from_arrangement",
    "lehmer_rank",
    "lehmer_unrank",
    "parse_cycles",
]


@dataclass(frozen=True)
class Permutation:
    image: tuple[int, ...]

    def __post_init__(self):
        n = len(self.image)
        if sorted(self.image) != list(range(1, n + 1)):
            raise ValueError(f"{self.image} is not a permutation of 1..{n}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], n: int) -> "Permutation":
        img = list(range(1, n + 1))
        seen: set[int] = set()
        for cyc in cycles:
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                if not 1 <= a <= n or a in seen:
                    raise ValueError(f"bad cycle entry {a} for n={n}")
                seen.add(a)
                img[a - 1] = b
        return cls(tuple(img))

    @property
    def n(self) -> int:
        return len(self.image)

    def __call__(self, i: int) -> int:
        return self.image[i - 1]

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, v in enumerate(self.image, 1):
            inv[v - 1] = i
        return Permutation(tuple(inv))

    def cycles(self) -> list[tuple[int, ...]]:
        """Disjoint cycles, each starting at its smallest element, fixed points included."""
        seen = [False] * (self.n + 1)
        out = []
        for start in range(1, self.n + 1):
            if seen[start]:
                continue
            cyc = []
            i = start
            while not seen[i]:
                seen[i] = True
                cyc.append(i)
                i = self.image[i - 1]
            out.append(tuple(cyc))
        return out

    def __str__(self) -> str:
        return "".join("(" + " ".join(map(str, c)) + ")" for c in self.cycles())

    def one_line(self) -> str:
        return " ".join(map(str, self.image))


@dataclass(frozen=True)
class CycleType:
    """Cycle lengths as a weakly decreasing tuple (a partition of n)."""

    parts: tuple[int, ...]

    def __init__(self, parts: Iterable[int] | Mapping[int, int]):
        if isinstance(parts, Mapping):
            parts = [r for r, m in parts.items() for _ in range(m)]
        parts = tuple(sorted(parts, reverse=True))
        if any(p < 1 for p in parts):
            raise ValueError("cycle lengths must be positive")
        object.__setattr__(self, "parts", parts)

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def nu(self) -> dict[int, int]:
        return dict(sorted(Counter(self.parts).items()))

    @property
    def num_cycles(self) -> int:
        return len(self.parts)

    @property
    def sign(self) -> int:
        return -1 if (self.n - len(self.parts)) % 2 else 1

    def lengths_in(self, a) -> bool:
        return all(r in a for r in set(self.parts))

    def __str__(self) -> str:
        return "+".join(map(str, self.parts)) if self.parts else "0"


def compose(p: Permutation, q: Permutation) -> Permutation:
    if p.n != q.n:
        raise ValueError(f"size mismatch: {p.n} vs {q.n}")
    return Permutation(tuple(p.image[j - 1] for j in q.image))


def _type_of_image(img: Sequence[int]) -> tuple[int, ...]:
    # img is 0-indexed
    n = len(img)
    seen = [False] * n
    lengths = []
    for start in range(n):
        if seen[start]:
            continue
        length = 0
        i = start
        while not seen[i]:
            seen[i] = True
            i = img[i]
            length += 1
        lengths.append(length)
    lengths.sort(reverse=True)
    return tuple(lengths)


def cycle_type(p: Permutation) -> CycleType:
    return CycleType(_type_of_image([v - 1 for v in p.image]))


def canonical_cycle(n: int) -> Permutation:
    """``(1 2 ... n)``."""
    return Permutation(tuple(list(range(2, n + 1)) + [1]))


def ncycle_from_arrangement(arrangement: Sequence[int]) -> Permutation:
    """The cycle ``(1 a_2 ... a_n)`` for an arrangement of ``2..n``."""
    n = len(arrangement) + 1
    return Permutation.from_cycles([(1, *arrangement)], n)


def lehmer_rank(seq: Sequence[int]) -> int:
    """Lexicographic rank of a sequence of distinct comparable items among its rearrangements."""
    rank = 0
    m = len(seq)
    for i in range(m):
        smaller = sum(1 for j in range(i + 1, m) if seq[j] < seq[i])
        rank += smaller * factorial(m - 1 - i)
    return rank


def lehmer_unrank(rank: int, items: Sequence[int]) -> list[int]:
    pool = sorted(items)
    m = len(pool)
    if not 0 <= rank < factorial(m):
        raise ValueError(f"rank {rank} out of range for {m} items")
    out = []
    for i in range(m - 1, -1, -1):
        idx, rank = divmod(rank, factorial(i))
        out.append(pool.pop(idx))
    return out


def _next_arrangement(a: list[int]) -> bool:
    # in-place lexicographic successor; False when a was the last one
    i = len(a) - 2
    while i >= 0 and a[i] >= a[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = len(a) - 1
    while a[j] <= a[i]:
        j -= 1
    a[i], a[j] = a[j], a[i]
    a[i + 1 :] = reversed(a[i + 1 :])
    return True


def iter_arrangements(n: int, start: int = 0, stop: int | None = None) -> Iterator[tuple[int, ...]]:
    """Arrangements of ``2..n`` with lexicographic rank in ``[start, stop)``."""
    total = factorial(n - 1)
    stop = total if stop is None else min(stop, total)
    if start >= stop:
        return
    items = range(2, n + 1)
    if start == 0 and stop == total:
        yield from itertools.permutations(items)
        return
    a = lehmer_unrank(start, items)
    for _ in range(stop - start):
        yield tuple(a)
        _next_arrangement(a)


def enumerate_ncycles(n: int, start: int = 0, stop: int | None = None) -> Iterator[Permutation]:
    """Every n-cycle exactly once (or the slice ``[start, stop)`` of that stream)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        if start == 0 and (stop is None or stop > 0):
            yield Permutation((1,))
        return
    for a in iter_arrangements(n, start, stop):
        yield ncycle_from_arrangement(a)


def random_ncycle(n: int, seed: int) -> Permutation:
    """A uniform n-cycle determined by ``seed``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    rng = np.random.default_rng(seed)
    arrangement = (rng.permutation(n - 1) + 2).tolist()
    return ncycle_from_arrangement(arrangement)


def class_size(t: CycleType) -> int:
    """Number of permutations of [n] with cycle type ``t``."""
    return factorial(t.n) // prod(r**m * factorial(m) for r, m in t.nu.items())


def cycle_types_of(n: int) -> Iterator[CycleType]:
    """All cycle types of [n], largest parts first."""
    from .characters import partitions_of

    for lam in partitions_of(n):
        yield CycleType(lam)


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, n: int | None = None) -> Permutation:
    """Parse ``(1 3 2)(4)`` style cycle notation (1-indexed, spaces or commas)."""
    text = text.strip()
    if _CYCLE_RE.sub("", text).strip():
        raise ValueError(f"cannot parse cycle notation {text!r}")
    cycles = []
    for body in _CYCLE_RE.findall(text):
        entries = [int(t) for t in re.split(r"[\s,]+", body.strip()) if t]
        if entries:
            cycles.append(entries)
    largest = max((max(c) for c in cycles), default=0)
    size = largest if n is None else n
    if size < largest:
        raise ValueError(f"entry {largest} exceeds n={n}")
    return Permutation.from_cycles(cycles, size)

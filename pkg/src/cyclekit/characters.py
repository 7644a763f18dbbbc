"""Irreducible characters of the symmetric group and class-product probabilities.

Partitions are plain weakly decreasing tuples.  Characters come from the
Murnaghan-Nakayama rule on beta-sets; hook characters additionally have a
one-coefficient polynomial formula, which is what the product-of-two-cycles
probabilities are built on.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Iterator, Sequence

from .aset import CycleLengthSet
from .permcore import CycleType, class_size

__all__ = [
    "Hook",
    "partitions_of",
    "conjugate",
    "hook_lengths",
    "dimension",
    "hooks_of",
    "mn_character",
    "hook_character_lemma",
    "product_class_prob",
    "k_fold_class_product_prob",
    "q_by_characters",
]


@dataclass(frozen=True)
class Hook:
    n: int
    arm: int
    leg: int

    def __post_init__(self):
        if self.arm < 1 or self.leg < 1 or self.arm + self.leg != self.n + 1:
            raise ValueError(f"not a hook of {self.n}: arm={self.arm}, leg={self.leg}")

    @property
    def partition(self) -> tuple[int, ...]:
        return (self.arm,) + (1,) * (self.leg - 1)


def partitions_of(n: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of ``n`` in lexicographically descending order."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        yield ()
        return
    top = n if max_part is None else min(n, max_part)
    for first in range(top, 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


def hooks_of(n: int) -> list[Hook]:
    return [Hook(n, arm, n + 1 - arm) for arm in range(n, 0, -1)]


def _check_partition(lam: Sequence[int]) -> tuple[int, ...]:
    lam = tuple(lam)
    if any(p < 1 for p in lam) or any(a < b for a, b in zip(lam, lam[1:])):
        raise ValueError(f"{lam} is not a partition")
    return lam


def conjugate(lam: Sequence[int]) -> tuple[int, ...]:
    lam = _check_partition(lam)
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0] if lam else 0))


def hook_lengths(lam: Sequence[int]) -> list[list[int]]:
    lam = _check_partition(lam)
    conj = conjugate(lam)
    return [[lam[i] - j + conj[j] - i - 1 for j in range(lam[i])] for i in range(len(lam))]


def dimension(lam: Sequence[int]) -> int:
    """``f^lambda`` by the hook-length formula."""
    lam = _check_partition(lam)
    denom = 1
    for row in hook_lengths(lam):
        for h in row:
            denom *= h
    return factorial(sum(lam)) // denom


@lru_cache(maxsize=None)
def _mn(lam: tuple[int, ...], parts: tuple[int, ...]) -> int:
    if not parts:
        return 1
    r, rest = parts[0], parts[1:]
    length = len(lam)
    beta = [lam[i] + length - 1 - i for i in range(length)]
    occupied = set(beta)
    total = 0
    for b in beta:
        target = b - r
        if target < 0 or target in occupied:
            continue
        # leg length of the border strip = beads jumped over
        height = sum(1 for x in beta if target < x < b)
        new_beta = sorted((occupied - {b}) | {target}, reverse=True)
        new_lam = tuple(x - (length - 1 - i) for i, x in enumerate(new_beta))
        new_lam = tuple(p for p in new_lam if p)
        value = _mn(new_lam, rest)
        total += -value if height % 2 else value
    return total


def _as_type(t) -> CycleType:
    return t if isinstance(t, CycleType) else CycleType(t)


def mn_character(lam: Sequence[int], t) -> int:
    """``chi^lambda`` on the class of cycle type ``t`` (Murnaghan-Nakayama)."""
    lam = _check_partition(lam)
    t = _as_type(t)
    if sum(lam) != t.n:
        raise ValueError(f"size mismatch: |lambda|={sum(lam)}, class of {t.n}")
    return _mn(lam, t.parts)


def _cycle_polynomial(t: CycleType, degree: int) -> list[int]:
    # prod_r (x^r - 1)^{nu_r}, truncated to coefficients 0..degree
    poly = [1] + [0] * degree
    for r in t.parts:
        shifted = [0] * (degree + 1)
        for i in range(degree + 1 - r):
            shifted[i + r] = poly[i]
        poly = [s - c for s, c in zip(shifted, poly)]
    return poly


def hook_character_lemma(h: Hook, t) -> int:
    """Hook character value as ``(-1)^leg [x^arm] x/(1-x) prod_r (x^r - 1)^{nu_r}``."""
    t = _as_type(t)
    if h.n != t.n:
        raise ValueError(f"size mismatch: hook of {h.n}, class of {t.n}")
    poly = _cycle_polynomial(t, h.arm - 1)
    value = sum(poly)
    return -value if h.leg % 2 else value


def product_class_prob(t) -> Fraction:
    """P(product of two uniform n-cycles equals a fixed permutation of type ``t``)."""
    t = _as_type(t)
    n = t.n
    poly = _cycle_polynomial(t, n - 1)
    total = Fraction(0)
    prefix = 0
    for arm in range(1, n + 1):
        prefix += poly[arm - 1]
        leg = n + 1 - arm
        chi = -prefix if leg % 2 else prefix
        total += Fraction(chi, comb(n - 1, arm - 1))
    return total / factorial(n)


def k_fold_class_product_prob(classes: Sequence, target) -> Fraction:
    """P(sigma_1 ... sigma_k = s) for independent uniform sigma_j on the given classes."""
    classes = [_as_type(c) for c in classes]
    target = _as_type(target)
    if not classes:
        raise ValueError("need at least one class")
    n = target.n
    if any(c.n != n for c in classes):
        raise ValueError("all classes must have the same size as the target")
    k = len(classes)
    total = Fraction(0)
    for lam in partitions_of(n):
        chi = mn_character(lam, target)
        if not chi:
            continue
        for c in classes:
            chi *= mn_character(lam, c)
            if not chi:
                break
        if chi:
            total += chi * Fraction(dimension(lam)) ** (1 - k)
    return total / factorial(n)


def q_by_characters(a: CycleLengthSet, n: int) -> Fraction:
    """Aggregate class probabilities over the cycle types allowed by ``a``."""
    total = Fraction(0)
    for lam in partitions_of(n):
        t = CycleType(lam)
        if t.lengths_in(a):
            total += class_size(t) * product_class_prob(t)
    return total

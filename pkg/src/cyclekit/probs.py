"""Probability that a uniform permutation of [k] has all cycle lengths in A.

Two independent routes are provided: the coefficient route through
``exp(F_A)`` and an explicit sum over multiplicity vectors of the
excluded lengths.  The closed forms for even, odd and divisible-by-d
lengths are kept separately so they can be checked against both.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .aset import CycleLengthSet, complement_aset
from .series import f_a_series, series_exp

__all__ = [
    "pc_series",
    "p_series",
    "p_partition_sum",
    "pc_partition_sum",
    "p_closed",
    "p_closed_divisible",
]


@lru_cache(maxsize=512)
def p_series(a: CycleLengthSet, n: int) -> tuple[Fraction, ...]:
    """``(p_0(A), ..., p_n(A))`` read off ``exp(F_A)``."""
    return series_exp(f_a_series(a, n)).coeffs


def _multiplicity_sum(lengths: list[int], budget: int, exact: bool, signed: bool) -> Fraction:
    # sum over mu_r >= 0 with sum r*mu_r <= budget (or == budget) of prod s^mu / (r^mu mu!)
    def rec(idx: int, left: int) -> Fraction:
        if idx == len(lengths):
            return Fraction(1) if (left == 0 or not exact) else Fraction(0)
        r = lengths[idx]
        total = Fraction(0)
        mu = 0
        while r * mu <= left:
            term = Fraction(1, r**mu * factorial(mu))
            if signed and mu % 2:
                term = -term
            total += term * rec(idx + 1, left - r * mu)
            mu += 1
        return total

    return rec(0, budget)


def p_partition_sum(a: CycleLengthSet, k: int) -> Fraction:
    """``p_k(A)`` as an alternating sum over multiplicities of excluded lengths."""
    if k > a.n_max:
        raise ValueError(f"k={k} exceeds n_max={a.n_max}")
    excluded = [r for r in range(1, k + 1) if not a.member[r - 1]]
    return _multiplicity_sum(excluded, k, exact=False, signed=True)


def pc_partition_sum(a: CycleLengthSet, l: int) -> Fraction:
    """``p_l`` of the complement of ``a``, summed over exact multiplicity vectors."""
    if l > a.n_max:
        raise ValueError(f"l={l} exceeds n_max={a.n_max}")
    excluded = [r for r in range(1, l + 1) if not a.member[r - 1]]
    return _multiplicity_sum(excluded, l, exact=True, signed=False)


def p_closed(kind: str, n: int) -> Fraction:
    """Closed forms for all-even (``n`` even only) and all-odd cycle lengths."""
    kind = kind.lower()
    if kind == "even":
        if n % 2:
            raise ValueError("closed form for even lengths needs even n")
        return Fraction(comb(n, n // 2), 2**n)
    if kind == "odd":
        if n % 2 == 0:
            return Fraction(comb(n, n // 2), 2**n)
        return Fraction(comb(n - 1, (n - 1) // 2), 2 ** (n - 1))
    raise ValueError(f"unknown closed-form kind {kind!r}")


def p_closed_divisible(n: int, d: int) -> Fraction:
    if d < 1:
        raise ValueError("d must be >= 1")
    if n % d:
        raise ValueError(f"n={n} is not divisible by d={d}")
    m = n // d
    prod = Fraction(1)
    for r in range(m):
        prod *= r + Fraction(1, d)
    return prod / factorial(m)


def pc_series(a: CycleLengthSet, n: int) -> tuple[Fraction, ...]:
    """Probabilities for the complement set, series route."""
    return p_series(complement_aset(a), n)

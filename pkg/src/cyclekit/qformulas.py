"""Probability that the product of two uniform N-cycles has all cycle lengths in A.

``q_general`` works for any length set through ``p_k(A)`` and ``p_l`` of the
complement.  The even, odd and divisible-by-d cases have positive-term sums
of their own; the derangement case has an integer double sum that must
agree with an inclusion-exclusion count of cycles with no backstep.

Boundary values in the general formula are ``p_0(A) = p_0(A^c) = 1`` and
``p_{-1}(A^c) = 0``; setting ``p_1(A^c) = 0`` instead breaks the full-set
case.  The positive-term even formula starts at ``k = 1`` since its summand
carries ``1/k``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .aset import CycleLengthSet, complement_aset, make_aset
from .probs import p_series

__all__ = [
    "QResult",
    "q_general",
    "q_even",
    "q_odd",
    "q_divisible",
    "derangement_q_sum",
    "c_n_formula",
    "asymptotic_estimate",
]


@dataclass(frozen=True)
class QResult:
    n: int
    aset: str
    value: Fraction

    @property
    def numerator_count(self) -> int:
        """``value * (n-1)!``: the number of n-cycles z making ``(1 2 ... n) z`` qualify."""
        count = self.value * factorial(self.n - 1)
        if count.denominator != 1:
            raise ArithmeticError(f"q_{self.n}({self.aset}) * (n-1)! = {count} is not an integer")
        return count.numerator

    def __float__(self) -> float:
        return float(self.value)


def q_general(a: CycleLengthSet, n: int) -> QResult:
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > a.n_max:
        raise ValueError(f"n={n} exceeds n_max={a.n_max}")
    p = p_series(a, n)
    pc = p_series(complement_aset(a), n)
    total = Fraction(0)
    for l in range(n + 1):
        k = n - l
        diff = pc[l] - (pc[l - 1] if l >= 1 else 0)
        if not diff or not p[k]:
            continue
        term = p[k] * diff / comb(n, l)
        total += -term if l % 2 else term
    return QResult(n, a.descriptor, total * n / (n + 1))


def _q_even_sum(n: int, *, binom_on: str = "l") -> Fraction:
    # binom_on selects C(N, 2l) or C(N, 2k) in the correction factor; equal since 2k + 2l = N
    half = n // 2
    total = Fraction(0)
    for k in range(1, half + 1):
        l = half - k
        b = comb(n, 2 * l) if binom_on == "l" else comb(n, 2 * k)
        total += Fraction(comb(2 * (k - 1), k - 1) * comb(2 * l, l), k) * (1 - Fraction(1, b))
    return total * Fraction(2 * n, (n + 1) * 2**n)


def q_even(n: int) -> QResult:
    """All cycles of the product even; zero for odd ``n``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    value = Fraction(0) if n % 2 else _q_even_sum(n)
    return QResult(n, "even", value)


def q_odd(n: int) -> QResult:
    """All cycles of the product odd."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n % 2 == 0:
        first = Fraction(0)
        for k in range(n // 2 + 1):
            l = n // 2 - k
            first += Fraction(comb(2 * k, k) * comb(2 * l, l), comb(n, 2 * l))
        second = Fraction(0)
        for k in range(n // 2):
            l = (n - 2) // 2 - k
            second += Fraction(comb(2 * k, k) * comb(2 * l, l), comb(n, 2 * l + 1))
        value = Fraction(n, 2**n * (n + 1)) * first + Fraction(n, 2 ** (n - 2) * (n + 1)) * second
    else:
        half = (n - 1) // 2
        acc = Fraction(0)
        for l in range(half + 1):
            k = half - l
            acc += comb(2 * l, l) * comb(2 * k, k) * (Fraction(1, comb(n, 2 * l)) + Fraction(1, comb(n, 2 * l + 1)))
        value = Fraction(n, (n + 1) * 2 ** (n - 1)) * acc
    return QResult(n, "odd", value)


def q_divisible(n: int, d: int) -> QResult:
    """All cycles of the product have length divisible by ``d``."""
    if n < 1 or d < 1:
        raise ValueError("n and d must be >= 1")
    label = make_aset(f"div:{d}", 1).descriptor
    if n % d:
        return QResult(n, label, Fraction(0))
    m = n // d
    inv_d = Fraction(1, d)
    # rising[l] = prod_{r<l} (r + 1/d) / l!, falling[k] = prod_{1<=r<k} (r - 1/d) / k!
    rising = [Fraction(1)]
    for l in range(1, m + 1):
        rising.append(rising[-1] * (l - 1 + inv_d) / l)
    falling = [Fraction(1), Fraction(1)]
    for k in range(2, m + 1):
        falling.append(falling[-1] * (k - 1 - inv_d) / k)
    total = Fraction(0)
    for k in range(1, m + 1):
        l = m - k
        sign = -1 if (d * k) % 2 else 1
        total += falling[k] * rising[l] * (1 - Fraction(sign, comb(n, d * l)))
    return QResult(n, label, total * Fraction(n, d * (n + 1)))


def derangement_q_sum(n: int) -> int:
    """``(n-1)! q_n({2,3,...})`` from the alternating factorial double sum."""
    if n < 2:
        raise ValueError("n must be >= 2")
    total = 0
    for j in range(n - 1):
        inner = 0
        ratio = 1  # k!/j!
        for k in range(j, n):
            if k > j:
                ratio *= k
            inner += -ratio if k % 2 else ratio
        total += -inner if j % 2 else inner
    return total if n % 2 else -total


def c_n_formula(n: int) -> int:
    """Inclusion-exclusion count of n-cycles p with no ``p(i) = i - 1 (mod n)``."""
    if n < 2:
        raise ValueError("n must be >= 2")
    # n! / ((n - mu) mu!) = C(n, mu) (n - mu - 1)!
    total = sum((-1) ** mu * comb(n, mu) * factorial(n - mu - 1) for mu in range(n))
    return total + (-1) ** n


def asymptotic_estimate(n: int) -> float:
    """``(pi n / 2) ** -0.5``, the leading term of q_n(even) for even n.

    q_n(odd) is asymptotically twice this: an all-odd permutation is always
    even, and so is every product of two n-cycles.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    return 1.0 / math.sqrt(math.pi * n / 2)

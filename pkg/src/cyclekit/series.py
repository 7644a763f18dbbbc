"""Exact truncated power series with rational coefficients."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .aset import CycleLengthSet

__all__ = ["TruncatedSeries", "f_a_series", "series_mul", "series_exp"]


@dataclass(frozen=True)
class TruncatedSeries:
    """``c_0 + c_1 x + ... + c_order x^order``; coefficients are Fractions."""

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Sequence):
        coeffs = tuple(Fraction(c) for c in coeffs)
        if not coeffs:
            raise ValueError("a series needs at least the constant coefficient")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls([0] * (order + 1))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k]

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries([-c for c in self.coeffs])

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return series_mul(self, other)

    def exp(self) -> "TruncatedSeries":
        return series_exp(self)


def f_a_series(a: CycleLengthSet, n: int) -> TruncatedSeries:
    """Sum of ``x^r / r`` over allowed lengths ``r <= n``."""
    if n > a.n_max:
        raise ValueError(f"order {n} exceeds n_max={a.n_max} of the length set")
    coeffs = [Fraction(0)] * (n + 1)
    for r in a.lengths(n):
        coeffs[r] = Fraction(1, r)
    return TruncatedSeries(coeffs)


def series_mul(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    if f.order != g.order:
        raise ValueError(f"order mismatch: {f.order} vs {g.order}")
    n = f.order
    a, b = f.coeffs, g.coeffs
    return TruncatedSeries([sum((a[i] * b[k - i] for i in range(k + 1)), Fraction(0)) for k in range(n + 1)])


def series_exp(f: TruncatedSeries) -> TruncatedSeries:
    # n e_n = sum_{k=1..n} k f_k e_{n-k}
    if f.coeffs[0] != 0:
        raise ValueError("exp needs a series with zero constant term")
    n = f.order
    kf = [k * c for k, c in enumerate(f.coeffs)]
    support = [k for k in range(1, n + 1) if kf[k]]
    e = [Fraction(1)] + [Fraction(0)] * n
    for m in range(1, n + 1):
        acc = sum((kf[k] * e[m - k] for k in support if k <= m), Fraction(0))
        e[m] = acc / m
    return TruncatedSeries(e)

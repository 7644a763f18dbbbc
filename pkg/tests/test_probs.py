import itertools
from fractions import Fraction as Fr
from math import comb, factorial

import pytest

from cyclekit.aset import aset_from_members, complement_aset, make_aset
from cyclekit.probs import p_closed, p_closed_divisible, p_partition_sum, p_series, pc_partition_sum


def brute_p(a, k):
    """Fraction of permutations of [k] with all cycle lengths in a, by enumeration."""
    from cyclekit.permcore import Permutation, cycle_type

    if k == 0:
        return Fr(1)
    hits = sum(cycle_type(Permutation(tuple(p))).lengths_in(a) for p in itertools.permutations(range(1, k + 1)))
    return Fr(hits, factorial(k))


def test_series_examples():
    assert p_series(make_aset("even", 2), 2) == (1, 0, Fr(1, 2))
    assert p_series(make_aset("odd", 3), 3) == (1, 1, Fr(1, 2), Fr(1, 2))
    assert p_series(make_aset("min:1", 6), 6) == (1,) * 7


def test_series_matches_enumeration():
    for k in range(1, 7):
        for spec in ("even", "odd", "min:2", "div:3", "set:1,4"):
            a = make_aset(spec, 6)
            assert p_series(a, k)[k] == brute_p(a, k)


def test_partition_sum_examples():
    assert p_partition_sum(make_aset("even", 2), 2) == Fr(1, 2)
    assert p_partition_sum(make_aset("min:2", 3), 3) == Fr(1, 3)
    assert p_partition_sum(make_aset("min:1", 5), 5) == 1


def test_pc_partition_sum_examples():
    assert pc_partition_sum(make_aset("min:2", 4), 4) == Fr(1, 24)
    assert pc_partition_sum(make_aset("even", 3), 3) == Fr(1, 2) == p_series(make_aset("odd", 3), 3)[3]
    assert pc_partition_sum(make_aset("div:3", 5), 0) == 1


def test_closed_examples():
    assert p_closed("even", 4) == Fr(3, 8)
    assert p_closed("odd", 5) == Fr(3, 8)
    assert p_closed("odd", 1) == 1
    with pytest.raises(ValueError):
        p_closed("even", 3)


def test_closed_divisible_examples():
    assert p_closed_divisible(4, 2) == Fr(3, 8)
    assert p_closed_divisible(3, 3) == Fr(1, 3)
    assert p_closed_divisible(7, 1) == 1
    with pytest.raises(ValueError):
        p_closed_divisible(5, 2)


def test_all_subsets_routes_agree():
    n = 8
    for mask in range(1 << n):
        a = aset_from_members([r for r in range(1, n + 1) if mask >> (r - 1) & 1], n)
        ps, pcs = p_series(a, n), p_series(complement_aset(a), n)
        for k in range(n + 1):
            assert p_partition_sum(a, k) == ps[k]
            assert pc_partition_sum(a, k) == pcs[k]


def test_closed_forms_against_series():
    e, o = p_series(make_aset("even", 200), 200), p_series(make_aset("odd", 200), 200)
    for n in range(1, 201):
        if n % 2 == 0:
            assert e[n] == p_closed("even", n) == Fr(comb(n, n // 2), 2**n)
        assert o[n] == p_closed("odd", n)


def test_divisible_against_series():
    for d in range(1, 6):
        ps = p_series(make_aset(f"div:{d}", 40), 40)
        for n in range(0, 41, d):
            assert p_closed_divisible(n, d) == ps[n]

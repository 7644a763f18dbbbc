import random
from collections import Counter
from math import factorial

import pytest
from hypothesis import given, strategies as st

from cyclekit.characters import partitions_of
from cyclekit.permcore import (
    CycleType,
    Permutation,
    canonical_cycle,
    class_size,
    compose,
    cycle_type,
    enumerate_ncycles,
    iter_arrangements,
    lehmer_rank,
    lehmer_unrank,
    parse_cycles,
    random_ncycle,
)

P = parse_cycles


def test_compose_examples():
    q = P("(1 3)(2 4)")
    assert compose(Permutation.identity(4), q) == q
    assert compose(P("(1 2 3 4)"), P("(1 2 3 4)")) == P("(1 3)(2 4)")
    assert compose(P("(1 2 3)"), P("(1 3 2)")) == Permutation.identity(3)


def test_compose_convention():
    p, q = P("(1 2)", 3), P("(2 3)")
    assert compose(p, q)(2) == p(q(2)) == 3
    assert compose(p, q)(1) == 2


def test_compose_size_mismatch():
    with pytest.raises(ValueError):
        compose(Permutation.identity(3), Permutation.identity(4))


def test_cycle_type_examples():
    assert cycle_type(Permutation.identity(4)).nu == {1: 4}
    assert cycle_type(P("(1 3)(2 4)")).nu == {2: 2}
    assert cycle_type(P("(1 2 3)", 4)).nu == {1: 1, 3: 1}


def test_enumerate_small():
    assert list(enumerate_ncycles(2)) == [P("(1 2)")]
    assert set(enumerate_ncycles(3)) == {P("(1 2 3)"), P("(1 3 2)")}
    five = list(enumerate_ncycles(5))
    assert len(five) == 24 == len(set(five))
    assert all(cycle_type(c).parts == (5,) for c in five)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 6, 7])
def test_enumeration_length_and_type(n):
    cycles = list(enumerate_ncycles(n))
    assert len(cycles) == factorial(n - 1)
    assert all(cycle_type(c).parts == (n,) for c in cycles)


@pytest.mark.parametrize("splits", [1, 2, 3, 7, 50])
def test_range_split_matches_full_stream(splits):
    n = 6
    total = factorial(n - 1)
    bounds = [round(i * total / splits) for i in range(splits + 1)]
    pieces = [a for lo, hi in zip(bounds, bounds[1:]) for a in iter_arrangements(n, lo, hi)]
    assert pieces == list(iter_arrangements(n))


def test_lehmer_roundtrip():
    items = [2, 3, 4, 5, 6]
    for r in range(factorial(5)):
        assert lehmer_rank(lehmer_unrank(r, items)) == r
    assert lehmer_unrank(0, items) == items
    with pytest.raises(ValueError):
        lehmer_unrank(120, items)


def test_random_ncycle():
    assert random_ncycle(2, 123) == P("(1 2)")
    assert random_ncycle(9, 5) == random_ncycle(9, 5)
    assert cycle_type(random_ncycle(9, 5)).parts == (9,)


def test_random_ncycle_uniform():
    trials = 100_000
    freq = Counter(random_ncycle(4, seed) for seed in range(trials))
    assert len(freq) == 6
    sigma = (trials * (1 / 6) * (5 / 6)) ** 0.5
    for count in freq.values():
        assert abs(count - trials / 6) < 3 * sigma


def test_class_size_examples():
    assert class_size(CycleType({1: 4})) == 1
    assert class_size(CycleType({2: 2})) == 3
    assert class_size(CycleType({4: 1})) == 6


@pytest.mark.parametrize("n", range(1, 13))
def test_class_sizes_sum_to_factorial(n):
    assert sum(class_size(CycleType(lam)) for lam in partitions_of(n)) == factorial(n)


@given(st.integers(1, 9), st.randoms(use_true_random=False))
def test_compose_associative(n, rnd):
    def rand_perm():
        img = list(range(1, n + 1))
        rnd.shuffle(img)
        return Permutation(tuple(img))

    a, b, c = rand_perm(), rand_perm(), rand_perm()
    assert compose(compose(a, b), c) == compose(a, compose(b, c))
    assert compose(a, a.inverse()) == Permutation.identity(n)


def test_parse_and_print_roundtrip():
    p = P("(1 3 2)(4)")
    assert str(p) == "(1 3 2)(4)"
    assert P(str(p)) == p
    assert P("(1,3,2)", 5).n == 5
    assert canonical_cycle(4) == P("(1 2 3 4)")
    with pytest.raises(ValueError):
        P("1 2 3")
    with pytest.raises(ValueError):
        P("(1 2)(2 3)")


def test_cycle_type_sign():
    assert CycleType([3, 1]).sign == 1
    assert CycleType([4]).sign == -1
    assert str(CycleType({2: 1, 1: 2})) == "2+1+1"

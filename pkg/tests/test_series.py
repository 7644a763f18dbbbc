from fractions import Fraction as Fr

import pytest
from hypothesis import given, strategies as st

from cyclekit.aset import make_aset
from cyclekit.series import TruncatedSeries, f_a_series, series_exp, series_mul


def S(*c):
    return TruncatedSeries(c)


def test_f_even():
    assert f_a_series(make_aset("even", 4), 4) == S(0, 0, Fr(1, 2), 0, Fr(1, 4))


def test_f_empty_and_odd():
    assert f_a_series(make_aset("set:", 3), 3) == TruncatedSeries.zero(3)
    assert f_a_series(make_aset("odd", 3), 3) == S(0, 1, 0, Fr(1, 3))


def test_f_order_guard():
    with pytest.raises(ValueError):
        f_a_series(make_aset("even", 3), 4)


def test_mul_examples():
    assert series_mul(S(1, 1, 0), S(1, -1, 0)) == S(1, 0, -1)
    assert S(1, 2, 3) * TruncatedSeries.zero(2) == TruncatedSeries.zero(2)
    assert S(1, 1, 1) * S(1, 1, 1) == S(1, 2, 3)


def test_mul_order_mismatch():
    with pytest.raises(ValueError):
        series_mul(S(1, 1), S(1, 1, 1))


def test_exp_examples():
    assert series_exp(TruncatedSeries.zero(3)) == S(1, 0, 0, 0)
    assert series_exp(S(0, 1, 0, 0)) == S(1, 1, Fr(1, 2), Fr(1, 6))
    assert series_exp(f_a_series(make_aset("even", 2), 2))[2] == Fr(1, 2)


def test_exp_rejects_constant_term():
    with pytest.raises(ValueError):
        series_exp(S(1, 1))


small_fracs = st.fractions(min_value=-3, max_value=3, max_denominator=7)


@given(st.lists(small_fracs, min_size=1, max_size=7))
def test_exp_inverse(tail):
    f = TruncatedSeries([0, *tail])
    one = TruncatedSeries([1] + [0] * len(tail))
    assert f.exp() * (-f).exp() == one


@given(st.lists(st.booleans(), min_size=1, max_size=10))
def test_exp_of_fa_nonnegative(member):
    n = len(member)
    spec = "set:" + ",".join(str(r) for r, m in enumerate(member, 1) if m)
    coeffs = series_exp(f_a_series(make_aset(spec, n), n)).coeffs
    assert all(0 <= c <= 1 for c in coeffs)

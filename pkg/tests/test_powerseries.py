import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qschroeder.errors import IncompatibleSeriesError, NonUnitError
from qschroeder.exactnum import QPoly
from qschroeder.powerseries import (TruncSeries, ts_add, ts_eq_to_order, ts_inverse, ts_mul,
                                    ts_mul_z, ts_qdilate)

from conftest import nonzero_rationals, small_rationals


def S(coeffs, N, q=F(1, 2)):
    return TruncSeries(coeffs, N, q=q)


def brute_cauchy(a, b, N):
    out = [F(0)] * (N + 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            if i + j <= N:
                out[i + j] += ai * bj
    return out


def test_length_invariant():
    assert len(S([1, 2, 3, 4, 5], 2)) == 3
    assert len(S([1], 4)) == 5
    assert S([], 3).coeffs == (0, 0, 0, 0)


def test_add_examples():
    assert ts_add(S([1, 1], 2), S([1, -1], 2)) == S([2], 2)
    s = S([1, 1, 3], 2)
    assert ts_add(s, S([], 2)) == s
    assert ts_add(S([1, 1, 3], 2), S([-1], 2)) == S([0, 1, 3], 2)


def test_mul_examples():
    assert ts_mul(S([1, 1], 2), S([1, 1], 2)) == S([1, 2, 1], 2)
    f = S([1, 1, 3, 11], 3)
    expected = brute_cauchy([1, 1, 3, 11], [1, 1, 3, 11], 3)
    assert expected == [1, 2, 7, 28]
    assert ts_mul(f, f) == S(expected, 3)
    assert ts_mul(f, S([1], 3)) == f


def test_inverse_examples():
    assert ts_inverse(S([1, -1], 3)) == S([1, 1, 1, 1], 3)
    assert ts_inverse(S([1, 1], 2)) == S([1, -1, 1], 2)
    with pytest.raises(NonUnitError):
        ts_inverse(S([0, 1, 1], 5))


def test_qdilate_examples():
    assert ts_qdilate(S([1, 1, 1], 2, q=2)) == S([1, 2, 4], 2, q=2)
    assert ts_qdilate(S([F(7, 3)], 4, q=5)) == S([F(7, 3)], 4, q=5)


def test_double_dilation_is_dilation_by_q_squared():
    s = S([1, F(-2, 3), 5, 1, F(1, 7)], 4, q=F(1, 2))
    twice = ts_qdilate(ts_qdilate(s))
    direct = [c * F(1, 4) ** n for n, c in enumerate(s.coeffs)]
    assert twice.coeffs == tuple(direct)


def test_qdilate_qpoly_mode():
    s = TruncSeries([1, 1, 1], 2, mode="qpoly")
    d = ts_qdilate(s)
    assert d.coeffs == (QPoly([1]), QPoly([0, 1]), QPoly([0, 0, 1]))


def test_mul_z_examples():
    assert ts_mul_z(S([1, 1], 2), 1) == S([0, 1, 1], 2)
    s = S([1, 2, 3], 2)
    assert ts_mul_z(s, 0) == s
    assert ts_mul_z(s, 3) == S([], 2)


def test_eq_to_order_examples():
    a, b = S([1, 1], 3), S([1, 1, 0, 5], 3)
    assert ts_eq_to_order(a, b, 2)
    cmp = ts_eq_to_order(a, b, 3)
    assert not cmp
    assert (cmp.index, cmp.left, cmp.right) == (3, 0, 5)
    assert ts_eq_to_order(b, b, 3)


@pytest.mark.parametrize("other", [S([1], 3), S([1], 2, q=F(1, 3)),
                                   TruncSeries([1], 2, mode="qpoly")])
def test_incompatible_series_rejected(other):
    with pytest.raises(IncompatibleSeriesError):
        ts_add(S([1], 2), other)


def test_random_sparse_products_match_brute_force():
    rng = random.Random(2024)
    for _ in range(50):
        N = rng.randint(0, 8)
        a = [F(rng.randint(-4, 4), rng.randint(1, 3)) if rng.random() < 0.4 else F(0)
             for _ in range(N + 1)]
        b = [F(rng.randint(-4, 4), rng.randint(1, 3)) if rng.random() < 0.4 else F(0)
             for _ in range(N + 1)]
        assert ts_mul(S(a, N), S(b, N)).coeffs == tuple(brute_cauchy(a, b, N))


series = st.integers(0, 7).flatmap(
    lambda N: st.lists(small_rationals, min_size=N + 1, max_size=N + 1).map(lambda cs: S(cs, N)))
unit_series = series.filter(lambda s: s.coeffs[0] != 0)


@given(unit_series)
def test_inverse_property(a):
    assert ts_mul(a, ts_inverse(a)) == S([1], a.order)


@settings(max_examples=50)
@given(series, st.data())
def test_dilation_is_ring_map(a, data):
    b = data.draw(st.lists(small_rationals, min_size=a.order + 1, max_size=a.order + 1))
    b = S(b, a.order)
    assert ts_qdilate(ts_mul(a, b)) == ts_mul(ts_qdilate(a), ts_qdilate(b))


@given(series)
def test_dilation_at_q_one_is_identity(a):
    a1 = TruncSeries(a.coeffs, a.order, q=1)
    assert ts_qdilate(a1) == a1


@given(nonzero_rationals)
def test_qpoly_mode_inverse_of_constant_unit(c):
    s = TruncSeries([c, 1, QPoly([0, 1])], 3, mode="qpoly")
    assert ts_mul(s, ts_inverse(s)) == TruncSeries([1], 3, mode="qpoly")


def test_json_roundtrip():
    s = S([1, F(-2, 3), 0, 7], 3, q=F(2, 5))
    assert TruncSeries.from_json(s.to_json()) == s
    assert s.to_json()["coeffs"] == ["1", "-2/3", "0", "7"]
    p = TruncSeries([QPoly([1, 2]), 3], 2, mode="qpoly")
    assert TruncSeries.from_json(p.to_json()) == p

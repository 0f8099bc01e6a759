from fractions import Fraction as F
from math import comb

import pytest

from qschroeder.errors import DegenerateQError
from qschroeder.powerseries import TruncSeries, ts_inverse, ts_mul
from qschroeder.qkit import (QFactorialCache, qbinomial, qexp_inv_series, qexp_series,
                             qpochhammer_inv_qbinomial, qpochhammer_inv_series,
                             qpochhammer_series)

from conftest import GENERIC_Q


def qfact(n, q):
    out = F(1)
    for j in range(1, n + 1):
        out *= 1 - q**j
    return out


def test_qbinomial_examples():
    assert qbinomial(3, 1, 2) == 1 + 2 + 4 == 7
    assert qbinomial(9, 0, F(3, 5)) == 1
    assert qbinomial(4, 2, 1) == 6
    assert qbinomial(2, 5, F(1, 2)) == 0


@pytest.mark.parametrize("q", GENERIC_Q)
def test_qbinomial_matches_factorial_ratio(q):
    for n in range(13):
        for k in range(n + 1):
            assert qbinomial(n, k, q) == qfact(n, q) / (qfact(k, q) * qfact(n - k, q))


@pytest.mark.parametrize("q", GENERIC_Q)
def test_q_pascal_and_symmetry(q):
    for n in range(1, 13):
        for k in range(1, n):
            assert qbinomial(n, k, q) == qbinomial(n - 1, k - 1, q) + q**k * qbinomial(n - 1, k, q)
        for k in range(n + 1):
            assert qbinomial(n, k, q) == qbinomial(n, n - k, q)


@pytest.mark.parametrize("q", [F(1), F(-1)])
def test_qbinomial_at_roots_of_unity(q):
    # q = 1 gives ordinary binomials; q = -1 is finite too since no division happens.
    if q == 1:
        assert [qbinomial(6, k, q) for k in range(7)] == [comb(6, k) for k in range(7)]
    else:
        assert qbinomial(4, 2, q) == 2


def test_factorial_cache():
    cache = QFactorialCache(F(-1), 5)
    assert cache[0] == 1 and cache[1] == 2
    assert cache.first_zero == 2
    with pytest.raises(DegenerateQError):
        cache.nonzero(3)
    cache = QFactorialCache(F(1, 2), 4)
    assert all(cache[k] == cache[k - 1] * (1 - F(1, 2) ** k) for k in range(1, 5))


def test_qpochhammer_examples():
    assert qpochhammer_series(1, 1, 4, F(3)) == TruncSeries([1, -1], 4, q=3)
    # (1 - z)(1 - 2z) expanded by hand.
    assert qpochhammer_series(1, 2, 4, 2) == TruncSeries([1, -3, 2], 4, q=2)
    assert qpochhammer_series(5, 0, 3, 2) == TruncSeries([1], 3, q=2)


def test_qpochhammer_inverse_examples():
    assert qpochhammer_inv_series(1, 1, 5, F(1, 2)) == TruncSeries([1] * 6, 5, q=F(1, 2))
    inv = qpochhammer_inv_series(1, 2, 4, 2)
    assert inv.coeffs[2] == qbinomial(3, 2, 2) == 7
    assert qpochhammer_inv_series(3, 0, 4, 2) == TruncSeries([1], 4, q=2)


@pytest.mark.parametrize("x", [F(1), F(2), F(-1, 2), F(3)])
@pytest.mark.parametrize("q", GENERIC_Q[:3])
def test_qbinomial_expansion_needs_x_power(x, q):
    N = 10
    for k in range(5):
        by_inversion = qpochhammer_inv_series(x, k, N, q)
        assert qpochhammer_inv_qbinomial(x, k, N, q) == by_inversion
        prod = ts_mul(qpochhammer_series(x, k, N, q), qpochhammer_inv_qbinomial(x, k, N, q))
        assert prod == TruncSeries([1], N, q=q)
    # Without x^j the expansion is wrong as soon as x != 1.
    naive = TruncSeries([qbinomial(2 + j - 1, j, q) for j in range(N + 1)], N, q=q)
    assert (naive == qpochhammer_inv_series(x, 2, N, q)) == (x == 1)


def test_qexp_examples():
    e = qexp_series(6, 2)
    assert e.coeffs[1] == F(1, 1 - 2) == -1
    assert qexp_series(5, 0) == TruncSeries([1] * 6, 5, q=0)
    with pytest.raises(DegenerateQError):
        qexp_series(4, 1)


def test_qexp_inverse_examples():
    einv = qexp_inv_series(6, 2)
    assert einv.coeffs[0] == 1
    assert einv.coeffs[2] == F(2, 3)
    assert einv == ts_inverse(qexp_series(6, 2))
    q = F(1, 3)
    assert ts_mul(qexp_series(16, q), qexp_inv_series(16, q)) == TruncSeries([1], 16, q=q)


@pytest.mark.parametrize("q", GENERIC_Q + [F(0)])
@pytest.mark.parametrize("scale", [F(1), F(-2), F(2, 3)])
def test_qexp_product_is_one(q, scale):
    N = 16
    prod = ts_mul(qexp_series(N, q, scale), qexp_inv_series(N, q, scale))
    assert prod == TruncSeries([1], N, q=q)

"""q-binomials, q-Pochhammer products and the q-exponential as series."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .errors import DegenerateQError
from .exactnum import as_rational
from .powerseries import TruncSeries, ts_inverse


class QFactorialCache:
    """Table of (q;q)_k = (1-q)(1-q^2)...(1-q^k) for k = 0..K.

    When some entry vanishes (q = 1, or q = -1 and an even index) the index is
    kept in ``first_zero`` and :meth:`nonzero` refuses every k at or beyond it.
    """

    def __init__(self, q, K: int):
        self.q = as_rational(q)
        self.table = [Fraction(1)]
        self.first_zero = None
        qk = Fraction(1)
        for k in range(1, K + 1):
            qk *= self.q
            self.table.append(self.table[-1] * (1 - qk))
            if self.first_zero is None and self.table[-1] == 0:
                self.first_zero = k

    def __getitem__(self, k: int) -> Fraction:
        return self.table[k]

    def nonzero(self, k: int) -> Fraction:
        if self.first_zero is not None and k >= self.first_zero:
            raise DegenerateQError(self.q, self.first_zero)
        return self.table[k]


def check_nondegenerate(q, N: int) -> None:
    """Raise :class:`DegenerateQError` if (q;q)_j = 0 for some j <= N."""
    QFactorialCache(q, N).nonzero(N)


@lru_cache(maxsize=256)
def _pascal_row(n: int, q: Fraction) -> tuple[Fraction, ...]:
    if n == 0:
        return (Fraction(1),)
    prev = _pascal_row(n - 1, q)
    row = [Fraction(1)]
    qk = Fraction(1)
    for k in range(1, n):
        qk *= q
        row.append(prev[k - 1] + qk * prev[k])
    row.append(Fraction(1))
    return tuple(row)


def qbinomial(n: int, k: int, q) -> Fraction:
    """Gaussian binomial [n choose k]_q.

    Built from the q-Pascal rule [n,k] = [n-1,k-1] + q^k [n-1,k], which never
    divides, so roots of unity such as q = 1 or q = -1 are fine here.
    """
    if k < 0 or n < 0 or k > n:
        return Fraction(0)
    return _pascal_row(n, as_rational(q))[k]


def qpochhammer_series(x, k: int, N: int, q) -> TruncSeries:
    """(xz; q)_k = (1 - xz)(1 - qxz)...(1 - q^(k-1) xz) truncated at z^N."""
    x, q = as_rational(x), as_rational(q)
    poly = [Fraction(1)]
    qj = Fraction(1)
    for _ in range(k):
        c = qj * x
        nxt = poly + [Fraction(0)]
        for i in range(len(poly)):
            nxt[i + 1] -= c * poly[i]
        poly = nxt
        qj *= q
    return TruncSeries(poly[: N + 1], N, q=q)


@lru_cache(maxsize=1024)
def qpochhammer_inv_series(x, k: int, N: int, q) -> TruncSeries:
    """1/(xz; q)_k via series inversion of the finite product."""
    return ts_inverse(qpochhammer_series(x, k, N, q))


def qpochhammer_inv_qbinomial(x, k: int, N: int, q) -> TruncSeries:
    """1/(xz; q)_k as the sum over j of [k+j-1 choose j]_q (xz)^j.

    The x^j factor is needed for the product with (xz; q)_k to be 1.
    """
    x, q = as_rational(x), as_rational(q)
    if k == 0:
        return TruncSeries.const(1, N, q=q)
    return TruncSeries([qbinomial(k + j - 1, j, q) * x**j for j in range(N + 1)], N, q=q)


def qexp_series(N: int, q, scale=1) -> TruncSeries:
    """e(scale*z) = sum of (scale z)^n / (q;q)_n."""
    q, scale = as_rational(q), as_rational(scale)
    fac = QFactorialCache(q, N)
    return TruncSeries([scale**n / fac.nonzero(n) for n in range(N + 1)], N, q=q)


def qexp_inv_series(N: int, q, scale=1) -> TruncSeries:
    """1/e(scale*z) = sum of (-1)^n q^C(n,2) (scale z)^n / (q;q)_n."""
    q, scale = as_rational(q), as_rational(scale)
    fac = QFactorialCache(q, N)
    return TruncSeries(
        [(-1) ** n * q ** (n * (n - 1) // 2) * scale**n / fac.nonzero(n) for n in range(N + 1)],
        N, q=q)

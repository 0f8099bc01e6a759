"""The series h, H, F and f built from closed forms and quotients.

These constructions are deliberately independent of the recurrences in
:mod:`qschroeder.schroeder`; agreement between the two is what the verifier
checks. All closed-form builders here work in rational mode only.

Sign convention for h: the coefficient of z^k is

    (-1)^k q^C(k,2) (x+y)(x+qy)...(x+q^(k-1)y) / ((1-q)(1-q^2)...(1-q^k)),

i.e. the (-z)^k of the series is folded into the coefficient. Writing the
denominator as (q-1)...(q^k-1) instead gives the same number without the
explicit sign.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import DomainError
from .powerseries import QPOLY, TruncSeries, ts_inverse, ts_mul, ts_qdilate
from .qkit import QFactorialCache, qpochhammer_inv_series
from .schroeder import Params, gen_A, gen_a


def _require_rational(p: Params, what: str) -> None:
    if p.mode == QPOLY:
        raise DomainError(f"{what} needs a numeric q (rational mode)")


@lru_cache(maxsize=4096)
def h_series(p: Params) -> TruncSeries:
    _require_rational(p, "h_series")
    q, x, y, N = p.q, p.x, p.y, p.N
    fac = QFactorialCache(q, N)
    fac.nonzero(N)
    coeffs = []
    num = Fraction(1)
    qj = Fraction(1)
    for k in range(N + 1):
        if k:
            num *= x + qj * y
            qj *= q
        if num == 0:
            coeffs.append(Fraction(0))
            continue
        coeffs.append((-1) ** k * q ** (k * (k - 1) // 2) * num / fac.nonzero(k))
    return TruncSeries(coeffs, N, q=q)


@lru_cache(maxsize=4096)
def H_series(p: Params) -> TruncSeries:
    """sum over k of q^(k^2-k) (-yz)^k / ((q;q)_k (xz;q)_k), truncated at z^N."""
    _require_rational(p, "H_series")
    q, x, y, N = p.q, p.x, p.y, p.N
    fac = QFactorialCache(q, N)
    fac.nonzero(N)
    total = [Fraction(0)] * (N + 1)
    for k in range(N + 1):
        if y == 0 and k > 0:
            break
        c = q ** (k * k - k) * (-y) ** k / fac.nonzero(k)
        if c == 0:
            continue
        inv = qpochhammer_inv_series(x, k, N - k, q)
        for j, v in enumerate(inv.coeffs):
            total[k + j] += c * v
    return TruncSeries(total, N, q=q)


@lru_cache(maxsize=4096)
def F_from_h(p: Params) -> TruncSeries:
    h = h_series(p)
    return ts_mul(ts_qdilate(h), ts_inverse(h))


@lru_cache(maxsize=4096)
def f_from_h(p: Params) -> TruncSeries:
    """h(z, x, qy) / h(z, x, y); defined even when x + y = 0."""
    return ts_mul(h_series(p.scale_y()), ts_inverse(h_series(p)))


@lru_cache(maxsize=4096)
def f_from_H(p: Params) -> TruncSeries:
    return ts_mul(H_series(p.scale_y()), ts_inverse(H_series(p)))


def _series(coeffs, p: Params) -> TruncSeries:
    return TruncSeries(coeffs, p.N, p.mode, p.q)


@lru_cache(maxsize=4096)
def F_from_recurrence(p: Params) -> TruncSeries:
    return _series(gen_A(p.N, p), p)


@lru_cache(maxsize=4096)
def f_from_recurrence(p: Params) -> TruncSeries:
    return _series(gen_a(p.N, p), p)


def f_from_F(F: TruncSeries, p: Params) -> TruncSeries:
    """(x + yF) / (x + y), coefficientwise."""
    s = p.x + p.y
    if s == 0:
        raise DomainError(
            "x + y = 0: f cannot be recovered from F; use f_from_h or f_from_recurrence")
    if p.mode == QPOLY:
        if not s.is_constant():
            raise DomainError("x + y is not a unit in Q[q]")
        s = s.constant_term()
    return (F * p.y + p.x) * (1 / s)


@dataclass(frozen=True)
class SeriesBundle:
    params: Params
    h: TruncSeries
    h_qy: TruncSeries
    H: TruncSeries
    H_qy: TruncSeries
    F: TruncSeries
    f: TruncSeries


def build_bundle(p: Params) -> SeriesBundle:
    return SeriesBundle(
        params=p,
        h=h_series(p),
        h_qy=h_series(p.scale_y()),
        H=H_series(p),
        H_qy=H_series(p.scale_y()),
        F=F_from_h(p),
        f=f_from_h(p),
    )

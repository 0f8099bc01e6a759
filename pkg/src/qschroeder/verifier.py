"""Coefficientwise verification of the q-series identities at rational points.

Each registry case maps a parameter point to two or more series built along
different construction paths; the case passes at a point when all of them
agree exactly through z^N. Identities in q, x, y are checked at several
seeded rational sample points instead of symbolically.

Registry ids and what they cover::

    eq-1.2              f = 1 - z f + 2 z f^2 at q = x = y = 1
    eq-2.2, eq-2.4      functional equations of F and f vs. their recurrences
    eq-2.6              also stands for 2.12, which is the same display
    eq-2.7, eq-2.10,
    eq-2.10h            quotient forms of F and f
    eq-2.11, eq-2.13    product identities
    eq-2.14, eq-2.22    three-term relations for h and H
    eq-2.17, eq-2.18,
    eq-2.19, eq-2.24    H-quotient and Touchard-type forms of f
    eq-2.26, eq-cauchy  h e(xz) = H and its (x, y) = (q, -q) case
    eq-3.1, eq-3.2      reciprocal forms
    eq-3.6              three-way closed form at (x, y) = (q, -q)
    eq-3.7-i0..i3       Prodinger's quotient for i = 0..3
    cf-*                every continued fraction of the catalogue
    hankel-jfraction    Hankel determinants vs. J-fraction coefficients

Displays 2.1, 2.3, 2.8, 2.9, 2.15, 2.16, 2.20, 2.21, 2.23 and 2.25 are
definitions or derivation steps; they enter through the builders in
:mod:`qschroeder.closedforms` and :mod:`qschroeder.qkit`.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .closedforms import (F_from_h, F_from_recurrence, H_series, f_from_F, f_from_H,
                          f_from_h, f_from_recurrence, h_series)
from .contfrac import CATALOGUE, cf_catalogue, cf_stabilized, cf_target, explicit_coefficients
from .contfrac import jacobi_lambda
from .errors import DomainError, RejectedParamsError
from .exactnum import scalar_to_json
from .powerseries import TruncSeries, compare_coeffs
from .qkit import QFactorialCache, qbinomial, qexp_series, qpochhammer_inv_qbinomial
from .schroeder import DEFAULT_ORDER, Params, gen_a

Builder = Callable[[Params], Sequence[Sequence]]
Constraint = Callable[[Params], "str | None"]


# -- sample plans -------------------------------------------------------------

F_ = Fraction
DEFAULT_Q_POOL = (F_(1, 2), F_(1, 3), F_(2, 3), F_(2), F_(3, 2))
DEFAULT_XY_POOL = (F_(1), F_(2), F_(1, 2), F_(-1, 2), F_(3))


@dataclass(frozen=True)
class SamplePlan:
    seed: int = 42
    points: int = 5
    N: int = DEFAULT_ORDER
    q_pool: tuple = DEFAULT_Q_POOL
    x_pool: tuple = DEFAULT_XY_POOL
    y_pool: tuple = DEFAULT_XY_POOL

    def __post_init__(self):
        bad = [q for q in self.q_pool if QFactorialCache(q, max(self.N, 2)).first_zero]
        if bad:
            raise DomainError(f"degenerate q in sample pool: {bad}")


# -- reports ------------------------------------------------------------------

@dataclass(frozen=True)
class PointResult:
    params: Params
    passed: bool
    mismatch_order: int | None = None
    lhs: object = None
    rhs: object = None

    def to_json(self) -> dict:
        p = self.params
        out = {"q": None if p.q is None else str(p.q), "x": scalar_to_json(p.x),
               "y": scalar_to_json(p.y), "N": p.N, "pass": self.passed}
        if not self.passed:
            out["mismatch_order"] = self.mismatch_order
            out["lhs"] = scalar_to_json(self.lhs)
            out["rhs"] = scalar_to_json(self.rhs)
        return out


@dataclass(frozen=True)
class IdentityReport:
    id: str
    points: tuple[PointResult, ...] = ()
    note: str = ""

    @property
    def passed(self) -> bool:
        return all(pt.passed for pt in self.points)

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    def to_json(self) -> dict:
        out = {"id": self.id, "points": [pt.to_json() for pt in self.points],
               "verdict": self.verdict}
        if self.note:
            out["note"] = self.note
        return out


# -- registry -----------------------------------------------------------------

@dataclass(frozen=True)
class IdentityCase:
    id: str
    build: Builder
    constraints: tuple[Constraint, ...] = ()
    specialize: Callable[[Params], Params] = field(default=lambda p: p)
    note: str = ""

    def rejection(self, p: Params) -> str | None:
        for check in self.constraints:
            reason = check(p)
            if reason:
                return reason
        return None


def nondegenerate(p: Params) -> str | None:
    if p.q is None:
        return "needs numeric q"
    k = QFactorialCache(p.q, p.N).first_zero
    return f"(q;q)_{k} vanishes" if k else None


def q_nonzero(p: Params) -> str | None:
    return "q = 0" if p.q == 0 else None


def xy_sum_nonzero(p: Params) -> str | None:
    return "x + y = 0" if p.x + p.y == 0 else None


def _one(p):
    return TruncSeries.const(1, p.N, q=p.q)


def _z(p, c=1, k=1):
    return TruncSeries([0] * k + [c], p.N, q=p.q)


def _eq_2_2(p):
    F = F_from_recurrence(p)
    return [F, 1 + _z(p, p.x) * F + _z(p, p.y) * F * F.dilate()]


def _eq_2_4(p):
    f = f_from_recurrence(p)
    fq = f.dilate()
    return [f, 1 - _z(p, p.x) * fq + _z(p, p.x + p.y) * f * fq]


def _eq_2_6(p):
    return [F_from_recurrence(p),
            1 + _z(p, p.x + p.y) * F_from_h(p) * f_from_h(p).dilate()]


def _eq_2_7(p):
    return [F_from_recurrence(p), F_from_h(p)]


def _eq_2_10(p):
    return [f_from_F(F_from_recurrence(p), p), f_from_h(p)]


def _eq_2_10h(p):
    return [f_from_recurrence(p), f_from_h(p)]


def _eq_2_11(p):
    qy = p.scale_y()
    h = h_series(p)
    return [F_from_recurrence(p) * f_from_recurrence(p).dilate(),
            h_series(qy).dilate() / h,
            f_from_h(p) * F_from_h(qy)]


def _eq_2_13(p):
    return [f_from_recurrence(p), 1 + _z(p, p.y) * f_from_h(p) * F_from_h(p.scale_y())]


def _eq_2_14(p):
    iq = 1 / p.q
    return [h_series(p),
            (1 + _z(p, p.x * iq)) * h_series(p.scale_y())
            - _z(p, iq * (p.x + p.q * p.y)) * h_series(p.scale_y(2))]


def _H_by_qbinomial(p: Params, y_power: int):
    """Sum of q^(k^2-k) (-q^j y z)^k / ((q;q)_k (xz;q)_k) with j = y_power.

    The inner 1/(xz;q)_k comes from the q-binomial expansion, not inversion.
    """
    q, N = p.q, p.N
    fac = QFactorialCache(q, N)
    y = q**y_power * p.y
    total = [Fraction(0)] * (N + 1)
    for k in range(N + 1):
        c = q ** (k * k - k) * (-y) ** k / fac.nonzero(k)
        if c:
            for j, v in enumerate(qpochhammer_inv_qbinomial(p.x, k, N - k, q)):
                total[k + j] += c * v
    return TruncSeries(total, N, q=q)


def _eq_2_17(p):
    return [f_from_recurrence(p), _H_by_qbinomial(p, 1) / _H_by_qbinomial(p, 0)]


def _eq_2_18(p):
    iq = 1 / p.q
    tail = 1 + _z(p, p.x * iq) - _z(p, iq * (p.x + p.q * p.y)) * f_from_h(p.scale_y())
    return [f_from_recurrence(p), tail.inverse()]


def _eq_2_19(p):
    iq = 1 / p.q
    f = f_from_H(p)
    return [f, 1 - _z(p, p.x * iq) * f
            + _z(p, iq * (p.x + p.q * p.y)) * f * f_from_H(p.scale_y())]


def _eq_2_22(p):
    iq = 1 / p.q
    Hqy = H_series(p.scale_y())
    return [Hqy, H_series(p) - _z(p, p.x * iq) * Hqy
            + _z(p, iq * (p.x + p.q * p.y)) * H_series(p.scale_y(2))]


def _eq_2_24(p):
    return [f_from_h(p), f_from_H(p)]


def _eq_2_26(p):
    return [h_series(p) * qexp_series(p.N, p.q, p.x), H_series(p)]


def _eq_cauchy(p):
    e = qexp_series(p.N, p.q, p.q)
    return [H_series(p), e, h_series(p) * e]


def _eq_3_1(p):
    return [F_from_recurrence(p), (1 - _z(p, p.x + p.y) * f_from_h(p).dilate()).inverse()]


def _eq_3_2(p):
    return [f_from_recurrence(p), (1 - _z(p, p.y) * F_from_h(p.scale_y())).inverse()]


def _eq_3_6(p):
    q = p.q
    explicit = TruncSeries([(-1) ** n * q ** (n * (n + 1) // 2) for n in range(p.N + 1)],
                           p.N, q=q)
    return [f_from_recurrence(p), h_series(p.with_y(-q * q)), explicit]


def _prodinger(i):
    def build(p):
        q = p.q
        lhs = H_series(p.with_y(-q ** (i + 2))) / H_series(p)
        rhs = TruncSeries([q ** (k * (k + 1) // 2) * qbinomial(k + i, k, q) * (-1) ** k
                           for k in range(p.N + 1)], p.N, q=q)
        return [lhs, rhs]
    return build


def _eq_1_2(p):
    f = f_from_recurrence(p)
    return [f, 1 - _z(p) * f + _z(p, 2) * f * f]


def _cf_case(cid):
    def build(p):
        spec = cf_catalogue(cid, p)
        sp = spec.params
        series = [cf_stabilized(spec).value, cf_target(spec)]
        if sp.q is not None and nondegenerate(sp) is None:
            series.append(F_from_h(sp) if spec.target == "F" else f_from_h(sp))
        explicit = explicit_coefficients(cid, sp)
        if explicit is not None:
            series.append(explicit)
        return series
    return build


def _hankel_nmax(p: Params) -> int:
    return p.N // 2 + 1


def _jacobi_nonzero(p: Params) -> str | None:
    for k in range(1, _hankel_nmax(p)):
        if jacobi_lambda(p, k) == 0:
            return f"lambda_{k} = 0"
    return None


def _hankel_case(p):
    dets, prods = _hankel_pair(p, _hankel_nmax(p))
    return [dets, prods]


_QQ = lambda p: Params(p.q, p.q, -p.q, p.N)  # noqa: E731
_ND = (nondegenerate,)
_NDQ = (nondegenerate, q_nonzero)

_CASES = [
    IdentityCase("eq-1.2", _eq_1_2, specialize=lambda p: Params.rational(1, 1, 1, p.N)),
    IdentityCase("eq-2.2", _eq_2_2),
    IdentityCase("eq-2.4", _eq_2_4),
    IdentityCase("eq-2.6", _eq_2_6, _ND, note="2.12 is the same identity"),
    IdentityCase("eq-2.7", _eq_2_7, _ND),
    IdentityCase("eq-2.10", _eq_2_10, _ND + (xy_sum_nonzero,)),
    IdentityCase("eq-2.10h", _eq_2_10h, _ND),
    IdentityCase("eq-2.11", _eq_2_11, _ND),
    IdentityCase("eq-2.13", _eq_2_13, _ND),
    IdentityCase("eq-2.14", _eq_2_14, _NDQ),
    IdentityCase("eq-2.17", _eq_2_17, _ND),
    IdentityCase("eq-2.18", _eq_2_18, _NDQ),
    IdentityCase("eq-2.19", _eq_2_19, _NDQ),
    IdentityCase("eq-2.22", _eq_2_22, _NDQ),
    IdentityCase("eq-2.24", _eq_2_24, _ND),
    IdentityCase("eq-2.26", _eq_2_26, _ND),
    IdentityCase("eq-cauchy", _eq_cauchy, _ND, specialize=_QQ),
    IdentityCase("eq-3.1", _eq_3_1, _ND),
    IdentityCase("eq-3.2", _eq_3_2, _ND),
    IdentityCase("eq-3.6", _eq_3_6, _ND, specialize=_QQ),
    *[IdentityCase(f"eq-3.7-i{i}", _prodinger(i), _ND, specialize=_QQ) for i in range(4)],
    *[IdentityCase(cid, _cf_case(cid),
                   (q_nonzero,) if CATALOGUE[cid].builder.__name__ == "spec_touchard" else (),
                   specialize=CATALOGUE[cid].specialize)
      for cid in CATALOGUE],
    IdentityCase("hankel-jfraction", _hankel_case, (_jacobi_nonzero,),
                 note="external cross-check: J-fraction/Hankel product relation"),
]

REGISTRY: dict[str, IdentityCase] = {c.id: c for c in _CASES}

# Known-false identities; every sampled point must fail.
SELFTEST: dict[str, IdentityCase] = {
    "false-F": IdentityCase(
        "false-F",
        lambda p: [F_from_recurrence(p), 1 + _z(p, p.x) * F_from_recurrence(p)]),
}


def _lookup(id: str) -> IdentityCase:
    case = REGISTRY.get(id) or SELFTEST.get(id)
    if case is None:
        raise DomainError(f"unknown identity id {id!r}")
    return case


def _coeffs(s) -> list:
    return list(s.coeffs) if isinstance(s, TruncSeries) else list(s)


def _check_point(case: IdentityCase, p: Params, corrupt_at: int | None) -> PointResult:
    series = [_coeffs(s) for s in case.build(p)]
    if corrupt_at is not None and corrupt_at < len(series[0]):
        series[0][corrupt_at] += 1
    ref = series[0]
    for other in series[1:]:
        m = min(len(ref), len(other)) - 1
        cmp = compare_coeffs(ref, other, m)
        if not cmp.ok:
            return PointResult(p, False, cmp.index, cmp.left, cmp.right)
    return PointResult(p, True)


def verify_identity(id: str, p: Params, *, specialize: bool = True,
                    corrupt_at: int | None = None) -> IdentityReport:
    """Check one identity at one point.

    Cases with fixed (x, y) or q apply their specialisation to ``p`` first
    unless ``specialize`` is False.
    """
    case = _lookup(id)
    if specialize:
        p = case.specialize(p)
    reason = case.rejection(p)
    if reason:
        raise RejectedParamsError(f"{id} rejects {p}: {reason}")
    return IdentityReport(id, (_check_point(case, p, corrupt_at),), case.note)


def sample_points(case: IdentityCase, plan: SamplePlan) -> list[Params]:
    rng = random.Random(f"{plan.seed}/{case.id}")
    seen, candidates = set(), []
    for q, x, y in itertools.product(plan.q_pool, plan.x_pool, plan.y_pool):
        p = case.specialize(Params.rational(q, x, y, plan.N))
        if p in seen or case.rejection(p):
            continue
        seen.add(p)
        candidates.append(p)
    return rng.sample(candidates, min(plan.points, len(candidates)))


def verify_all(plan: SamplePlan = SamplePlan(), ids: Iterable[str] | None = None,
               corrupt_at: int | None = None) -> list[IdentityReport]:
    """Run registry cases (all by default) at the plan's sample points.

    Failures are reported, never raised. Output order follows ``ids`` or
    the registry order and does not depend on evaluation order.
    """
    selected = list(REGISTRY) if ids is None else list(ids)
    reports = []
    for id in selected:
        case = _lookup(id)
        pts = tuple(_check_point(case, p, corrupt_at) for p in sample_points(case, plan))
        reports.append(IdentityReport(id, pts, case.note))
    return reports


# -- Hankel determinants ------------------------------------------------------

def hankel_det(seq: Sequence, n: int, offset: int = 0) -> Fraction:
    """det of M[i][j] = seq[i+j+offset], 0 <= i, j < n, by Bareiss elimination."""
    if n < 0:
        raise DomainError("negative Hankel size")
    if n == 0:
        return Fraction(1)
    if len(seq) < 2 * n - 1 + offset:
        raise DomainError(
            f"Hankel determinant of size {n} needs {2 * n - 1 + offset} terms, got {len(seq)}")
    m = [[Fraction(seq[i + j + offset]) for j in range(n)] for i in range(n)]
    sign, prev = 1, Fraction(1)
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) / prev
        prev = pivot
    return sign * m[n - 1][n - 1]


def _hankel_pair(p: Params, nmax: int) -> tuple[list, list]:
    a = gen_a(max(2 * nmax - 2, 0), p)
    lam = [jacobi_lambda(p, k) for k in range(1, nmax)]
    dets = [hankel_det(a, n) for n in range(1, nmax + 1)]
    prods = []
    for n in range(1, nmax + 1):
        v = Fraction(1)
        for k in range(1, n):
            v *= lam[k - 1] ** (n - k)
        prods.append(v)
    return dets, prods


def jfraction_hankel_check(p: Params, nmax: int) -> IdentityReport:
    """Compare D_1..D_nmax of a(n, x, y) with prod_k lambda_k^(n-k)."""
    for k in range(1, nmax):
        if jacobi_lambda(p, k) == 0:
            raise RejectedParamsError(f"lambda_{k} vanishes at {p}")
    dets, prods = _hankel_pair(p, nmax)
    cmp = compare_coeffs(dets, prods, nmax - 1)
    pt = PointResult(p, cmp.ok, cmp.index, cmp.left, cmp.right)
    return IdentityReport("hankel-jfraction", (pt,), REGISTRY["hankel-jfraction"].note)

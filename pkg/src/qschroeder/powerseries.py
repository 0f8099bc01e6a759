"""Truncated formal power series in z.

A :class:`TruncSeries` keeps exactly ``order + 1`` coefficients. Coefficients
live either in the rationals ("rational" mode, with a fixed numeric ``q``
used by the dilation z -> qz) or in Q[q] ("qpoly" mode, where q stays
symbolic). Operations never change the order; combining series of different
order, mode or ambient q raises :class:`IncompatibleSeriesError`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Any, Iterable, Sequence

from .errors import DomainError, IncompatibleSeriesError, NonUnitError
from .exactnum import QPoly, as_rational, scalar_from_json, scalar_to_json

RATIONAL = "rational"
QPOLY = "qpoly"


def _zero(mode):
    return Fraction(0) if mode == RATIONAL else QPoly()


def _coerce_coeff(c, mode):
    if mode == RATIONAL:
        if isinstance(c, QPoly):
            if not c.is_constant():
                raise DomainError("polynomial coefficient in a rational-mode series")
            return c.constant_term()
        return as_rational(c)
    if isinstance(c, QPoly):
        return c
    return QPoly.const(as_rational(c))


class TruncSeries:
    __slots__ = ("coeffs", "mode", "q")

    def __init__(self, coeffs: Iterable, order: int | None = None,
                 mode: str = RATIONAL, q=None):
        if mode not in (RATIONAL, QPOLY):
            raise DomainError(f"unknown series mode {mode!r}")
        cs = [_coerce_coeff(c, mode) for c in coeffs]
        if order is None:
            order = len(cs) - 1
        if order < 0:
            raise DomainError("series order must be non-negative")
        if len(cs) > order + 1:
            cs = cs[: order + 1]
        else:
            cs.extend(_zero(mode) for _ in range(order + 1 - len(cs)))
        self.coeffs: tuple = tuple(cs)
        self.mode = mode
        self.q = as_rational(q) if (mode == RATIONAL and q is not None) else None

    # -- constructors -------------------------------------------------
    @classmethod
    def const(cls, c, order: int, mode: str = RATIONAL, q=None) -> TruncSeries:
        return cls([c], order, mode, q)

    @classmethod
    def zero(cls, order: int, mode: str = RATIONAL, q=None) -> TruncSeries:
        return cls([], order, mode, q)

    def like(self, coeffs: Iterable) -> TruncSeries:
        """A series with the same order, mode and q but new coefficients."""
        return TruncSeries(coeffs, self.order, self.mode, self.q)

    # -- basic accessors ----------------------------------------------
    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n):
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def compatible(self, other: TruncSeries) -> bool:
        return (self.order == other.order and self.mode == other.mode
                and self.q == other.q)

    def _check(self, other: TruncSeries) -> None:
        if not self.compatible(other):
            raise IncompatibleSeriesError(
                f"cannot combine series (order={self.order}, mode={self.mode}, q={self.q}) "
                f"with (order={other.order}, mode={other.mode}, q={other.q})")

    def _lift(self, other) -> TruncSeries | None:
        if isinstance(other, TruncSeries):
            self._check(other)
            return other
        if isinstance(other, (int, _RationalABC, QPoly)):
            return TruncSeries.const(other, self.order, self.mode, self.q)
        return None

    # -- arithmetic operators -----------------------------------------
    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return ts_add(self, other)

    __radd__ = __add__

    def __neg__(self) -> TruncSeries:
        return self.like(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return ts_add(self, -other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return ts_add(other, -self)

    def __mul__(self, other):
        if isinstance(other, TruncSeries):
            return ts_mul(self, other)
        if isinstance(other, (int, _RationalABC, QPoly)):
            c = _coerce_coeff(other, self.mode)
            return self.like(c * a for a in self.coeffs)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, TruncSeries):
            return ts_mul(self, ts_inverse(other))
        if isinstance(other, (int, _RationalABC)):
            if other == 0:
                raise DomainError("division of a series by zero")
            return self * (1 / as_rational(other))
        return NotImplemented

    def __rtruediv__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return ts_mul(other, ts_inverse(self))

    def inverse(self) -> TruncSeries:
        return ts_inverse(self)

    def dilate(self) -> TruncSeries:
        return ts_qdilate(self)

    def shift(self, k: int = 1) -> TruncSeries:
        return ts_mul_z(self, k)

    def truncate(self, m: int) -> TruncSeries:
        if m > self.order:
            raise DomainError(f"cannot extend a series of order {self.order} to {m}")
        return TruncSeries(self.coeffs[: m + 1], m, self.mode, self.q)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.compatible(other) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.coeffs, self.mode, self.q))

    def __repr__(self) -> str:
        body = ", ".join(str(c) for c in self.coeffs)
        return f"TruncSeries([{body}], order={self.order}, mode={self.mode!r}, q={self.q})"

    # -- serialization --------------------------------------------------
    def to_json(self) -> dict[str, Any]:
        return {
            "order": self.order,
            "mode": self.mode,
            "q": None if self.q is None else str(self.q),
            "coeffs": [scalar_to_json(c) for c in self.coeffs],
        }

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> TruncSeries:
        q = data.get("q")
        return cls([scalar_from_json(c) for c in data["coeffs"]], data["order"],
                   data["mode"], None if q is None else as_rational(q))


def ts_add(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    a._check(b)
    return a.like(x + y for x, y in zip(a.coeffs, b.coeffs))


def ts_mul(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    """Cauchy product truncated at the common order."""
    a._check(b)
    n = a.order + 1
    ac, bc = a.coeffs, b.coeffs
    out = [_zero(a.mode) for _ in range(n)]
    for i in range(n):
        ai = ac[i]
        if not ai:
            continue
        for j in range(n - i):
            bj = bc[j]
            if bj:
                out[i + j] = out[i + j] + ai * bj
    return a.like(out)


def _scalar_inverse(c, mode):
    if mode == RATIONAL:
        return 1 / c
    if not c.is_constant():
        raise NonUnitError(f"constant coefficient {c} is not a unit in Q[q]")
    return QPoly.const(1 / c.constant_term())


def ts_inverse(a: TruncSeries) -> TruncSeries:
    if not a.coeffs[0]:
        raise NonUnitError("series with zero constant coefficient has no inverse")
    inv0 = _scalar_inverse(a.coeffs[0], a.mode)
    ac = a.coeffs
    b = [inv0]
    for n in range(1, a.order + 1):
        acc = _zero(a.mode)
        for k in range(1, n + 1):
            if ac[k]:
                acc = acc + ac[k] * b[n - k]
        b.append(-(inv0 * acc))
    return a.like(b)


def ts_qdilate(a: TruncSeries) -> TruncSeries:
    """Substitute z -> qz, i.e. multiply coefficient n by q**n."""
    if a.mode == QPOLY:
        return a.like(c * QPoly.monomial(n) for n, c in enumerate(a.coeffs))
    if a.q is None:
        raise DomainError("rational-mode dilation needs an ambient q")
    out, qn = [], Fraction(1)
    for c in a.coeffs:
        out.append(c * qn)
        qn *= a.q
    return a.like(out)


def ts_mul_z(a: TruncSeries, k: int) -> TruncSeries:
    if k < 0:
        raise DomainError("negative z-shift")
    zeros = [_zero(a.mode)] * min(k, a.order + 1)
    return a.like(zeros + list(a.coeffs[: max(0, a.order + 1 - k)]))


def ts_scale_z(a: TruncSeries, c) -> TruncSeries:
    """Substitute z -> c z for a scalar c."""
    c = _coerce_coeff(c, a.mode)
    out, cn = [], _coerce_coeff(1, a.mode)
    for x in a.coeffs:
        out.append(x * cn)
        cn = cn * c
    return a.like(out)


@dataclass(frozen=True)
class Comparison:
    """Outcome of a coefficientwise comparison through some order."""

    ok: bool
    index: int | None = None
    left: Any = None
    right: Any = None

    def __bool__(self) -> bool:
        return self.ok


def compare_coeffs(a: Sequence, b: Sequence, m: int) -> Comparison:
    for n in range(m + 1):
        if a[n] != b[n]:
            return Comparison(False, n, a[n], b[n])
    return Comparison(True)


def ts_eq_to_order(a: TruncSeries, b: TruncSeries, m: int) -> Comparison:
    if m > a.order or m > b.order:
        raise DomainError(f"comparison order {m} exceeds series order")
    if a.mode != b.mode:
        raise IncompatibleSeriesError("cannot compare series of different modes")
    return compare_coeffs(a.coeffs, b.coeffs, m)

"""Continued fractions whose entries are truncated power series.

Every fraction is put in one normal form

    value = b0 + a_1/(b_1 + a_2/(b_2 + a_3/(b_3 + ...)))

with all minus signs folded into the partial numerators a_k. Fractions of
the shape 1/(1 - ...) use b0 = 0 and a_1 = 1, so the leading numerator
a_1 may be a constant; every later a_k must be divisible by z and every b_k
must have constant term 1. Depth d means levels 1..d are kept and the tail
beyond level d is dropped.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .closedforms import F_from_recurrence, f_from_recurrence
from .errors import CFInvariantError, DomainError, NonStabilizingError
from .powerseries import TruncSeries, ts_add, ts_eq_to_order, ts_inverse, ts_mul
from .schroeder import Params

Level = Callable[[int], "tuple[TruncSeries, TruncSeries]"]


@dataclass(frozen=True)
class CFSpec:
    """A continued fraction in normal form.

    ``level(k)`` returns ``(a_k, b_k)`` for k >= 1. ``z_order`` is the
    z-valuation of the numerators a_k for k >= 2 (1 for S-type fractions,
    2 for the Jacobi type); it fixes how fast convergents settle.
    """

    b0: TruncSeries
    level: Level = field(compare=False)
    z_order: int = 1
    id: str = ""
    params: Params | None = None
    target: str = "f"

    @property
    def order(self) -> int:
        return self.b0.order


@dataclass(frozen=True)
class Convergent:
    depth: int
    value: TruncSeries
    stabilized_to: int


def _checked_level(spec: CFSpec, k: int) -> tuple[TruncSeries, TruncSeries]:
    a, b = spec.level(k)
    if b.coeffs[0] != 1:
        raise CFInvariantError(k, f"partial denominator has constant term {b.coeffs[0]}, not 1")
    if k >= 2 and a.coeffs[0] != 0:
        raise CFInvariantError(k, "partial numerator is not divisible by z")
    return a, b


def _evaluate(spec: CFSpec, depth: int) -> TruncSeries:
    if depth == 0:
        return spec.b0
    levels = [_checked_level(spec, k) for k in range(1, depth + 1)]
    r = levels[-1][1]
    for k in range(depth - 1, 0, -1):
        a_next = levels[k][0]
        if r.coeffs[0] == 0:
            raise CFInvariantError(k + 1, "tail is not a unit")
        r = ts_add(levels[k - 1][1], ts_mul(a_next, ts_inverse(r)))
    if r.coeffs[0] == 0:
        raise CFInvariantError(1, "tail is not a unit")
    return ts_add(spec.b0, ts_mul(levels[0][0], ts_inverse(r)))


def _agreement(a: TruncSeries, b: TruncSeries) -> int:
    """Largest m with a and b equal through z^m (-1 if the constants differ)."""
    cmp = ts_eq_to_order(a, b, a.order)
    return a.order if cmp.ok else cmp.index - 1


def cf_convergent(spec: CFSpec, depth: int, N: int | None = None) -> Convergent:
    """Backward evaluation of the first ``depth`` levels.

    ``stabilized_to`` compares with depth - 1; for depth 0 it is -1.
    """
    if depth < 0:
        raise DomainError("negative continued-fraction depth")
    value = _evaluate(spec, depth)
    stab = -1 if depth == 0 else _agreement(value, _evaluate(spec, depth - 1))
    if N is not None and N < spec.order:
        value = value.truncate(N)
        stab = min(stab, N)
    return Convergent(depth, value, stab)


def start_depth(spec: CFSpec, N: int) -> int:
    """Smallest depth at which depth and depth-1 must agree through z^N."""
    return -(-(N + 1) // spec.z_order) + 1


def cf_stabilized(spec: CFSpec, N: int | None = None) -> Convergent:
    """Deepen until two consecutive convergents agree through z^N.

    Raises :class:`NonStabilizingError` past depth 4N (minimum 8).
    """
    N = spec.order if N is None else N
    limit = max(4 * N, 8)
    depth = max(start_depth(spec, N), 1)
    prev = _evaluate(spec, depth - 1)
    last_stab = -1
    while depth <= limit:
        value = _evaluate(spec, depth)
        stab = _agreement(value, prev)
        if stab < last_stab:
            raise CFInvariantError(depth, "stabilisation order decreased")
        last_stab = stab
        if stab >= N:
            if N < spec.order:
                value = value.truncate(N)
            return Convergent(depth, value, min(stab, N) if N < spec.order else stab)
        prev = value
        depth += 1
    raise NonStabilizingError(
        f"{spec.id or 'continued fraction'} did not stabilise through z^{N} by depth {limit}")


# -- catalogue ----------------------------------------------------------------

def _poly(p: Params, coeffs) -> TruncSeries:
    return TruncSeries(coeffs, p.N, p.mode, p.q)


def _leading(p: Params) -> tuple[TruncSeries, TruncSeries]:
    return _poly(p, [1]), _poly(p, [1])


def _need_q_nonzero(p: Params, name: str) -> None:
    if p.q == 0:
        raise DomainError(f"{name} divides by q; q = 0 is not allowed")


def spec_F(p: Params) -> CFSpec:
    """F = 1/(1 - xz - yz/(1 - qxz - qyz/(1 - q^2 xz - ...)))."""
    def level(k):
        if k == 1:
            return _poly(p, [1]), _poly(p, [1, -p.x])
        c = p.qpow(k - 2)
        return _poly(p, [0, -c * p.y]), _poly(p, [1, -p.qpow(k - 1) * p.x])
    return CFSpec(_poly(p, []), level, 1, "cf-2.5", p, "F")


def spec_jacobi(p: Params) -> CFSpec:
    """J-fraction with denominators 1 - s_k z and numerators -lambda_k z^2.

    s_0 = y, s_k = q^(k-1)(x + q^k(1+q)y), lambda_k = q^(3(k-1)) y (x + q^k y).
    """
    def level(k):
        if k == 1:
            return _poly(p, [1]), _poly(p, [1, -p.y])
        return (_poly(p, [0, 0, -jacobi_lambda(p, k - 1)]),
                _poly(p, [1, -jacobi_s(p, k - 1)]))
    return CFSpec(_poly(p, []), level, 2, "cf-jacobi", p, "f")


def jacobi_lambda(p: Params, k: int):
    return p.qpow(3 * (k - 1)) * p.y * (p.x + p.qpow(k) * p.y)


def jacobi_s(p: Params, k: int):
    if k == 0:
        return p.y
    return p.qpow(k - 1) * (p.x + p.qpow(k) * (1 + p.qpow(1)) * p.y)


def stieltjes_numerator(p: Params, k: int):
    """c_k in f = 1/(1 - c_1 z/(1 - c_2 z/(1 - ...))).

    c_(2j+1) = q^(2j) y and c_(2j) = q^(j-1)(x + q^j y).
    """
    j, odd = divmod(k, 2)
    if odd:
        return p.qpow(2 * j) * p.y
    return p.qpow(j - 1) * (p.x + p.qpow(j) * p.y)


def spec_stieltjes(p: Params) -> CFSpec:
    def level(k):
        if k == 1:
            return _leading(p)
        return _poly(p, [0, -stieltjes_numerator(p, k - 1)]), _poly(p, [1])
    return CFSpec(_poly(p, []), level, 1, "cf-3.3", p, "f")


def spec_touchard(p: Params) -> CFSpec:
    """f = 1/(1 + xz/q - (z/q)(x+qy)/(1 + xz/q - (z/q)(x+q^2 y)/(...)))."""
    _need_q_nonzero(p, "cf-3.4")
    inv_q = 1 / p.q
    den = _poly(p, [1, p.x * inv_q])

    def level(k):
        if k == 1:
            return _poly(p, [1]), den
        return _poly(p, [0, -inv_q * (p.x + p.qpow(k - 1) * p.y)]), den
    return CFSpec(_poly(p, []), level, 1, "cf-3.4", p, "f")


def spec_thron(p: Params) -> CFSpec:
    """f = 1/(1 - yz/(1 - xz - qyz/(1 - qxz - q^2 yz/(1 - q^2 xz - ...))))."""
    def level(k):
        if k == 1:
            return _leading(p)
        return (_poly(p, [0, -p.qpow(k - 2) * p.y]),
                _poly(p, [1, -p.qpow(k - 2) * p.x]))
    return CFSpec(_poly(p, []), level, 1, "cf-3.8", p, "f")


@dataclass(frozen=True)
class CatalogueEntry:
    id: str
    builder: Callable[[Params], CFSpec]
    specialize: Callable[[Params], Params]
    target: str
    description: str


def _keep(p):
    return p


def _q_one(p):
    return Params.rational(1, 1, 1, p.N)


def _little(p):
    return Params(p.q, 1, p.q, p.N)


CATALOGUE: dict[str, CatalogueEntry] = {e.id: e for e in [
    CatalogueEntry("cf-2.5", spec_F, _keep, "F", "F(z,x,y) as 1/(1 - xz - yz F(qz))"),
    CatalogueEntry("cf-jacobi", spec_jacobi, _keep, "f", "Jacobi-type fraction for f"),
    CatalogueEntry("cf-3.3", spec_stieltjes, _keep, "f", "alternating S-fraction for f"),
    CatalogueEntry("cf-3.4", spec_touchard, _keep, "f", "Touchard-type fraction for f"),
    CatalogueEntry("cf-3.8", spec_thron, _keep, "f", "f via 1/(1 - yz F(z,x,qy))"),
    CatalogueEntry("cf-1.3", spec_jacobi, _q_one, "f", "classical J-fraction, q=x=y=1"),
    CatalogueEntry("cf-1.4", spec_touchard, _q_one, "f", "classical Touchard form, q=x=y=1"),
    CatalogueEntry("cf-1.5", spec_thron, _q_one, "f", "classical Thron form, q=x=y=1"),
    CatalogueEntry("cf-1.6", spec_stieltjes, _q_one, "f", "classical S-fraction, q=x=y=1"),
    CatalogueEntry("cf-3.5", spec_touchard, lambda p: Params(p.q, p.q, -p.q, p.N), "f",
                   "Touchard's fraction, (x,y)=(q,-q)"),
    CatalogueEntry("cf-3.9", spec_thron, lambda p: Params(p.q, 1, -1, p.N), "f",
                   "(x,y)=(1,-1): sum of (-1)^n q^C(n,2) z^n"),
    CatalogueEntry("cf-3.10", spec_touchard, _little, "f", "little q-Schroeder, Touchard form"),
    CatalogueEntry("cf-3.11", spec_thron, _little, "f", "little q-Schroeder, Thron form"),
    CatalogueEntry("cf-3.12", spec_stieltjes, _little, "f", "little q-Schroeder, S-fraction"),
    CatalogueEntry("cf-rr", spec_stieltjes, lambda p: Params(p.q, 0, -p.q, p.N), "f",
                   "Rogers-Ramanujan, (x,y)=(0,-q)"),
]}


def cf_catalogue(id: str, p: Params) -> CFSpec:
    try:
        entry = CATALOGUE[id]
    except KeyError:
        raise DomainError(f"unknown continued fraction id {id!r}") from None
    spec = entry.builder(entry.specialize(p))
    return CFSpec(spec.b0, spec.level, spec.z_order, id, spec.params, entry.target)


def cf_target(spec: CFSpec) -> TruncSeries:
    """The recurrence-built series a catalogue fraction should reproduce."""
    if spec.target == "F":
        return F_from_recurrence(spec.params)
    return f_from_recurrence(spec.params)


def explicit_coefficients(id: str, p: Params) -> TruncSeries | None:
    """Closed-form coefficient lists for the entries that have one."""
    q, N = p.q, p.N
    if id == "cf-3.9":
        return _poly(p, [(-1) ** n * q ** (n * (n - 1) // 2) for n in range(N + 1)])
    if id == "cf-3.5":
        return _poly(p, [(-1) ** n * q ** (n * (n + 1) // 2) for n in range(N + 1)])
    return None


__all__ = [
    "CATALOGUE", "CFSpec", "Convergent", "cf_catalogue", "cf_convergent",
    "cf_stabilized", "cf_target", "explicit_coefficients", "jacobi_lambda", "jacobi_s",
    "start_depth",
]

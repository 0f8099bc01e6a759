"""q-Schröder-like numbers from their convolution recurrences.

``gen_A`` and ``gen_a`` never divide, so they work for every q, x, y and in
both coefficient modes. In qpoly mode q is symbolic and x, y are
polynomials in q; this is how A(n, 1, q), a(n, 1, q) and the Carlitz
q-Catalan numbers C_n(q) = A(n, 0, 1) are produced as polynomials.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from math import comb
from typing import Union

from .errors import DomainError
from .exactnum import QPoly, as_rational
from .powerseries import QPOLY, RATIONAL

DEFAULT_ORDER = 16

Coeff = Union[Fraction, QPoly]


@dataclass(frozen=True)
class Params:
    """Evaluation point (q, x, y) plus the z-truncation order N.

    Rational mode: q, x, y are Fractions. qpoly mode: ``q`` is None and x, y
    are :class:`QPoly` values in the symbolic q.
    """

    q: Fraction | None
    x: Coeff
    y: Coeff
    N: int = DEFAULT_ORDER

    def __post_init__(self):
        if self.N < 0:
            raise DomainError("truncation order must be non-negative")
        if self.q is None:
            object.__setattr__(self, "x", _as_qpoly(self.x))
            object.__setattr__(self, "y", _as_qpoly(self.y))
        else:
            for name in ("q", "x", "y"):
                v = getattr(self, name)
                if isinstance(v, QPoly):
                    raise DomainError(f"{name} is a polynomial but q={self.q} is numeric")
                object.__setattr__(self, name, as_rational(v))

    @classmethod
    def rational(cls, q, x, y, N: int = DEFAULT_ORDER) -> Params:
        return cls(as_rational(q), as_rational(x), as_rational(y), N)

    @classmethod
    def symbolic(cls, x, y, N: int = DEFAULT_ORDER) -> Params:
        return cls(None, x, y, N)

    @property
    def mode(self) -> str:
        return QPOLY if self.q is None else RATIONAL

    def qpow(self, k: int) -> Coeff:
        if self.q is None:
            return QPoly.monomial(k)
        return self.q**k

    def with_y(self, y) -> Params:
        return replace(self, y=y)

    def scale_y(self, k: int = 1) -> Params:
        """The same point with y replaced by q^k y."""
        return replace(self, y=self.qpow(k) * self.y)

    def with_order(self, N: int) -> Params:
        return replace(self, N=N)

    def to_json(self) -> dict:
        from .exactnum import scalar_to_json
        return {
            "q": None if self.q is None else str(self.q),
            "x": scalar_to_json(self.x),
            "y": scalar_to_json(self.y),
            "N": self.N,
        }


def _as_qpoly(v) -> QPoly:
    return v if isinstance(v, QPoly) else QPoly.const(as_rational(v))


def _one(p: Params) -> Coeff:
    return QPoly.const(1) if p.q is None else Fraction(1)


def gen_A(nmax: int, p: Params) -> list[Coeff]:
    """A(0..nmax): A(n) = x A(n-1) + y sum_k A(k) q^k A(n-1-k), A(0) = 1."""
    A = [_one(p)]
    qk = [p.qpow(k) for k in range(max(nmax, 1))]
    for n in range(1, nmax + 1):
        conv = sum((A[k] * qk[k] * A[n - 1 - k] for k in range(n)), 0 * _one(p))
        A.append(p.x * A[n - 1] + p.y * conv)
    return A


def gen_a(nmax: int, p: Params) -> list[Coeff]:
    """a(0..nmax): a(n) = -q^(n-1) x a(n-1) + (x+y) sum_k a(k) q^k a(n-1-k)."""
    a = [_one(p)]
    qk = [p.qpow(k) for k in range(max(nmax, 1))]
    s = p.x + p.y
    for n in range(1, nmax + 1):
        conv = sum((a[k] * qk[k] * a[n - 1 - k] for k in range(n)), 0 * _one(p))
        a.append(-qk[n - 1] * p.x * a[n - 1] + s * conv)
    return a


def catalan_closed(n: int) -> Fraction:
    return Fraction(comb(2 * n, n), n + 1)


def carlitz_catalan(nmax: int) -> list[QPoly]:
    """C_0(q)..C_nmax(q) as polynomials, the specialisation A(n, 0, 1)."""
    return gen_A(nmax, Params.symbolic(0, 1))


# Hard-coded so tests stay hermetic; OEIS A001003, A006318, A000108.
_REFERENCE = {
    "little-schroeder": (1, 1, 3, 11, 45, 197, 903, 4279, 20793, 103049, 518859),
    "large-schroeder": (1, 2, 6, 22, 90, 394, 1806, 8558, 41586, 206098, 1037718),
    "catalan": (1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796),
}


def reference_prefix(family: str) -> tuple[int, ...]:
    try:
        return _REFERENCE[family]
    except KeyError:
        raise DomainError(f"no reference prefix for family {family!r}") from None


FAMILIES = ("A", "a", "carlitz-catalan", "catalan", "little-schroeder", "large-schroeder")
_FAMILY_ALIASES = {"carlitz": "carlitz-catalan"}


def generate(family: str, nmax: int, p: Params | None = None) -> list[Coeff]:
    """Dispatch to the generator for one sequence family.

    ``p`` is only consulted for the A and a families; the others fix their
    own specialisation (the classical ones at q = 1).
    """
    family = _FAMILY_ALIASES.get(family, family)
    if family == "A":
        return gen_A(nmax, p)
    if family == "a":
        return gen_a(nmax, p)
    if family == "carlitz-catalan":
        if p is not None and p.q is not None:
            return gen_A(nmax, Params.rational(p.q, 0, 1, p.N))
        return carlitz_catalan(nmax)
    if family == "catalan":
        return [catalan_closed(n) for n in range(nmax + 1)]
    if family == "little-schroeder":
        return gen_a(nmax, Params.rational(1, 1, 1))
    if family == "large-schroeder":
        return gen_A(nmax, Params.rational(1, 1, 1))
    raise DomainError(f"unknown sequence family {family!r}")

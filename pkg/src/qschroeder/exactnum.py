"""Exact scalars: rationals and dense univariate polynomials in q.

Rationals are :class:`fractions.Fraction`, which already keeps every value
reduced with a positive denominator and represents zero as ``0/1``.
:class:`QPoly` stores its coefficients as Fractions, lowest power first.
"""

from __future__ import annotations

import operator
import re
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Iterable, Sequence, Union

from .errors import DomainError

Rational = Fraction

_RAT_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")

_OPS = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": operator.truediv,
}


def as_rational(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, _RationalABC)):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"``, ``"-p/q"`` or an integer. Floats are refused."""
    m = _RAT_RE.match(text)
    if m is None:
        raise DomainError(f"not an exact rational: {text!r}")
    num, den = m.group(1), m.group(2)
    if den is not None and int(den) == 0:
        raise DomainError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den else 1)


def rat_arith(a, b, op: str) -> Fraction:
    try:
        fn = _OPS[op]
    except KeyError:
        raise DomainError(f"unknown rational operation {op!r}") from None
    a, b = as_rational(a), as_rational(b)
    if op == "div" and b == 0:
        raise DomainError("division-by-zero in rat_arith(div)")
    return fn(a, b)


def rational_to_str(r: Fraction) -> str:
    return str(r)


_SUPERSCRIPT = str.maketrans("0123456789-", "⁰¹²³⁴⁵⁶⁷⁸⁹⁻")


class QPoly:
    """Dense polynomial in ``q`` with exact rational coefficients.

    ``coeffs[i]`` is the coefficient of ``q**i``. Trailing zeros are stripped
    on construction, so the zero polynomial has an empty coefficient tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [as_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def const(cls, c) -> QPoly:
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c=1) -> QPoly:
        if k < 0:
            raise DomainError("negative exponent in QPoly.monomial")
        return cls([0] * k + [c])

    @classmethod
    def q(cls) -> QPoly:
        return cls((0, 1))

    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def constant_term(self) -> Fraction:
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def has_integer_coeffs(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def __call__(self, q0) -> Fraction:
        return qpoly_eval(self, q0)

    @staticmethod
    def _coerce(other) -> QPoly | None:
        if isinstance(other, QPoly):
            return other
        if isinstance(other, (int, _RationalABC)):
            return QPoly.const(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return QPoly([c + (b[i] if i < len(b) else 0) for i, c in enumerate(a)])

    __radd__ = __add__

    def __neg__(self) -> QPoly:
        return QPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return QPoly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> QPoly:
        if k < 0:
            raise DomainError("negative power of a polynomial")
        result, base = QPoly.const(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        if len(self.coeffs) <= 1:
            return hash(self.constant_term())
        return hash(("QPoly", self.coeffs))

    def __repr__(self) -> str:
        return f"QPoly({[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        return self.format()

    def format(self, unicode: bool = True) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                mono = ""
            elif i == 1:
                mono = "q"
            else:
                mono = "q" + (str(i).translate(_SUPERSCRIPT) if unicode else f"^{i}")
            mag = abs(c)
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{mag}*{mono}" if mag.denominator != 1 else f"{mag}{mono}"
            else:
                body = str(mag)
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += sign + body
        return out

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[str]) -> QPoly:
        return cls(parse_rational(s) for s in data)


_TERM_RE = re.compile(
    r"^(?P<coef>\d+(?:/\d+)?)?\*?(?:(?P<q>q)(?:\^?(?P<exp>\d+|[⁰¹²³⁴⁵⁶⁷⁸⁹]+))?)?$"
)
_FROM_SUPERSCRIPT = str.maketrans("⁰¹²³⁴⁵⁶⁷⁸⁹", "0123456789")


def parse_qpoly(text: str) -> QPoly:
    """Parse a polynomial such as ``"1+2q+q^2"``, ``"q"``, ``"-1/2*q^3"``.

    Superscript exponents as produced by :meth:`QPoly.format` are accepted.
    """
    s = text.replace(" ", "")
    if not s:
        raise DomainError("empty polynomial")
    if re.fullmatch(r"[+-]?[^+-]+(?:[+-][^+-]+)*", s) is None:
        raise DomainError(f"cannot parse polynomial {text!r}")
    total = QPoly()
    for sign, term in re.findall(r"([+-]?)([^+-]+)", s):
        m = _TERM_RE.match(term)
        if m is None or (m.group("coef") is None and m.group("q") is None):
            raise DomainError(f"cannot parse polynomial term {term!r} in {text!r}")
        coef = parse_rational(m.group("coef")) if m.group("coef") else Fraction(1)
        if m.group("q"):
            exp = m.group("exp")
            k = int(exp.translate(_FROM_SUPERSCRIPT)) if exp else 1
        else:
            k = 0
        total = total + QPoly.monomial(k, -coef if sign == "-" else coef)
    return total


def qpoly_arith(p: QPoly, r: QPoly, op: str) -> QPoly:
    if op not in ("add", "sub", "mul"):
        raise DomainError(f"unknown polynomial operation {op!r}")
    return _OPS[op](p, r)


def qpoly_eval(p: QPoly, q0) -> Fraction:
    q0 = as_rational(q0)
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * q0 + c
    return acc


Scalar = Union[Fraction, QPoly]


def scalar_to_json(value) -> str | list[str]:
    if isinstance(value, QPoly):
        return value.to_json()
    return str(as_rational(value))


def scalar_from_json(data) -> Scalar:
    if isinstance(data, list):
        return QPoly.from_json(data)
    return parse_rational(data)

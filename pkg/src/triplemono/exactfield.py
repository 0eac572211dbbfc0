"""Exact arithmetic in the sixth cyclotomic field Q(w), w**2 = w - 1.

Elements are stored as ``re + w_part * w`` with two :class:`fractions.Fraction`
coefficients.  The cube roots of unity are ``OMEGA = w - 1`` and
``OMEGA2 = -w``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import total_ordering
from numbers import Rational

__all__ = [
    "FieldElement",
    "ZERO",
    "ONE",
    "W",
    "OMEGA",
    "OMEGA2",
    "as_element",
    "format_rational",
    "parse_rational",
    "parse_element",
]


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"cannot interpret {x!r} as a rational number")


@total_ordering
class FieldElement:
    """An element ``re + w_part*w`` of Q(w) with w a primitive 6th root of unity.

    Instances are immutable and hashable.  The total order is lexicographic
    on ``(re, w_part)``; it has no algebraic meaning and only serves to sort
    points deterministically.
    """

    __slots__ = ("_re", "_w")

    def __init__(self, re_part=0, w_part=0):
        object.__setattr__(self, "_re", _frac(re_part))
        object.__setattr__(self, "_w", _frac(w_part))

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    @property
    def re_part(self) -> Fraction:
        return self._re

    @property
    def w_part(self) -> Fraction:
        return self._w

    def is_zero(self) -> bool:
        return not self._re and not self._w

    def is_rational(self) -> bool:
        return not self._w

    def __bool__(self) -> bool:
        return bool(self._re) or bool(self._w)

    def __repr__(self) -> str:
        return f"FieldElement({self})"

    def __str__(self) -> str:
        return format_element(self)

    def __hash__(self) -> int:
        if not self._w:
            return hash(self._re)
        return hash((self._re, self._w))

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self._re == other._re and self._w == other._w
        if isinstance(other, (int, Rational)):
            return not self._w and self._re == other
        return NotImplemented

    def __lt__(self, other) -> bool:
        other = as_element(other)
        return (self._re, self._w) < (other._re, other._w)

    def __neg__(self) -> FieldElement:
        return FieldElement(-self._re, -self._w)

    def __add__(self, other) -> FieldElement:
        if isinstance(other, FieldElement):
            return FieldElement(self._re + other._re, self._w + other._w)
        if isinstance(other, (int, Rational)):
            return FieldElement(self._re + other, self._w)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other) -> FieldElement:
        if isinstance(other, FieldElement):
            return FieldElement(self._re - other._re, self._w - other._w)
        if isinstance(other, (int, Rational)):
            return FieldElement(self._re - other, self._w)
        return NotImplemented

    def __rsub__(self, other) -> FieldElement:
        return (-self) + other

    def __mul__(self, other) -> FieldElement:
        if isinstance(other, FieldElement):
            p, q, r, s = self._re, self._w, other._re, other._w
            qs = q * s
            return FieldElement(p * r - qs, p * s + q * r + qs)
        if isinstance(other, (int, Rational)):
            return FieldElement(self._re * other, self._w * other)
        return NotImplemented

    __rmul__ = __mul__

    def conj(self) -> FieldElement:
        """Complex conjugate; conj(w) = w**5 = 1 - w."""
        return FieldElement(self._re + self._w, -self._w)

    def norm(self) -> Fraction:
        p, q = self._re, self._w
        return p * p + p * q + q * q

    def inv(self) -> FieldElement:
        n = self.norm()
        if not n:
            raise ZeroDivisionError("inverse of zero in Q(w)")
        return FieldElement((self._re + self._w) / n, -self._w / n)

    def __truediv__(self, other) -> FieldElement:
        if isinstance(other, FieldElement):
            return self * other.inv()
        if isinstance(other, (int, Rational)):
            if not other:
                raise ZeroDivisionError("division by zero in Q(w)")
            return FieldElement(self._re / other, self._w / other)
        return NotImplemented

    def __rtruediv__(self, other) -> FieldElement:
        return as_element(other) * self.inv()

    def __pow__(self, k: int) -> FieldElement:
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inv() ** (-k)
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def to_complex(self) -> complex:
        """Numerical value with w = exp(i*pi/3).  For display only."""
        return complex(float(self._re) + 0.5 * float(self._w), (3 ** 0.5 / 2) * float(self._w))


def add(x: FieldElement, y: FieldElement) -> FieldElement:
    return x + y


def mul(x: FieldElement, y: FieldElement) -> FieldElement:
    return x * y


def inv(x: FieldElement) -> FieldElement:
    return x.inv()


def conj(x: FieldElement) -> FieldElement:
    return x.conj()


def norm(x: FieldElement) -> Fraction:
    return x.norm()


def as_element(x) -> FieldElement:
    if isinstance(x, FieldElement):
        return x
    if isinstance(x, str):
        return parse_element(x)
    return FieldElement(x, 0)


ZERO = FieldElement(0, 0)
ONE = FieldElement(1, 0)
W = FieldElement(0, 1)
OMEGA = FieldElement(-1, 1)
OMEGA2 = FieldElement(0, -1)


# --- canonical text form -------------------------------------------------

_RAT = r"\d+(?:/\d+)?"
_RAT_RE = re.compile(rf"^[+-]?{_RAT}$")
_ELEM_RE = re.compile(
    rf"^(?:(?P<re>[+-]?{_RAT})(?P<sign>[+-])(?P<wc>{_RAT})?w"
    rf"|(?P<wsign>[+-]?)(?P<wc2>{_RAT})?w"
    rf"|(?P<re2>[+-]?{_RAT}))$"
)


def format_rational(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(token: str) -> Fraction:
    token = token.strip().replace("−", "-")
    if not _RAT_RE.match(token):
        raise ValueError(f"malformed rational {token!r}")
    num, _, den = token.partition("/")
    if den and int(den) == 0:
        raise ValueError(f"zero denominator in {token!r}")
    return Fraction(int(num), int(den) if den else 1)


def _w_term(c: Fraction) -> str:
    a = abs(c)
    return "w" if a == 1 else f"{format_rational(a)}w"


def format_element(x: FieldElement) -> str:
    """Canonical token: reduced fractions, zero parts omitted, ``w`` for 1*w."""
    re_, wc = x.re_part, x.w_part
    if not wc:
        return format_rational(re_)
    wtxt = _w_term(wc)
    if not re_:
        return wtxt if wc > 0 else "-" + wtxt
    return format_rational(re_) + ("+" if wc > 0 else "-") + wtxt


def parse_element(token: str) -> FieldElement:
    """Parse a coefficient token such as ``1``, ``-1/2``, ``10w``, ``1-w``."""
    token = token.strip().replace("−", "-")
    m = _ELEM_RE.match(token)
    if not m:
        raise ValueError(f"malformed field element {token!r}")
    if m.group("re2") is not None:
        return FieldElement(parse_rational(m.group("re2")), 0)
    if m.group("re") is not None:
        wc = parse_rational(m.group("wc")) if m.group("wc") else Fraction(1)
        if m.group("sign") == "-":
            wc = -wc
        return FieldElement(parse_rational(m.group("re")), wc)
    wc = parse_rational(m.group("wc2")) if m.group("wc2") else Fraction(1)
    if m.group("wsign") == "-":
        wc = -wc
    return FieldElement(0, wc)

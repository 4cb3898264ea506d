"""Exact scalars: rationals and the amplitude ring Q(i, sqrt2).

Rationals are :class:`fractions.Fraction`, which already keeps a positive,
fully reduced denominator over arbitrary-precision integers.  Amplitudes are
values ``(a + ai*i) + (b + bi*i)*sqrt2`` with four rational components.

Literal grammar shared by the CLI and JSON output::

    rational  := ["-"] digits ["/" digits]
    amplitude := term { ("+" | "-") term }
    term      := rational ["i"] ["s2"]

so ``"1/2s2"`` is sqrt2/2 and ``"3/5+4/5i"`` is 3/5 + 4i/5.
"""
from __future__ import annotations

import math
import re
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Union

__all__ = [
    "Rational",
    "AmplitudeQ2",
    "ZERO",
    "ONE",
    "I_UNIT",
    "SQRT2",
    "INV_SQRT2",
    "rat",
    "rat_add",
    "rat_mul",
    "rat_neg",
    "rat_div",
    "parse_rational",
    "format_rational",
    "amp",
    "amp_add",
    "amp_mul",
    "amp_neg",
    "amp_conj",
    "amp_norm_sq",
    "parse_amplitude",
    "format_amplitude",
]

Rational = Fraction

RationalLike = Union[int, Fraction, str]

_RATIONAL_RE = re.compile(r"-?\d+(?:/\d+)?")


def rat(value: RationalLike) -> Fraction:
    """Coerce an int, Fraction or rational literal to a canonical Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, _RationalABC):
        return Fraction(value.numerator, value.denominator)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def rat_add(l: Fraction, r: Fraction) -> Fraction:
    return rat(l) + rat(r)


def rat_mul(l: Fraction, r: Fraction) -> Fraction:
    return rat(l) * rat(r)


def rat_neg(v: Fraction) -> Fraction:
    return -rat(v)


def rat_div(l: Fraction, r: Fraction) -> Fraction:
    """Exact quotient; raises ZeroDivisionError when ``r == 0``."""
    r = rat(r)
    if r == 0:
        raise ZeroDivisionError("division by zero rational")
    return rat(l) / r


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    if not _RATIONAL_RE.fullmatch(text):
        raise ValueError(f"malformed rational literal: {text!r}")
    num, _, den = text.partition("/")
    if den and int(den) == 0:
        raise ZeroDivisionError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den else 1)


def format_rational(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


class AmplitudeQ2:
    """Element ``(a + ai*i) + (b + bi*i)*sqrt2`` of Q(i, sqrt2).

    The four rational coordinates are unique because sqrt2 is irrational and
    i is imaginary, so equality and hashing are coordinate-wise.  Instances
    are immutable.

    >>> h = AmplitudeQ2(b=Fraction(1, 2))    # 1/sqrt2
    >>> h * h
    AmplitudeQ2('1/2')
    """

    __slots__ = ("a", "ai", "b", "bi")

    def __init__(self, a: RationalLike = 0, ai: RationalLike = 0,
                 b: RationalLike = 0, bi: RationalLike = 0):
        object.__setattr__(self, "a", rat(a))
        object.__setattr__(self, "ai", rat(ai))
        object.__setattr__(self, "b", rat(b))
        object.__setattr__(self, "bi", rat(bi))

    @classmethod
    def _raw(cls, a: Fraction, ai: Fraction, b: Fraction, bi: Fraction) -> AmplitudeQ2:
        # Skips coercion; callers guarantee Fraction inputs.
        new = object.__new__(cls)
        object.__setattr__(new, "a", a)
        object.__setattr__(new, "ai", ai)
        object.__setattr__(new, "b", b)
        object.__setattr__(new, "bi", bi)
        return new

    def __setattr__(self, name, value):
        raise AttributeError("AmplitudeQ2 is immutable")

    def __delattr__(self, name):
        raise AttributeError("AmplitudeQ2 is immutable")

    def __reduce__(self):
        return (AmplitudeQ2, (self.a, self.ai, self.b, self.bi))

    @classmethod
    def coerce(cls, value) -> AmplitudeQ2:
        if isinstance(value, AmplitudeQ2):
            return value
        if isinstance(value, str):
            return parse_amplitude(value)
        return cls(rat(value))

    def parts(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.a, self.ai, self.b, self.bi)

    def is_zero(self) -> bool:
        return not (self.a or self.ai or self.b or self.bi)

    def is_rational(self) -> bool:
        return not (self.ai or self.b or self.bi)

    def is_real(self) -> bool:
        return not (self.ai or self.bi)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        if isinstance(other, AmplitudeQ2):
            return (self.a == other.a and self.ai == other.ai
                    and self.b == other.b and self.bi == other.bi)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.is_rational() and self.a == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.is_rational():
            return hash(self.a)
        return hash((self.a, self.ai, self.b, self.bi))

    def __add__(self, other) -> AmplitudeQ2:
        if not isinstance(other, AmplitudeQ2):
            try:
                other = AmplitudeQ2.coerce(other)
            except TypeError:
                return NotImplemented
        return AmplitudeQ2._raw(self.a + other.a, self.ai + other.ai,
                                self.b + other.b, self.bi + other.bi)

    __radd__ = __add__

    def __neg__(self) -> AmplitudeQ2:
        return AmplitudeQ2._raw(-self.a, -self.ai, -self.b, -self.bi)

    def __pos__(self) -> AmplitudeQ2:
        return self

    def __sub__(self, other) -> AmplitudeQ2:
        if not isinstance(other, AmplitudeQ2):
            try:
                other = AmplitudeQ2.coerce(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> AmplitudeQ2:
        return (-self) + other

    def __mul__(self, other) -> AmplitudeQ2:
        if not isinstance(other, AmplitudeQ2):
            if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
                s = Fraction(other)
                return AmplitudeQ2._raw(self.a * s, self.ai * s, self.b * s, self.bi * s)
            try:
                other = AmplitudeQ2.coerce(other)
            except TypeError:
                return NotImplemented
        # Zero and one short-circuits keep sparse matrix products cheap.
        if self.is_zero() or other.is_zero():
            return ZERO
        if other.is_rational():
            s = other.a
            return AmplitudeQ2._raw(self.a * s, self.ai * s, self.b * s, self.bi * s)
        if self.is_rational():
            s = self.a
            return AmplitudeQ2._raw(other.a * s, other.ai * s, other.b * s, other.bi * s)
        # Write each side as z = p + q*sqrt2 with Gaussian rationals p, q.
        pr, pi, qr, qi = self.a, self.ai, self.b, self.bi
        rr, ri, sr, si = other.a, other.ai, other.b, other.bi
        # p*r + 2*q*s
        a = (pr * rr - pi * ri) + 2 * (qr * sr - qi * si)
        ai = (pr * ri + pi * rr) + 2 * (qr * si + qi * sr)
        # p*s + q*r
        b = (pr * sr - pi * si) + (qr * rr - qi * ri)
        bi = (pr * si + pi * sr) + (qr * ri + qi * rr)
        return AmplitudeQ2._raw(a, ai, b, bi)

    __rmul__ = __mul__

    def conjugate(self) -> AmplitudeQ2:
        return AmplitudeQ2._raw(self.a, -self.ai, self.b, -self.bi)

    def norm_sq(self) -> AmplitudeQ2:
        return self * self.conjugate()

    def __complex__(self) -> complex:
        s2 = math.sqrt(2)
        return complex(float(self.a) + float(self.b) * s2,
                       float(self.ai) + float(self.bi) * s2)

    def __str__(self) -> str:
        return format_amplitude(self)

    def __repr__(self) -> str:
        return f"AmplitudeQ2({format_amplitude(self)!r})"


ZERO = AmplitudeQ2()
ONE = AmplitudeQ2(1)
I_UNIT = AmplitudeQ2(ai=1)
SQRT2 = AmplitudeQ2(b=1)
INV_SQRT2 = AmplitudeQ2(b=Fraction(1, 2))


def amp(value) -> AmplitudeQ2:
    """Coerce ints, Fractions and literals to :class:`AmplitudeQ2`."""
    return AmplitudeQ2.coerce(value)


def amp_add(l: AmplitudeQ2, r: AmplitudeQ2) -> AmplitudeQ2:
    return amp(l) + amp(r)


def amp_mul(l: AmplitudeQ2, r: AmplitudeQ2) -> AmplitudeQ2:
    return amp(l) * amp(r)


def amp_neg(v: AmplitudeQ2) -> AmplitudeQ2:
    return -amp(v)


def amp_conj(v: AmplitudeQ2) -> AmplitudeQ2:
    return amp(v).conjugate()


def amp_norm_sq(v: AmplitudeQ2) -> AmplitudeQ2:
    """``v * conj(v)``; imaginary parts of the result are always zero."""
    return amp(v).norm_sq()


_TERM_RE = re.compile(r"\s*([+-]?)\s*(\d+)(?:/(\d+))?(i?)(s2)?\s*")


def parse_amplitude(text: str) -> AmplitudeQ2:
    """Parse an amplitude literal such as ``"1/2-1/3i+1/4is2"``.

    Whitespace is allowed around the ``+``/``-`` separators only.  Repeated
    terms of the same kind are summed.
    """
    compact = text.strip()
    if not compact:
        raise ValueError("empty amplitude literal")
    parts = [Fraction(0)] * 4
    pos = 0
    while pos < len(compact):
        m = _TERM_RE.match(compact, pos)
        if m is None or m.end() == pos or (pos > 0 and not m.group(1)):
            raise ValueError(f"malformed amplitude literal: {text!r}")
        sign, num, den, imag, root = m.groups()
        if den is not None and int(den) == 0:
            raise ZeroDivisionError(f"zero denominator in {text!r}")
        value = Fraction(int(num), int(den) if den else 1)
        if sign == "-":
            value = -value
        parts[(2 if root else 0) + (1 if imag else 0)] += value
        pos = m.end()
    return AmplitudeQ2._raw(*parts)


def format_amplitude(value: AmplitudeQ2) -> str:
    """Canonical literal; ``parse_amplitude(format_amplitude(v)) == v``."""
    out = []
    for coeff, suffix in ((value.a, ""), (value.ai, "i"),
                          (value.b, "s2"), (value.bi, "is2")):
        if not coeff:
            continue
        lit = format_rational(abs(coeff)) + suffix
        if coeff < 0:
            out.append("-" + lit)
        else:
            out.append(("+" if out else "") + lit)
    return "".join(out) or "0"

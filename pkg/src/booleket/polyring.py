"""Univariate polynomials over Q, the Boole ideal, and Lagrange idempotents.

The Boole polynomial of order d is ``x (x-1) ... (x-(d-1))``; its roots are
the classical symbol values 0..d-1.  Identities that only need to hold on
those values are checked as congruences modulo this polynomial, which turns
them into exact zero tests.
"""
from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Union

from .exactnum import format_rational, rat

__all__ = [
    "Polynomial",
    "BoolePolynomial",
    "X",
    "poly_add",
    "poly_mul",
    "poly_neg",
    "poly_scale",
    "poly_eval",
    "poly_divmod",
    "boole_poly",
    "lagrange_component",
    "lagrange_factored",
    "reduce_mod_boole",
    "parse_polynomial",
    "format_polynomial",
]


def _strip(coeffs: list[Fraction]) -> tuple[Fraction, ...]:
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return tuple(coeffs[:n])


class Polynomial:
    """Dense polynomial in x with Fraction coefficients, lowest degree first.

    The zero polynomial has no coefficients and degree ``-math.inf``.
    """

    __slots__ = ("coeffs", "_cleared")

    def __init__(self, coeffs: Iterable = ()):
        object.__setattr__(self, "coeffs", _strip([rat(c) for c in coeffs]))
        object.__setattr__(self, "_cleared", None)

    @classmethod
    def _raw(cls, coeffs: list[Fraction]) -> Polynomial:
        new = object.__new__(cls)
        object.__setattr__(new, "coeffs", _strip(coeffs))
        object.__setattr__(new, "_cleared", None)
        return new

    @classmethod
    def _from_cleared(cls, nums: list[int], den: int) -> Polynomial:
        return cls._raw([Fraction(n, den) if n else Fraction(0) for n in nums])

    def cleared(self) -> tuple[list[int], int]:
        """Integer numerators ``nums`` and ``den > 0`` with ``self = nums / den``."""
        if self._cleared is None:
            den = math.lcm(*(c.denominator for c in self.coeffs)) if self.coeffs else 1
            nums = [c.numerator * (den // c.denominator) for c in self.coeffs]
            object.__setattr__(self, "_cleared", (nums, den))
        return self._cleared

    @classmethod
    def constant(cls, c) -> Polynomial:
        return cls([c])

    @classmethod
    def monomial(cls, n: int, c=1) -> Polynomial:
        return cls([0] * n + [c])

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    def __reduce__(self):
        return (Polynomial, (self.coeffs,))

    @property
    def degree(self) -> Union[int, float]:
        return len(self.coeffs) - 1 if self.coeffs else -math.inf

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __getitem__(self, n: int) -> Fraction:
        return self.coeffs[n] if 0 <= n < len(self.coeffs) else Fraction(0)

    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.coeffs == _strip([Fraction(other)])
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    @staticmethod
    def _lift(other) -> Polynomial:
        if isinstance(other, Polynomial):
            return other
        return Polynomial([other])

    def __add__(self, other) -> Polynomial:
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for n, c in enumerate(b):
            out[n] += c
        return Polynomial._raw(out)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial._raw([-c for c in self.coeffs])

    def __sub__(self, other) -> Polynomial:
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> Polynomial:
        return (-self) + other

    def __mul__(self, other) -> Polynomial:
        if not isinstance(other, Polynomial):
            try:
                s = rat(other)
            except TypeError:
                return NotImplemented
            return self.scale(s)
        if not self.coeffs or not other.coeffs:
            return ZERO_POLY
        # Convolve integer numerators; one Fraction per output coefficient.
        a, da = self.cleared()
        b, db = other.cleared()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if not ca:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return Polynomial._from_cleared(out, da * db)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Polynomial:
        if n < 0:
            raise ValueError("negative powers are not polynomials")
        result = ONE_POLY
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, s) -> Polynomial:
        s = rat(s)
        return Polynomial._raw([c * s for c in self.coeffs])

    def __call__(self, at) -> Fraction:
        return poly_eval(self, at)

    def __divmod__(self, other) -> tuple[Polynomial, Polynomial]:
        return poly_divmod(self, self._lift(other))

    def __mod__(self, other) -> Polynomial:
        return poly_divmod(self, self._lift(other))[1]

    def __floordiv__(self, other) -> Polynomial:
        return poly_divmod(self, self._lift(other))[0]

    def __str__(self) -> str:
        return format_polynomial(self)

    def __repr__(self) -> str:
        return f"Polynomial({format_polynomial(self)!r})"


ZERO_POLY = Polynomial()
ONE_POLY = Polynomial([1])
X = Polynomial([0, 1])


def poly_add(l: Polynomial, r: Polynomial) -> Polynomial:
    return l + r


def poly_mul(l: Polynomial, r: Polynomial) -> Polynomial:
    return l * r


def poly_neg(p: Polynomial) -> Polynomial:
    return -p


def poly_scale(p: Polynomial, s) -> Polynomial:
    """Multiply by a rational scalar, or by another polynomial."""
    if isinstance(s, Polynomial):
        return p * s
    return p.scale(s)


def poly_eval(p: Polynomial, at) -> Fraction:
    """Horner evaluation at an exact rational point."""
    at = rat(at)
    nums, den = p.cleared()
    if not nums:
        return Fraction(0)
    # Homogenized Horner in integers at u/v: sum n_k u^k v^(deg-k), over den * v^deg.
    u, v = at.numerator, at.denominator
    acc = 0
    vpow = 1
    for n in reversed(nums):
        acc = acc * u + n * vpow
        vpow *= v
    # acc = sum n_k u^k v^(deg-k); vpow overshot by one factor of v.
    return Fraction(acc, den * (vpow // v))


def poly_divmod(num: Polynomial, den: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Euclidean division ``num = q*den + r`` with ``deg r < deg den``."""
    if den.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    if den.leading() == 1 and all(c.denominator == 1 for c in den.coeffs):
        return _divmod_monic(num, den)
    r = list(num.coeffs)
    dd = len(den.coeffs) - 1
    lead = den.coeffs[-1]
    if len(r) - 1 < dd:
        return ZERO_POLY, num
    q = [Fraction(0)] * (len(r) - dd)
    for shift in range(len(r) - 1 - dd, -1, -1):
        c = r[shift + dd]
        if not c:
            continue
        c = c / lead
        q[shift] = c
        for j, dc in enumerate(den.coeffs):
            r[shift + j] -= c * dc
    return Polynomial._raw(q), Polynomial._raw(r[:dd])


def _divmod_monic(num: Polynomial, den: Polynomial) -> tuple[Polynomial, Polynomial]:
    # Monic integer divisor: long division stays in the integers.
    r, scale = num.cleared()
    r = list(r)
    dc = [c.numerator for c in den.coeffs]
    dd = len(dc) - 1
    if len(r) - 1 < dd:
        return ZERO_POLY, num
    q = [0] * (len(r) - dd)
    for shift in range(len(r) - 1 - dd, -1, -1):
        c = r[shift + dd]
        if not c:
            continue
        q[shift] = c
        for j in range(dd):
            r[shift + j] -= c * dc[j]
        r[shift + dd] = 0
    return Polynomial._from_cleared(q, scale), Polynomial._from_cleared(r[:dd], scale)


class BoolePolynomial:
    """The monic polynomial with simple roots exactly 0, 1, ..., d-1."""

    __slots__ = ("d", "poly")

    def __init__(self, d: int):
        _check_dim(d)
        p = ONE_POLY
        for j in range(d):
            p = p * Polynomial([-j, 1])
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "poly", p)

    def __setattr__(self, name, value):
        raise AttributeError("BoolePolynomial is immutable")

    def roots(self) -> range:
        return range(self.d)

    def __eq__(self, other) -> bool:
        if isinstance(other, BoolePolynomial):
            return self.d == other.d
        if isinstance(other, Polynomial):
            return self.poly == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.poly)

    def __repr__(self) -> str:
        return f"BoolePolynomial(d={self.d}, poly={format_polynomial(self.poly)!r})"


def _check_dim(d: int) -> None:
    if isinstance(d, bool) or not isinstance(d, int):
        raise TypeError(f"dimension must be an int, got {d!r}")
    if d < 1:
        raise ValueError(f"dimension must be >= 1, got {d}")


@lru_cache(maxsize=None)
def boole_poly(d: int) -> BoolePolynomial:
    return BoolePolynomial(d)


@lru_cache(maxsize=None)
def lagrange_component(d: int, k: int) -> Polynomial:
    """Row ``k`` of the symbolic d-level ket.

    ``prod_{j != k} (j - x) / ((-1)**k * k! * (d-1-k)!)``, the Lagrange basis
    polynomial on the nodes 0..d-1 that is 1 at ``k`` and 0 at the others.
    """
    _check_dim(d)
    if isinstance(k, bool) or not isinstance(k, int):
        raise TypeError(f"component index must be an int, got {k!r}")
    if not 0 <= k < d:
        raise ValueError(f"component index {k} out of range for d={d}")
    p = ONE_POLY
    for j in range(d):
        if j != k:
            p = p * Polynomial([j, -1])
    denom = (-1) ** k * math.factorial(k) * math.factorial(d - 1 - k)
    return p.scale(Fraction(1, denom))


def lagrange_factored(d: int, k: int) -> tuple[int, int, list[str]]:
    """Factored display of ``lagrange_component(d, k)``.

    Returns ``(prefactor_den, coeff, factors)`` meaning
    ``coeff * prod(factors) / prefactor_den`` where the common prefactor is
    ``1/(d-1)!`` and ``coeff = C(d-1, k)``.  Factors below ``k`` are written
    ``x`` and ``(x-j)``, those above as ``(j-x)``, so every factor is positive
    at ``x = k`` and no sign is needed.
    """
    lagrange_component(d, k)  # validates arguments
    factors = []
    for j in range(d):
        if j < k:
            factors.append("x" if j == 0 else f"(x-{j})")
        elif j > k:
            factors.append(f"({j}-x)")
    return math.factorial(d - 1), math.comb(d - 1, k), factors


def reduce_mod_boole(p: Polynomial, d: int) -> Polynomial:
    """Remainder of ``p`` modulo the order-d Boole polynomial."""
    return poly_divmod(p, boole_poly(d).poly)[1]


_POLY_TERM_RE = re.compile(
    r"\s*([+-]?)\s*(\d+(?:/\d+)?)?(?:(\*)?x(?:\^(\d+))?)?\s*")


def parse_polynomial(text: str) -> Polynomial:
    """Parse the text form produced by :func:`format_polynomial`.

    Accepts terms ``c*x^n``, ``c*x``, ``x^n``, ``x`` and bare ``c`` joined by
    ``+``/``-``, with optional whitespace around the separators.
    """
    compact = text.strip()
    if not compact:
        raise ValueError("empty polynomial literal")
    coeffs: dict[int, Fraction] = {}
    pos = 0
    while pos < len(compact):
        m = _POLY_TERM_RE.match(compact, pos)
        sign, coeff, star, power = m.groups() if m else (None,) * 4
        has_x = m is not None and "x" in m.group(0)
        if (m is None or m.end() == pos or (pos > 0 and not sign)
                or (coeff is None and not has_x) or (star and coeff is None)
                or (has_x and coeff is not None and not star)):
            raise ValueError(f"malformed polynomial literal: {text!r}")
        value = rat(coeff) if coeff else Fraction(1)
        if sign == "-":
            value = -value
        n = (int(power) if power else 1) if has_x else 0
        coeffs[n] = coeffs.get(n, Fraction(0)) + value
        pos = m.end()
    top = max(coeffs)
    return Polynomial([coeffs.get(n, 0) for n in range(top + 1)])


def format_polynomial(p: Polynomial) -> str:
    """Descending-degree text form, e.g. ``"1/2*x^2 - 3/2*x + 1"``."""
    terms = []
    for n in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[n]
        if not c:
            continue
        mag = abs(c)
        if n == 0:
            body = format_rational(mag)
        else:
            var = "x" if n == 1 else f"x^{n}"
            body = var if mag == 1 else f"{format_rational(mag)}*{var}"
        if not terms:
            terms.append(("-" if c < 0 else "") + body)
        else:
            terms.append(("- " if c < 0 else "+ ") + body)
    return " ".join(terms) or "0"

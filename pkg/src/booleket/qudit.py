"""Kets, bras and projectors of a d-level system.

Numeric objects carry :class:`AmplitudeQ2` entries.  Symbolic objects carry
polynomials in the classical symbol ``x``; substituting ``x = m`` for an
integer ``0 <= m < d`` gives the numeric basis ket or projector for ``m``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .exactnum import ONE, ZERO, AmplitudeQ2, amp
from .matrix import Matrix
from .polyring import (
    Polynomial,
    _check_dim,
    lagrange_component,
    lagrange_factored,
    poly_eval,
    reduce_mod_boole,
)

__all__ = [
    "Ket",
    "Bra",
    "SymbolicKet",
    "Projector",
    "SymbolicProjector",
    "Superposition",
    "basis_ket",
    "unit_ket",
    "symbolic_ket",
    "bra_of",
    "outer_product",
    "projector",
    "symbolic_projector",
    "completeness_sum",
    "inner_product",
    "tensor_product",
    "superpose",
]


@dataclass(frozen=True)
class Ket:
    """Column vector with exact amplitude entries."""

    entries: tuple[AmplitudeQ2, ...]

    def __init__(self, entries: Iterable):
        object.__setattr__(self, "entries", tuple(amp(v) for v in entries))

    @property
    def d(self) -> int:
        return len(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, i: int) -> AmplitudeQ2:
        return self.entries[i]

    def __iter__(self):
        return iter(self.entries)

    def __add__(self, other: Ket) -> Ket:
        _same_dim(self, other)
        return Ket(a + b for a, b in zip(self.entries, other.entries))

    def scale(self, s) -> Ket:
        s = amp(s)
        return Ket(s * a for a in self.entries)

    def is_basis(self) -> bool:
        ones = [a for a in self.entries if a == ONE]
        zeros = [a for a in self.entries if a.is_zero()]
        return len(ones) == 1 and len(ones) + len(zeros) == self.d

    def tensor(self, other: Ket) -> Ket:
        return tensor_product(self, other)

    def __repr__(self) -> str:
        return f"Ket({', '.join(str(a) for a in self.entries)})"


@dataclass(frozen=True)
class Bra:
    """Row vector, the conjugate transpose of a :class:`Ket`."""

    entries: tuple[AmplitudeQ2, ...]

    def __init__(self, entries: Iterable):
        object.__setattr__(self, "entries", tuple(amp(v) for v in entries))

    @property
    def d(self) -> int:
        return len(self.entries)

    def __matmul__(self, ket: Ket) -> AmplitudeQ2:
        if not isinstance(ket, Ket):
            return NotImplemented
        _same_dim(self, ket)
        acc = ZERO
        for a, b in zip(self.entries, ket.entries):
            acc = acc + a * b
        return acc

    def __repr__(self) -> str:
        return f"Bra({', '.join(str(a) for a in self.entries)})"


def _same_dim(l, r) -> None:
    if l.d != r.d:
        raise ValueError(f"dimension mismatch: {l.d} vs {r.d}")


def _check_index(d: int, x: int) -> None:
    _check_dim(d)
    if isinstance(x, bool) or not isinstance(x, int):
        raise TypeError(f"basis index must be an int, got {x!r}")
    if not 0 <= x < d:
        raise ValueError(f"basis index x={x} out of range 0..{d - 1}")


@dataclass(frozen=True)
class SymbolicKet:
    d: int
    entries: tuple[Polynomial, ...]

    def evaluate(self, m) -> Ket:
        return Ket(poly_eval(p, m) for p in self.entries)

    def factored(self) -> tuple[int, list[tuple[int, list[str]]]]:
        """Common denominator and per-row ``(coeff, factors)`` for display."""
        parts = [lagrange_factored(self.d, k) for k in range(self.d)]
        return parts[0][0], [(coeff, factors) for _, coeff, factors in parts]


def basis_ket(d: int, x: int) -> Ket:
    """``|x>`` in d dimensions, built by evaluating each symbolic row at x."""
    _check_index(d, x)
    return symbolic_ket(d).evaluate(x)


def unit_ket(d: int, x: int) -> Ket:
    """Direct unit-vector construction of ``|x>``."""
    _check_index(d, x)
    return Ket(ONE if i == x else ZERO for i in range(d))


def symbolic_ket(d: int) -> SymbolicKet:
    _check_dim(d)
    return SymbolicKet(d, tuple(lagrange_component(d, k) for k in range(d)))


def bra_of(k: Ket) -> Bra:
    return Bra(a.conjugate() for a in k.entries)


def outer_product(k: Ket, b: Ket) -> Matrix:
    """``|k><b|``, entry ``(i, j) = k_i * conj(b_j)``."""
    _same_dim(k, b)
    bra = [a.conjugate() for a in b.entries]
    return Matrix([[ki * bj for bj in bra] for ki in k.entries])


class Projector(Matrix):
    """Hermitian idempotent matrix; validated on construction."""

    __slots__ = ()

    def __init__(self, rows):
        super().__init__(rows)
        if not self.is_hermitian():
            raise ValueError("projector must be Hermitian")
        if not self.is_idempotent():
            raise ValueError("projector must be idempotent")

    @property
    def d(self) -> int:
        return self.dim


def projector(d: int, x: int) -> Projector:
    """``P(x) = |x><x|`` in d dimensions."""
    k = basis_ket(d, x)
    return Projector(outer_product(k, k).rows)


@dataclass(frozen=True)
class SymbolicProjector:
    """Diagonal projector with polynomial entries; off-diagonals are zero."""

    d: int
    diagonal: tuple[Polynomial, ...]

    def entry(self, i: int, j: int) -> Polynomial:
        return self.diagonal[i] if i == j else Polynomial()

    def matrix(self) -> tuple[tuple[Polynomial, ...], ...]:
        return tuple(tuple(self.entry(i, j) for j in range(self.d))
                     for i in range(self.d))

    def trace(self) -> Polynomial:
        total = Polynomial()
        for p in self.diagonal:
            total = total + p
        return total

    def squared_mod_boole(self) -> tuple[Polynomial, ...]:
        """Diagonal of ``P(x)^2`` reduced modulo the Boole polynomial."""
        return tuple(reduce_mod_boole(p * p, self.d) for p in self.diagonal)

    def evaluate(self, m) -> Matrix:
        return Matrix.diag(poly_eval(p, m) for p in self.diagonal)


def symbolic_projector(d: int) -> SymbolicProjector:
    _check_dim(d)
    return SymbolicProjector(d, symbolic_ket(d).entries)


def completeness_sum(d: int) -> Matrix:
    """``sum_x P(x)`` over all d basis projectors."""
    _check_dim(d)
    total = Matrix.zeros(d)
    for x in range(d):
        total = total + projector(d, x)
    return total


def inner_product(l: Ket, r: Ket) -> AmplitudeQ2:
    """``<l|r> = sum_i conj(l_i) * r_i``."""
    _same_dim(l, r)
    return bra_of(l) @ r


def tensor_product(l: Ket, r: Ket) -> Ket:
    """``|l> (x) |r>``; entry ``i*len(r) + j`` is ``l_i * r_j``."""
    return Ket(a * b for a in l.entries for b in r.entries)


@dataclass(frozen=True)
class Superposition:
    """Amplitudes ``a_x`` of ``sum_x a_x |x>``; never normalized implicitly."""

    d: int
    amplitudes: tuple[AmplitudeQ2, ...]

    def norm_sq(self) -> AmplitudeQ2:
        total = ZERO
        for a in self.amplitudes:
            total = total + a.norm_sq()
        return total

    def is_normalized(self) -> bool:
        return self.norm_sq() == ONE

    def ket(self) -> Ket:
        total = Ket([ZERO] * self.d)
        for x, a in enumerate(self.amplitudes):
            total = total + basis_ket(self.d, x).scale(a)
        return total


def superpose(d: int, amps: Sequence) -> Superposition:
    _check_dim(d)
    amps = tuple(amp(a) for a in amps)
    if len(amps) != d:
        raise ValueError(f"expected {d} amplitudes, got {len(amps)}")
    return Superposition(d, amps)

"""Exact two-qubit gates and the Bell states they prepare.

The Bell circuit applies a Hadamard to the left (high-order) qubit and then
a CNOT controlled by that same qubit::

    B = CNOT . (H (x) I)

Acting on ``|x> (x) |y>`` it yields ``(1-y, y, y-2xy, (1-2x)(1-y)) / sqrt2``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactnum import INV_SQRT2, ONE, ZERO, AmplitudeQ2
from .matrix import Matrix
from .qudit import Ket, basis_ket, inner_product, tensor_product

__all__ = [
    "Gate",
    "BellState",
    "identity",
    "hadamard",
    "cnot",
    "gate_tensor",
    "bell_matrix",
    "printed_bell_matrix",
    "bell_state",
    "bell_closed_form",
    "BELL_NAMES",
]


class Gate(Matrix):
    """Square unitary matrix; unitarity is checked exactly on construction."""

    __slots__ = ()

    def __init__(self, rows):
        super().__init__(rows)
        n, m = self.shape
        if n != m:
            raise ValueError(f"gate must be square, got {n}x{m}")
        if not self.is_unitary():
            raise ValueError("gate is not unitary")

    def __matmul__(self, other):
        if isinstance(other, Ket):
            return Ket(self.apply(other.entries))
        product = super().__matmul__(other)
        if isinstance(other, Gate):
            return Gate(product.rows)
        return product

    def __call__(self, ket: Ket) -> Ket:
        return Ket(self.apply(ket.entries))


def identity(n: int = 2) -> Gate:
    return Gate(Matrix.identity(n).rows)


def hadamard() -> Gate:
    h = INV_SQRT2
    return Gate([[h, h], [h, -h]])


def cnot() -> Gate:
    """CNOT with the left qubit as control: swaps ``|10>`` and ``|11>``."""
    return Gate([[ONE, ZERO, ZERO, ZERO],
                 [ZERO, ONE, ZERO, ZERO],
                 [ZERO, ZERO, ZERO, ONE],
                 [ZERO, ZERO, ONE, ZERO]])


def gate_tensor(l: Gate, r: Gate) -> Gate:
    return Gate(l.kron(r).rows)


def bell_matrix() -> Gate:
    return cnot() @ gate_tensor(hadamard(), identity(2))


def printed_bell_matrix() -> Matrix:
    """The 4x4 Bell circuit matrix written out entry by entry."""
    rows = [[1, 0, 1, 0],
            [0, 1, 0, 1],
            [0, 1, 0, -1],
            [1, 0, -1, 0]]
    return Matrix([[INV_SQRT2 * v for v in row] for row in rows])


# Standard names for the outputs of this circuit.
BELL_NAMES = {
    (0, 0): "Phi+",
    (0, 1): "Psi+",
    (1, 0): "Phi-",
    (1, 1): "Psi-",
}


@dataclass(frozen=True)
class BellState:
    x: int
    y: int
    ket: Ket

    @property
    def name(self) -> str:
        return BELL_NAMES[(self.x, self.y)]

    def matches_closed_form(self) -> bool:
        return self.ket == bell_closed_form(self.x, self.y)

    def is_normalized(self) -> bool:
        return inner_product(self.ket, self.ket) == ONE


def _check_bit(name: str, v) -> None:
    if isinstance(v, bool) or not isinstance(v, int) or v not in (0, 1):
        raise ValueError(f"{name} must be a bit (0 or 1), got {v!r}")


def bell_state(x: int, y: int) -> BellState:
    """Run ``|x>|y>`` through the Bell circuit."""
    _check_bit("x", x)
    _check_bit("y", y)
    inp = tensor_product(basis_ket(2, x), basis_ket(2, y))
    return BellState(x, y, bell_matrix() @ inp)


def bell_closed_form(x: int, y: int) -> Ket:
    """Evaluate ``(1-y, y, y-2xy, (1-2x)(1-y)) / sqrt2`` directly."""
    _check_bit("x", x)
    _check_bit("y", y)
    values = (1 - y, y, y - 2 * x * y, (1 - 2 * x) * (1 - y))
    return Ket(AmplitudeQ2(b=Fraction(v, 2)) for v in values)

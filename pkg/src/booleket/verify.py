"""Exhaustive identity checks over a range of dimensions."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

from .circuit import (
    bell_closed_form,
    bell_matrix,
    bell_state,
    cnot,
    gate_tensor,
    hadamard,
    identity,
    printed_bell_matrix,
)
from .exactnum import ONE, ZERO
from .matrix import Matrix
from .polyring import Polynomial, format_polynomial, lagrange_component, poly_eval, reduce_mod_boole
from .qudit import basis_ket, inner_product, outer_product, unit_ket

__all__ = ["Check", "VerifyReport", "DIMENSION_CHECKS", "BELL_CHECKS", "run_verify"]


@dataclass(frozen=True)
class Check:
    name: str
    d: Optional[int]
    passed: bool
    witness: str


@dataclass
class VerifyReport:
    d_range: tuple[int, int]
    checks: list[Check] = field(default_factory=list)

    @property
    def overall(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]


# Each check returns (passed, witness); the witness names a counterexample
# on failure.

def check_degree(d):
    for k in range(d):
        deg = lagrange_component(d, k).degree
        if deg != d - 1:
            return False, f"deg l_{k} = {deg}"
    return True, f"deg l_k = {d - 1} for all k"


def check_kronecker(d):
    for k in range(d):
        p = lagrange_component(d, k)
        for m in range(d):
            v = poly_eval(p, m)
            if v != (1 if k == m else 0):
                return False, f"l_{k}({m}) = {v}"
    return True, "l_k(m) = delta_km"


def check_partition_of_unity(d):
    total = sum((lagrange_component(d, k) for k in range(d)), start=Polynomial())
    if total != 1:
        return False, f"sum l_k = {format_polynomial(total)}"
    return True, "sum l_k = 1"


def check_idempotency(d):
    for k in range(d):
        p = lagrange_component(d, k)
        r = reduce_mod_boole(p * p, d)
        if r != p:
            return False, f"l_{k}^2 mod B = {format_polynomial(r)}"
    return True, "l_k^2 = l_k mod B"


def check_orthogonality(d):
    for j in range(d):
        for k in range(j + 1, d):
            r = reduce_mod_boole(lagrange_component(d, j) * lagrange_component(d, k), d)
            if r:
                return False, f"l_{j}*l_{k} mod B = {format_polynomial(r)}"
    return True, f"{d * (d - 1) // 2} pairs vanish mod B"


def check_basis_oracle(d):
    for x in range(d):
        if basis_ket(d, x) != unit_ket(d, x):
            return False, f"basis_ket({d}, {x}) differs from unit vector"
    return True, "formula kets equal unit vectors"


def check_projectors(d):
    ps = []
    for x in range(d):
        k = basis_ket(d, x)
        p = outer_product(k, k)
        if not p.is_hermitian():
            return False, f"P({x}) not Hermitian"
        if p @ p != p:
            return False, f"P({x})^2 != P({x})"
        if p.trace() != ONE:
            return False, f"Tr P({x}) = {p.trace()}"
        ps.append(p)
    for x in range(d):
        for y in range(d):
            if x != y and not (ps[x] @ ps[y]).is_zero():
                return False, f"P({x}) P({y}) != 0"
    return True, "P^2 = P, Tr P = 1, P(x)P(y) = 0"


def check_completeness(d):
    total = Matrix.zeros(d)
    for x in range(d):
        k = basis_ket(d, x)
        total = total + outer_product(k, k)
    if not total.is_identity():
        return False, f"sum P(x) = {total!r}"
    return True, f"sum P(x) = I_{d}"


def check_bell_agreement():
    for x in (0, 1):
        for y in (0, 1):
            if bell_state(x, y).ket != bell_closed_form(x, y):
                return False, f"circuit and closed form differ at x={x}, y={y}"
    return True, "circuit = closed form for all (x, y)"


def check_bell_matrix():
    built = cnot() @ gate_tensor(hadamard(), identity(2))
    if built != printed_bell_matrix() or bell_matrix() != built:
        return False, f"CNOT (H x I) = {built!r}"
    return True, "CNOT (H x I) = printed matrix"


def check_bell_orthonormal():
    kets = {(x, y): bell_state(x, y).ket for x in (0, 1) for y in (0, 1)}
    for s, u in kets.items():
        for t, v in kets.items():
            ip = inner_product(u, v)
            if ip != (ONE if s == t else ZERO):
                return False, f"<B{s}|B{t}> = {ip}"
    return True, "16 inner products = delta"


def check_gate_unitarity():
    for name, g in (("H", hadamard()), ("CNOT", cnot()), ("H x I", gate_tensor(hadamard(), identity(2))),
                    ("Bell", bell_matrix())):
        if not g.is_unitary():
            return False, f"{name} not unitary"
    return True, "H, CNOT, H x I, Bell unitary"


DIMENSION_CHECKS: dict[str, Callable] = {
    "degree": check_degree,
    "kronecker": check_kronecker,
    "partition_of_unity": check_partition_of_unity,
    "idempotency_mod_boole": check_idempotency,
    "orthogonality_mod_boole": check_orthogonality,
    "basis_oracle": check_basis_oracle,
    "projectors": check_projectors,
    "completeness": check_completeness,
}

BELL_CHECKS: dict[str, Callable] = {
    "bell_circuit_vs_closed_form": check_bell_agreement,
    "bell_matrix": check_bell_matrix,
    "bell_orthonormal": check_bell_orthonormal,
    "gate_unitarity": check_gate_unitarity,
}


def _run(name, d, fn, *args) -> Check:
    try:
        passed, witness = fn(*args)
    except Exception as exc:  # a crashing check is a failed check
        passed, witness = False, f"{type(exc).__name__}: {exc}"
    return Check(name, d, passed, witness)


def run_verify(max_d: int) -> VerifyReport:
    """Run every dimension check for ``d = 1..max_d`` plus the Bell suite once."""
    if max_d < 1:
        raise ValueError(f"max_d must be >= 1, got {max_d}")
    report = VerifyReport((1, max_d))
    for d in range(1, max_d + 1):
        for name, fn in DIMENSION_CHECKS.items():
            report.checks.append(_run(name, d, fn, d))
    for name, fn in BELL_CHECKS.items():
        report.checks.append(_run(name, None, fn))
    return report

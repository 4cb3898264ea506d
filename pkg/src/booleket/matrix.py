"""Dense exact matrices over Q(i, sqrt2)."""
from __future__ import annotations

from typing import Iterable

from .exactnum import ONE, ZERO, AmplitudeQ2, amp

__all__ = ["Matrix"]


class Matrix:
    """Immutable rectangular matrix of :class:`AmplitudeQ2` entries.

    ``m[i, j]`` indexes an entry, ``m @ n`` multiplies, ``m.dagger()`` is the
    conjugate transpose.  Products skip zero entries, which keeps the sparse
    projectors and permutation gates used here cheap.
    """

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable]):
        rows = tuple(tuple(amp(v) for v in row) for row in rows)
        if rows and len({len(r) for r in rows}) != 1:
            raise ValueError("ragged matrix rows")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def _raw(cls, rows) -> Matrix:
        # Trusted rows of AmplitudeQ2; bypasses coercion and subclass checks.
        new = object.__new__(Matrix)
        object.__setattr__(new, "rows", tuple(tuple(r) for r in rows))
        return new

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def identity(cls, n: int) -> Matrix:
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, n: int, m: int | None = None) -> Matrix:
        return cls([[ZERO] * (n if m is None else m) for _ in range(n)])

    @classmethod
    def diag(cls, values: Iterable) -> Matrix:
        values = [amp(v) for v in values]
        n = len(values)
        return cls([[values[i] if i == j else ZERO for j in range(n)] for i in range(n)])

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), len(self.rows[0]) if self.rows else 0)

    @property
    def dim(self) -> int:
        n, m = self.shape
        if n != m:
            raise ValueError(f"matrix is not square: {n}x{m}")
        return n

    def __getitem__(self, ij: tuple[int, int]) -> AmplitudeQ2:
        i, j = ij
        return self.rows[i][j]

    def __iter__(self):
        return iter(self.rows)

    def __eq__(self, other) -> bool:
        if isinstance(other, Matrix):
            return self.rows == other.rows
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.rows)

    def __add__(self, other: Matrix) -> Matrix:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        return Matrix._raw([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self) -> Matrix:
        return Matrix([[-a for a in r] for r in self.rows])

    def __sub__(self, other: Matrix) -> Matrix:
        return self + (-other)

    def scale(self, s) -> Matrix:
        s = amp(s)
        return Matrix([[s * a for a in r] for r in self.rows])

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            n, k = self.shape
            k2, m = other.shape
            if k != k2:
                raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
            out = [[ZERO] * m for _ in range(n)]
            for i, row in enumerate(self.rows):
                acc = out[i]
                for t, a in enumerate(row):
                    if a.is_zero():
                        continue
                    for j, b in enumerate(other.rows[t]):
                        if not b.is_zero():
                            acc[j] = acc[j] + a * b
            return Matrix._raw(out)
        return NotImplemented

    def apply(self, vector: Iterable) -> tuple[AmplitudeQ2, ...]:
        vector = [amp(v) for v in vector]
        if len(vector) != self.shape[1]:
            raise ValueError(f"vector length {len(vector)} does not match {self.shape}")
        out = []
        for row in self.rows:
            acc = ZERO
            for a, v in zip(row, vector):
                if not a.is_zero() and not v.is_zero():
                    acc = acc + a * v
            out.append(acc)
        return tuple(out)

    def dagger(self) -> Matrix:
        n, m = self.shape
        return Matrix([[self.rows[i][j].conjugate() for i in range(n)] for j in range(m)])

    def kron(self, other: Matrix) -> Matrix:
        """Kronecker product; the left factor indexes the high-order digit."""
        n, m = self.shape
        p, q = other.shape
        return Matrix([[self.rows[i // p][j // q] * other.rows[i % p][j % q]
                        for j in range(m * q)] for i in range(n * p)])

    def trace(self) -> AmplitudeQ2:
        acc = ZERO
        for i in range(self.dim):
            acc = acc + self.rows[i][i]
        return acc

    def is_identity(self) -> bool:
        return self == Matrix.identity(self.dim)

    def is_zero(self) -> bool:
        return all(a.is_zero() for r in self.rows for a in r)

    def is_hermitian(self) -> bool:
        return self == self.dagger()

    def is_idempotent(self) -> bool:
        return self @ self == self

    def is_unitary(self) -> bool:
        return (self @ self.dagger()).is_identity()

    def is_diagonal(self) -> bool:
        return all(a.is_zero() for i, r in enumerate(self.rows)
                   for j, a in enumerate(r) if i != j)

    def diagonal(self) -> tuple[AmplitudeQ2, ...]:
        return tuple(self.rows[i][i] for i in range(min(self.shape)))

    def __repr__(self) -> str:
        body = "; ".join(", ".join(str(a) for a in r) for r in self.rows)
        return f"Matrix([{body}])"

"""Finite-dimensional commutative algebras over a finite field.

Used for quotients K[X]/I of zero-dimensional ideals and for algebras
rebuilt from structure constants. :meth:`FiniteAlgebra.field_test` decides
whether the algebra is a field from the q-power Frobenius and, when it is
not, returns a zero-divisor pair.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Optional, Sequence

from . import linalg
from . import upoly as up
from .factor import roots
from .field import ExtField

Vector = tuple


@dataclass(frozen=True)
class FieldTest:
    is_field: bool
    kind: str  # "field", "nilpotent", "idempotent" or "unit"
    witness: Optional[tuple[Vector, Vector]] = None


@dataclass(frozen=True, eq=False)
class FiniteAlgebra:
    field: ExtField
    dim: int
    products: tuple[tuple[Vector, ...], ...]
    unit: Vector

    @classmethod
    def from_products(
        cls,
        F: ExtField,
        dim: int,
        product: Callable[[int, int], Sequence[int]],
        unit: Sequence[int],
    ) -> FiniteAlgebra:
        rows = []
        for i in range(dim):
            rows.append(tuple(tuple(product(i, j)) for j in range(dim)))
        return cls(F, dim, tuple(rows), tuple(unit))

    @property
    def zero(self) -> Vector:
        return (self.field.zero,) * self.dim

    @property
    def one(self) -> Vector:
        return self.unit

    def basis(self, i: int) -> Vector:
        F = self.field
        return tuple(F.one if j == i else F.zero for j in range(self.dim))

    def is_zero(self, u: Vector) -> bool:
        return all(c == 0 for c in u)

    def add(self, u: Vector, v: Vector) -> Vector:
        return tuple(self.field.add(a, b) for a, b in zip(u, v))

    def sub(self, u: Vector, v: Vector) -> Vector:
        return tuple(self.field.sub(a, b) for a, b in zip(u, v))

    def scale(self, c: int, u: Vector) -> Vector:
        return tuple(self.field.mul(c, a) for a in u)

    def mul(self, u: Vector, v: Vector) -> Vector:
        F = self.field
        out = [F.zero] * self.dim
        for i, a in enumerate(u):
            if a == 0:
                continue
            row = self.products[i]
            for j, b in enumerate(v):
                if b == 0:
                    continue
                ab = F.mul(a, b)
                for l, c in enumerate(row[j]):
                    if c:
                        out[l] = F.add(out[l], F.mul(ab, c))
        return tuple(out)

    def pow(self, u: Vector, m: int) -> Vector:
        out, base = self.one, u
        while m:
            if m & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            m >>= 1
        return out

    def minimal_polynomial(self, u: Vector) -> up.UPoly:
        """Monic minimal polynomial of ``u`` over the base field."""
        F = self.field
        powers = [self.one]
        while True:
            nxt = self.mul(powers[-1], u)
            cols = linalg.transpose(powers)
            sol = linalg.solve(F, cols, nxt) if cols else None
            if sol is not None:
                return up.trim(F, [F.neg(c) for c in sol] + [F.one])
            powers.append(nxt)
            if len(powers) > self.dim + 1:
                raise RuntimeError("minimal polynomial degree exceeds dimension")

    @cached_property
    def frobenius_matrix(self) -> list[list[int]]:
        """Matrix of x ↦ x^q; column i is the image of basis vector i."""
        q = self.field.order
        cols = [self.pow(self.basis(i), q) for i in range(self.dim)]
        return linalg.transpose(cols)

    def field_test(self) -> FieldTest:
        F = self.field
        if self.dim == 0 or self.is_zero(self.unit):
            return FieldTest(False, "unit")
        Phi = self.frobenius_matrix
        kernel = linalg.nullspace(F, Phi)
        if kernel:
            y = tuple(kernel[0])
            prev, cur = y, self.mul(y, y)
            while not self.is_zero(cur):
                prev, cur = cur, self.mul(cur, y)
            return FieldTest(False, "nilpotent", (y, prev))
        shifted = [
            [F.sub(Phi[r][c], F.one if r == c else F.zero) for c in range(self.dim)]
            for r in range(self.dim)
        ]
        fixed = linalg.nullspace(F, shifted)
        if len(fixed) <= 1:
            return FieldTest(True, "field")
        unit_span = [list(self.unit)]
        u = next(
            tuple(v)
            for v in fixed
            if linalg.rank(F, linalg.transpose(unit_span + [v])) == 2
        )
        c = roots(F, self.minimal_polynomial(u))[0]
        shifted_u = self.sub(u, self.scale(c, self.unit))
        e = self.pow(shifted_u, F.order - 1)
        return FieldTest(False, "idempotent", (e, self.sub(self.unit, e)))

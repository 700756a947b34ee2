"""Embeddings F_{p^a} → F_{p^b} (a | b), determined by the image of the generator."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Optional

import numpy as np

from .factor import roots
from .field import ExtField, FieldMismatch
from .linalg import solve_mod_p


class DegreeMismatch(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class Embedding:
    source: ExtField
    target: ExtField
    image_gen: int

    @cached_property
    def _basis_images(self) -> tuple[int, ...]:
        T = self.target
        out, x = [], T.one
        for _ in range(self.source.k):
            out.append(x)
            x = T.mul(x, self.image_gen)
        return tuple(out)

    def apply(self, a: int) -> int:
        T = self.target
        out = T.zero
        for d, b in zip(self.source.digits(a), self._basis_images):
            if d:
                out = T.add(out, T.scale_int(d, b))
        return out

    __call__ = apply

    @cached_property
    def matrix(self) -> np.ndarray:
        """F_p matrix whose column i holds the coordinates of ι(g^i)."""
        cols = [self.target.digits(b) for b in self._basis_images]
        return np.array(cols, dtype=np.int64).T.reshape(self.target.k, self.source.k)

    def preimage(self, y: int) -> Optional[int]:
        """The x with ι(x) = y, or None when y is outside the image."""
        sol = solve_mod_p(self.matrix, self.target.digits(y), self.source.p)
        if sol is None:
            return None
        return self.source.from_digits(int(c) for c in sol)

    def in_image(self, y: int) -> bool:
        return self.preimage(y) is not None

    def compose(self, other: Embedding) -> Embedding:
        """``self ∘ other``."""
        if not other.target.same_as(self.source):
            raise FieldMismatch("embeddings do not compose")
        return Embedding(other.source, self.target, self.apply(other.image_gen))

    def to_json(self) -> dict:
        return {
            "source": self.source.to_json(),
            "target": self.target.to_json(),
            "image_gen": list(self.target.digits(self.image_gen)),
        }


def embed(small: ExtField, big: ExtField) -> Embedding:
    """Send the generator of ``small`` to the smallest root of its defining polynomial in ``big``.

    The choice is not functorial: ``embed(F8, F4096)`` need not equal
    ``embed(F64, F4096) ∘ embed(F8, F64)``. Towers store one embedding per
    step and derive the rest with ``compose`` or ``lift_through``; never call
    ``embed`` across skipped levels and expect the squares to commute.
    """
    if small.p != big.p or big.k % small.k:
        raise DegreeMismatch(f"{small.describe()} does not embed in {big.describe()}")
    if small.k == 1:
        return Embedding(small, big, small.gen)
    rs = roots(big, small.modulus)
    return Embedding(small, big, rs[0])


def lift_through(f: Embedding, e: Embedding) -> Embedding:
    """The unique ``h`` with ``e ∘ h = f``, given image(f) ⊆ image(e)."""
    if not f.target.same_as(e.target):
        raise FieldMismatch("maps land in different fields")
    x = e.preimage(f.image_gen)
    if x is None:
        raise DegreeMismatch("image of f is not contained in image of e")
    return Embedding(f.source, e.source, x)

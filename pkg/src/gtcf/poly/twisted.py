"""The twisted G-action on K[X_1,…,X_e]: coefficients by σ_k, blocks by the index action."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Sequence

from ..ff.field import Field
from ..groups.finite import IndexAction
from .multipoly import LayoutMismatch, MultiPoly


@dataclass(frozen=True, eq=False)
class TwistedAction:
    action: IndexAction
    field: Field
    sigmas: tuple[Callable[[Any], Any], ...]

    def __post_init__(self):
        if len(self.sigmas) != self.action.group.order:
            raise ValueError(
                f"{len(self.sigmas)} automorphisms for a group of order {self.action.group.order}"
            )

    @property
    def e(self) -> int:
        return self.action.group.order

    def sigma(self, k: int) -> Callable[[Any], Any]:
        return self.sigmas[k - 1]


def apply_twisted(A: TwistedAction, k: int, f: MultiPoly) -> MultiPoly:
    """``f^{σ_k}(X_{k∗1},…,X_{k∗e})``; slots never move."""
    L = f.layout
    if L.e != A.e:
        raise LayoutMismatch(f"polynomial has {L.e} blocks, action has {A.e}")
    sigma = A.sigma(k)
    n = L.n
    target = [(A.action.act(k, i) - 1) * n for i in range(1, L.e + 1)]
    out = {}
    for m, c in f.terms.items():
        new = [0] * L.nvars
        for i in range(L.e):
            base = i * n
            dest = target[i]
            for j in range(n):
                new[dest + j] = m[base + j]
        out[tuple(new)] = sigma(c)
    return MultiPoly(f.field, L, out)


def sigma_tuple(A: TwistedAction, a: Sequence[Any]) -> tuple:
    """(σ_1(a),…,σ_e(a)) concatenated in block order."""
    out: list[Any] = []
    for k in range(1, A.e + 1):
        s = A.sigma(k)
        out.extend(s(x) for x in a)
    return tuple(out)

"""Fields with an action of a finite group: constants and strictness."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property
from math import gcd
from typing import Any, Optional, Sequence

from ..cyclotomic.field import CycloAut, CycloField
from ..ff.embedding import Embedding, embed
from ..ff.field import ExtField, FrobeniusPower, make_field
from ..groups.finite import FiniteGroup, IndexAction
from ..poly.twisted import TwistedAction

logger = logging.getLogger(__name__)


class NotAnAction(ValueError):
    """Raised when k ↦ σ_k is not a group homomorphism."""


@dataclass(frozen=True)
class CycloConstants:
    """Fixed subfield of ℚ(ζ_n), given by a ℚ-basis inside the carrier."""

    field: CycloField
    basis: tuple

    @property
    def degree(self) -> int:
        return len(self.basis)

    def describe(self) -> str:
        return f"subfield of degree {self.degree} of {self.field.describe()}"

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "basis": [self.field.format(b) for b in self.basis],
        }


@dataclass(frozen=True, eq=False)
class GTransformalField:
    carrier: Any
    group: FiniteGroup
    sigmas: tuple
    exponents: Optional[tuple[int, ...]] = None
    name: str = ""

    @classmethod
    def finite(cls, K: ExtField, G: FiniteGroup, exponents: Sequence[int], name: str = "") -> GTransformalField:
        """σ_k = x ↦ x^(p^(s_k)); requires s_{k∗l} ≡ s_k + s_l (mod deg K)."""
        s = tuple(int(x) % K.k for x in exponents)
        if len(s) != G.order:
            raise NotAnAction(f"{len(s)} exponents for a group of order {G.order}")
        if s[0] != 0:
            raise NotAnAction("the neutral element must act trivially")
        for a in G.elements():
            for b in G.elements():
                if s[G.mul(a, b) - 1] != (s[a - 1] + s[b - 1]) % K.k:
                    raise NotAnAction(f"sigma_{a} sigma_{b} != sigma_{G.mul(a, b)}")
        return cls(K, G, tuple(FrobeniusPower(K, x) for x in s), s, name)

    @classmethod
    def cyclotomic(cls, F: CycloField, G: FiniteGroup, exponents: Sequence[int], name: str = "") -> GTransformalField:
        """σ_k = ζ ↦ ζ^(a_k); requires a_{k∗l} ≡ a_k·a_l (mod n)."""
        n = F.n
        a = tuple(int(x) % n for x in exponents)
        if len(a) != G.order:
            raise NotAnAction(f"{len(a)} exponents for a group of order {G.order}")
        if any(gcd(x, n) != 1 for x in a) and n > 1:
            raise NotAnAction("cyclotomic exponents must be units")
        for x in G.elements():
            for y in G.elements():
                if a[G.mul(x, y) - 1] != (a[x - 1] * a[y - 1]) % n:
                    raise NotAnAction(f"sigma_{x} sigma_{y} != sigma_{G.mul(x, y)}")
        return cls(F, G, tuple(CycloAut(F, x) for x in a), a, name)

    @classmethod
    def cyclic_frobenius(cls, K: ExtField, n: int, r: int, name: str = "") -> GTransformalField:
        """ℤ/n acting through the r-th Frobenius power: index j ↦ x^(p^(r(j-1)))."""
        from ..groups.finite import cyclic_group

        return cls.finite(K, cyclic_group(n), [r * j for j in range(n)], name)

    @property
    def e(self) -> int:
        return self.group.order

    @property
    def is_finite(self) -> bool:
        return isinstance(self.carrier, ExtField)

    def sigma(self, k: int):
        return self.sigmas[k - 1]

    @cached_property
    def index_action(self) -> IndexAction:
        return IndexAction(self.group)

    @cached_property
    def twisted(self) -> TwistedAction:
        return TwistedAction(self.index_action, self.carrier, self.sigmas)

    def is_constant(self, x: Any) -> bool:
        return all(s(x) == x for s in self.sigmas)

    @cached_property
    def _constants(self):
        K = self.carrier
        if isinstance(K, ExtField):
            g = K.k
            for s in self.exponents or ():
                g = gcd(g, s)
            C = make_field(K.p, g)
            return C, embed(C, K)
        if isinstance(K, CycloField):
            return CycloConstants(K, tuple(K.fixed_field(self.exponents or ()))), None
        fixed = getattr(K, "constants_of", None)
        if fixed is None:
            raise TypeError(f"no constants computation for {type(K).__name__}")
        return fixed(self.sigmas)

    def constants(self) -> tuple[Any, Optional[Embedding]]:
        """The fixed subfield and, for finite carriers, its embedding into K."""
        return self._constants

    @property
    def constants_degree(self) -> int:
        """[K : K^G]."""
        K = self.carrier
        C, _ = self._constants
        if isinstance(K, ExtField):
            return K.k // C.k
        if isinstance(K, CycloField):
            return K.degree // C.degree
        return K.degree_over_constants

    def is_strict(self) -> bool:
        return self.constants_degree == self.e

    def to_json(self) -> dict:
        C, _ = self._constants
        out = {
            "carrier": self.carrier.to_json(),
            "group": {"name": self.group.name, "order": self.group.order},
            "constants": C.to_json(),
            "degree_over_constants": self.constants_degree,
            "strict": self.is_strict(),
        }
        if self.exponents is not None:
            key = "frobenius_exponents" if self.is_finite else "cyclotomic_exponents"
            out[key] = list(self.exponents)
        return out


def constants(Kσ: GTransformalField):
    return Kσ.constants()


def is_strict(Kσ: GTransformalField) -> bool:
    return Kσ.is_strict()

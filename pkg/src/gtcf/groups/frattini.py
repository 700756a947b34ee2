"""Subgroup lattices, Frattini subgroups and Frattini covers of finite groups."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from sympy import factorint
from sympy.ntheory.modular import crt

from ..config.runtime_config import current_config
from .finite import FiniteGroup, GroupHom, cyclic_group, direct_product, product_coordinates

logger = logging.getLogger(__name__)


class OrderTooLarge(ValueError):
    """Raised when a group exceeds the configured order bound."""


class NotSurjective(ValueError):
    """Raised when a cover predicate is asked about a non-surjective map."""


class TruncationTooSmall(ValueError):
    """Raised when a truncation level is below a p-adic valuation of n."""


class Unsupported(ValueError):
    """Raised for universal covers of non-cyclic groups."""


def _check_order(G: FiniteGroup, max_order: Optional[int]) -> None:
    bound = current_config().groups.max_order if max_order is None else max_order
    if G.order > bound:
        raise OrderTooLarge(f"group of order {G.order} exceeds bound {bound}")


@lru_cache(maxsize=64)
def _subgroup_lattice(G: FiniteGroup) -> tuple[frozenset[int], ...]:
    # every subgroup is a join of cyclic subgroups
    cyclics: dict[frozenset[int], int] = {}
    for a in G.elements():
        cyclics.setdefault(G.generated([a]), a)
    gens_of: dict[frozenset[int], tuple[int, ...]] = {
        H: ((g,) if g != 1 else ()) for H, g in cyclics.items()
    }
    frontier = list(gens_of)
    while frontier:
        nxt = []
        for H in frontier:
            for C, g in cyclics.items():
                if C <= H:
                    continue
                gens = gens_of[H] + (g,)
                J = G.generated(gens)
                if J not in gens_of:
                    gens_of[J] = gens
                    nxt.append(J)
        frontier = nxt
    return tuple(sorted(gens_of, key=lambda s: (len(s), sorted(s))))


def subgroups(G: FiniteGroup, max_order: Optional[int] = None) -> list[frozenset[int]]:
    """All subgroups of ``G``, sorted by (size, sorted elements)."""
    _check_order(G, max_order)
    return list(_subgroup_lattice(G))


def normal_subgroups(G: FiniteGroup, max_order: Optional[int] = None) -> list[frozenset[int]]:
    return [H for H in subgroups(G, max_order) if G.is_normal(H)]


def maximal_subgroups(G: FiniteGroup, max_order: Optional[int] = None) -> list[frozenset[int]]:
    proper = [H for H in subgroups(G, max_order) if len(H) < G.order]
    return [H for H in proper if not any(H < K for K in proper)]


def frattini_subgroup(G: FiniteGroup, max_order: Optional[int] = None) -> frozenset[int]:
    """Intersection of the maximal proper subgroups (the whole group when trivial)."""
    if G.order == 1:
        return frozenset({1})
    out = frozenset(G.elements())
    for M in maximal_subgroups(G, max_order):
        out &= M
    return out


def is_frattini_cover_direct(pi: GroupHom, max_order: Optional[int] = None) -> bool:
    """No proper subgroup of the source maps onto the target."""
    if not pi.is_surjective:
        raise NotSurjective("map is not onto its target")
    full = pi.target.order
    return not any(
        len(H) < pi.source.order and len(pi.image(H)) == full
        for H in subgroups(pi.source, max_order)
    )


def is_frattini_cover(
    pi: GroupHom, max_order: Optional[int] = None, cross_check: Optional[bool] = None
) -> bool:
    """``ker(pi) ⊆ Φ(source)``; optionally cross-checked with the quantifier form."""
    if not pi.is_surjective:
        raise NotSurjective("map is not onto its target")
    verdict = pi.kernel <= frattini_subgroup(pi.source, max_order)
    if cross_check is None:
        cross_check = current_config().groups.cross_check_frattini
    if cross_check:
        direct = is_frattini_cover_direct(pi, max_order)
        if direct != verdict:
            raise RuntimeError(
                f"Frattini predicates disagree on {pi.source.name} -> {pi.target.name}"
            )
    return verdict


@dataclass(frozen=True)
class KernelFactor:
    prime: int
    valuation: int
    truncation: int

    @property
    def generator(self) -> int:
        return self.prime**self.valuation

    @property
    def order(self) -> int:
        return self.prime ** (self.truncation - self.valuation)

    def describe(self) -> str:
        return f"{self.generator}Z/{self.prime ** self.truncation}"

    def to_json(self) -> dict:
        return {
            "prime": self.prime,
            "valuation": self.valuation,
            "truncation": self.truncation,
            "generator": self.generator,
            "order": self.order,
            "text": self.describe(),
        }


@dataclass(frozen=True)
class CoverKernel:
    factors: tuple[KernelFactor, ...]

    @property
    def order(self) -> int:
        out = 1
        for f in self.factors:
            out *= f.order
        return out

    @property
    def cyclic_orders(self) -> tuple[int, ...]:
        """Orders of the cyclic pieces ℤ/p^(k-a), one per prime."""
        return tuple(f.order for f in self.factors)

    def describe(self) -> str:
        return " x ".join(f.describe() for f in self.factors) if self.factors else "trivial"

    def to_json(self) -> dict:
        return {
            "factors": [f.to_json() for f in self.factors],
            "order": self.order,
            "text": self.describe(),
        }


def cyclic_universal_frattini_cover(
    n: int, k: int, max_order: Optional[int] = None
) -> tuple[GroupHom, CoverKernel]:
    """Truncation ∏ ℤ/p_i^k → ℤ/n of the universal Frattini cover ∏ ℤ_{p_i} → ℤ/n."""
    if n < 1:
        raise ValueError("n must be positive")
    valuations = dict(sorted(factorint(n).items()))
    if valuations and k < max(valuations.values()):
        raise TruncationTooSmall(f"k={k} below max valuation {max(valuations.values())} of {n}")
    bound = current_config().groups.cover_max_order if max_order is None else max_order
    moduli = [p**k for p in valuations]
    size = 1
    for m in moduli:
        size *= m
    if size > bound:
        raise OrderTooLarge(f"cover of order {size} exceeds bound {bound}")

    source = direct_product(*[cyclic_group(m) for m in moduli]) if moduli else cyclic_group(1)
    target = cyclic_group(n)
    small = [p**a for p, a in valuations.items()]
    images = []
    for x in source.elements():
        coords = product_coordinates(x, moduli) if moduli else ()
        residues = [(c - 1) % s for c, s in zip(coords, small)]
        r = int(crt(small, residues)[0]) % n if small else 0
        images.append(r + 1)
    hom = GroupHom(source, target, tuple(images))
    kernel = CoverKernel(tuple(KernelFactor(p, a, k) for p, a in valuations.items()))
    logger.info("truncated universal Frattini cover for n=%d k=%d: kernel %s", n, k, kernel.describe())
    return hom, kernel


def universal_frattini_cover(
    G: FiniteGroup, k: int, max_order: Optional[int] = None
) -> tuple[GroupHom, CoverKernel]:
    """Truncated universal Frattini cover; only cyclic ``G`` is supported."""
    if not G.is_cyclic:
        raise Unsupported(f"universal Frattini cover of non-cyclic {G.name or 'group'}")
    return cyclic_universal_frattini_cover(G.order, k, max_order)

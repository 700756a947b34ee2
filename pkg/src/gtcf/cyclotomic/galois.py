"""Gal(ℚ(ζ_n)/ℚ) ≅ (ℤ/n)^* and lifting exponent actions to larger conductors."""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from math import gcd
from typing import Sequence

from ..groups.finite import FiniteGroup, NotAHomomorphism, abelian_invariants, from_function
from .field import ConductorMismatch

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class UnitGroup:
    n: int
    units: tuple[int, ...]
    group: FiniteGroup

    @property
    def invariants(self) -> tuple[int, ...]:
        return abelian_invariants(self.group)

    def unit(self, k: int) -> int:
        return self.units[k - 1]

    def describe(self) -> str:
        inv = self.invariants
        return " x ".join(f"Z/{d}" for d in inv) if inv else "trivial"

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "order": len(self.units),
            "units": list(self.units),
            "invariants": list(self.invariants),
            "structure": self.describe(),
        }


def units_mod(n: int) -> tuple[int, ...]:
    """Units of ℤ/n, 1 first, then ascending."""
    if n == 1:
        return (0,)
    return tuple([1] + [a for a in range(2, n) if gcd(a, n) == 1])


def galois_group(n: int) -> UnitGroup:
    if n < 1:
        raise ValueError("n must be positive")
    units = units_mod(n)
    G = from_function(units, lambda a, b: (a * b) % n, name=f"(Z/{n})^*")
    return UnitGroup(n, units, G)


def _check_rho(G: FiniteGroup, images: Sequence[int], n: int) -> tuple[int, ...]:
    if len(images) != G.order:
        raise NotAHomomorphism(f"expected {G.order} images, got {len(images)}")
    imgs = tuple(a % n for a in images)
    if any(gcd(a, n) != 1 for a in imgs) and n > 1:
        raise NotAHomomorphism("images must be units")
    for x in G.elements():
        for y in G.elements():
            if imgs[G.mul(x, y) - 1] != (imgs[x - 1] * imgs[y - 1]) % n:
                raise NotAHomomorphism(f"rho(g{x}g{y}) != rho(g{x})rho(g{y}) mod {n}")
    return imgs


def _words(G: FiniteGroup, gens: Sequence[int]) -> dict[int, tuple[int, ...]]:
    """A word in the generators (by position) for every element, breadth first."""
    words: dict[int, tuple[int, ...]] = {1: ()}
    frontier = [1]
    while frontier:
        nxt = []
        for x in frontier:
            for i, g in enumerate(gens):
                y = G.mul(x, g)
                if y not in words:
                    words[y] = words[x] + (i,)
                    nxt.append(y)
        frontier = nxt
    return words


def extend_action(G: FiniteGroup, rho: Sequence[int], n: int, m: int) -> list[tuple[int, ...]]:
    """All homomorphisms ρ′: G → (ℤ/m)^* with ρ′ ≡ ρ (mod n), as image tuples."""
    if m % n:
        raise ConductorMismatch(f"{n} does not divide {m}")
    imgs = _check_rho(G, rho, n)
    gens = G.generating_set()
    words = _words(G, gens)
    choices = [
        [b for b in range(m) if gcd(b, m) == 1 and b % n == imgs[g - 1]] if m > 1 else [0]
        for g in gens
    ]
    lifts = []
    for combo in itertools.product(*choices):
        cand = [1 % m] * G.order
        for x, w in words.items():
            v = 1 % m
            for i in w:
                v = (v * combo[i]) % m
            cand[x - 1] = v
        ok = all(
            cand[G.mul(x, y) - 1] == (cand[x - 1] * cand[y - 1]) % m
            for x in G.elements()
            for y in G.elements()
        )
        if ok:
            lifts.append(tuple(cand))
    lifts.sort()
    logger.info("rho=%s mod %d has %d lifts mod %d", imgs, n, len(lifts), m)
    return lifts


def restrict(lift: Sequence[int], n: int) -> tuple[int, ...]:
    return tuple(a % n for a in lift)

"""Factorization of univariate polynomials over finite fields.

Squarefree decomposition, then distinct-degree factorization, then
Cantor–Zassenhaus equal-degree splitting driven by a seeded ``random.Random``
(the trace map replaces the half-power in characteristic 2). Output order is
fixed by :func:`~gtcf.ff.upoly.sort_key`, so results do not depend on the seed.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from typing import Iterator, Optional

from sympy import factorint

from ..config.runtime_config import current_config
from . import upoly as up
from .field import ExtField
from .upoly import UPoly, ZeroPolynomial

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Factorization:
    field: ExtField
    leading: int
    factors: tuple[tuple[UPoly, int], ...]

    @property
    def is_irreducible(self) -> bool:
        return len(self.factors) == 1 and self.factors[0][1] == 1

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(up.deg(f) for f, m in self.factors for _ in range(m))

    def expand(self) -> UPoly:
        F = self.field
        out = up.const(F, self.leading)
        for f, m in self.factors:
            for _ in range(m):
                out = up.mul(F, out, f)
        return out

    def to_json(self) -> dict:
        F = self.field
        return {
            "leading": F.format(self.leading),
            "factors": [{"poly": up.to_text(F, f), "multiplicity": m} for f, m in self.factors],
        }


def _one(F: ExtField) -> UPoly:
    return (F.one,)


def _pth_root(F: ExtField, f: UPoly) -> UPoly:
    p = F.p
    return up.trim(F, [F.frobenius(f[i], F.k - 1) for i in range(0, len(f), p)])


def squarefree_decomposition(F: ExtField, f: UPoly) -> list[tuple[UPoly, int]]:
    """Pairs ``(g, m)`` with ``f = ∏ g^m``, each g squarefree and monic; f monic."""
    out: list[tuple[UPoly, int]] = []
    if up.deg(f) <= 0:
        return out
    c = up.gcd(F, f, up.derivative(F, f))
    w = up.quo(F, f, c)
    i = 1
    while w != _one(F):
        y = up.gcd(F, w, c)
        z = up.quo(F, w, y)
        if up.deg(z) > 0:
            out.append((z, i))
        i += 1
        w = y
        c = up.quo(F, c, y)
    if c != _one(F):
        for g, m in squarefree_decomposition(F, _pth_root(F, c)):
            out.append((g, m * F.p))
    return out


def distinct_degree(F: ExtField, f: UPoly) -> list[tuple[UPoly, int]]:
    """Pairs ``(g, d)``: g is the product of the degree-d irreducible factors of squarefree monic f."""
    out = []
    X = up.x(F)
    h = up.mod(F, X, f)
    rest = f
    d = 1
    while up.deg(rest) >= 2 * d:
        h = up.powmod(F, h, F.order, rest)
        g = up.gcd(F, rest, up.sub(F, h, X))
        if g != _one(F):
            out.append((g, d))
            rest = up.quo(F, rest, g)
            h = up.mod(F, h, rest)
        d += 1
    if up.deg(rest) > 0:
        out.append((rest, up.deg(rest)))
    return out


def _random_poly(F: ExtField, n: int, rng: random.Random) -> UPoly:
    return up.trim(F, [rng.randrange(F.order) for _ in range(n)])


def _splitter(F: ExtField, a: UPoly, d: int, f: UPoly) -> UPoly:
    if F.p == 2:
        t = a
        acc = a
        for _ in range(F.k * d - 1):
            t = up.mod(F, up.mul(F, t, t), f)
            acc = up.add(F, acc, t)
        return acc
    return up.sub(F, up.powmod(F, a, (F.order**d - 1) // 2, f), _one(F))


def equal_degree(F: ExtField, f: UPoly, d: int, rng: random.Random) -> list[UPoly]:
    """Split squarefree monic f whose irreducible factors all have degree d."""
    n = up.deg(f)
    if n == d:
        return [f]
    if n <= 0:
        return []
    while True:
        a = _random_poly(F, n, rng)
        if up.deg(a) <= 0:
            continue
        g = up.gcd(F, a, f)
        if up.deg(g) <= 0:
            g = up.gcd(F, _splitter(F, a, d, f), f)
        if 0 < up.deg(g) < n:
            return equal_degree(F, g, d, rng) + equal_degree(F, up.quo(F, f, g), d, rng)


def factor_univariate(F: ExtField, f: UPoly, seed: Optional[int] = None) -> Factorization:
    f = up.trim(F, f)
    if not f:
        raise ZeroPolynomial("cannot factor the zero polynomial")
    rng = random.Random(current_config().ff.factor_seed if seed is None else seed)
    lc = f[-1]
    counts: dict[UPoly, int] = {}
    for g, m in squarefree_decomposition(F, up.monic(F, f)):
        for h, d in distinct_degree(F, g):
            for irr in equal_degree(F, h, d, rng):
                counts[irr] = counts.get(irr, 0) + m
    factors = tuple(sorted(counts.items(), key=lambda t: up.sort_key(t[0])))
    return Factorization(F, lc, factors)


def _x_power_q_iter(F: ExtField, f: UPoly, times: int) -> UPoly:
    h = up.mod(F, up.x(F), f)
    for _ in range(times):
        h = up.powmod(F, h, F.order, f)
    return h


def is_irreducible(F: ExtField, f: UPoly) -> bool:
    """Rabin's test."""
    f = up.monic(F, up.trim(F, f))
    n = up.deg(f)
    if n < 1:
        return False
    if n == 1:
        return True
    X = up.x(F)
    if _x_power_q_iter(F, f, n) != up.mod(F, X, f):
        return False
    for r in factorint(n):
        h = _x_power_q_iter(F, f, n // r)
        if up.gcd(F, f, up.sub(F, h, X)) != _one(F):
            return False
    return True


def roots(F: ExtField, f: UPoly, seed: Optional[int] = None) -> list[int]:
    """Distinct roots of f in F, ascending."""
    f = up.monic(F, up.trim(F, f))
    if not f:
        raise ZeroPolynomial("every element is a root of 0")
    if up.deg(f) < 1:
        return []
    X = up.x(F)
    h = up.powmod(F, X, F.order, f)
    g = up.gcd(F, f, up.sub(F, h, X))
    if up.deg(g) < 1:
        return []
    rng = random.Random(current_config().ff.factor_seed if seed is None else seed)
    linear = equal_degree(F, g, 1, rng)
    return sorted(F.neg(lin[0]) for lin in linear)


def monic_polynomials(F: ExtField, d: int) -> Iterator[UPoly]:
    """Monic degree-d polynomials in rank order of their lower coefficients."""
    q = F.order
    for m in range(q**d):
        low = []
        for _ in range(d):
            m, c = divmod(m, q)
            low.append(c)
        yield tuple(low) + (F.one,)


def irreducible_polynomials(F: ExtField, d: int) -> Iterator[UPoly]:
    for f in monic_polynomials(F, d):
        if (d == 1 or f[0] != 0) and is_irreducible(F, f):
            yield f

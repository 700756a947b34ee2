"""Ideal predicates: membership, proper containment, G-invariance, zero-dimensionality."""

from __future__ import annotations

import logging
from typing import Optional, Union

from ..ff.algebra import FiniteAlgebra
from ..ff.field import ExtField
from ..poly.multipoly import Monomial, MultiPoly, mono_divides, mono_mul, order_key
from ..poly.twisted import TwistedAction, apply_twisted
from .buchberger import GroebnerBasis, Ideal, buchberger, ideal_from_basis

logger = logging.getLogger(__name__)


class NotZeroDimensional(ValueError):
    pass


class InfiniteField(ValueError):
    """Raised when a finite-carrier procedure receives an infinite field."""


class InvariantViolation(RuntimeError):
    """σ_k(I) ⊆ I held but the reduced bases of σ_k(I) and I differ."""


IdealOrBasis = Union[Ideal, GroebnerBasis]


def _basis(I: IdealOrBasis, order: Optional[str] = None) -> GroebnerBasis:
    if isinstance(I, GroebnerBasis):
        return I if order is None or order == I.order else buchberger(I.ideal, order)
    return buchberger(I, order)


def member(f: MultiPoly, I: IdealOrBasis, order: Optional[str] = None) -> bool:
    if f.is_zero():
        return True
    return _basis(I, order).contains(f)


def contains_properly(I: Ideal, J: Ideal, order: Optional[str] = None) -> bool:
    """I ⊊ J: every generator of I lies in J and some generator of J is outside I."""
    GJ = buchberger(J, order)
    if not all(GJ.contains(f) for f in I.generators):
        return False
    GI = buchberger(I, order)
    return any(not GI.contains(g) for g in J.generators)


def twisted_image(I: Ideal, A: TwistedAction, k: int) -> Ideal:
    return Ideal(I.field, I.layout, tuple(apply_twisted(A, k, f) for f in I.generators))


def is_g_invariant(I: Ideal, A: TwistedAction, order: Optional[str] = None) -> bool:
    """σ_k(I) ⊆ I for every k; on success also checks σ_k(I) = I through reduced bases."""
    if I.layout.e != A.e:
        raise ValueError(f"ideal has {I.layout.e} blocks, action has {A.e}")
    G = buchberger(I, order)
    for k in range(2, A.e + 1):
        for f in I.generators:
            if not G.contains(apply_twisted(A, k, f)):
                return False
    for k in range(2, A.e + 1):
        image = buchberger(twisted_image(I, A, k), G.order)
        if image.polys != G.polys:
            raise InvariantViolation(f"sigma_{k}(I) is contained in I but not equal to it")
    return True


def dimension_zero(I: IdealOrBasis, order: Optional[str] = None) -> bool:
    G = _basis(I, order)
    nvars = G.layout.nvars
    leads = G.leading_monomials
    for i in range(nvars):
        if not any(all(a == 0 for j, a in enumerate(m) if j != i) for m in leads):
            return False
    return True


def quotient_basis(I: IdealOrBasis, order: Optional[str] = None) -> list[Monomial]:
    """Standard monomials (not divisible by any leading monomial), ascending in the term order."""
    G = _basis(I, order)
    if not dimension_zero(G):
        raise NotZeroDimensional("ideal is not zero-dimensional")
    if G.is_unit:
        return []
    nvars = G.layout.nvars
    leads = G.leading_monomials
    zero = (0,) * nvars
    seen = {zero}
    frontier = [zero]
    while frontier:
        nxt = []
        for m in frontier:
            for i in range(nvars):
                u = tuple(a + (1 if j == i else 0) for j, a in enumerate(m))
                if u in seen or any(mono_divides(l, u) for l in leads):
                    continue
                seen.add(u)
                nxt.append(u)
        frontier = nxt
    return sorted(seen, key=order_key(G.order))


def quotient_dimension(I: IdealOrBasis, order: Optional[str] = None) -> int:
    return len(quotient_basis(I, order))


def monomial_poly(G: GroebnerBasis, m: Monomial) -> MultiPoly:
    return MultiPoly(G.field, G.layout, {m: G.field.one})


def coordinates(G: GroebnerBasis, std: list[Monomial], f: MultiPoly) -> tuple:
    """Coordinates of ``f mod I`` on the standard monomials."""
    r = G.normal_form(f)
    F = G.field
    return tuple(r.terms.get(m, F.zero) for m in std)


def from_coordinates(G: GroebnerBasis, std: list[Monomial], v) -> MultiPoly:
    return MultiPoly(G.field, G.layout, {m: c for m, c in zip(std, v)})


def quotient_algebra(I: IdealOrBasis, order: Optional[str] = None) -> tuple[FiniteAlgebra, list[Monomial], GroebnerBasis]:
    """K[X]/I as a :class:`FiniteAlgebra` on its standard monomials (finite K only)."""
    G = _basis(I, order)
    F = G.field
    if not isinstance(F, ExtField):
        raise InfiniteField(f"quotient algebra needs a finite carrier, got {F.describe()}")
    std = quotient_basis(G)

    def product(i: int, j: int):
        return coordinates(G, std, monomial_poly(G, mono_mul(std[i], std[j])))

    unit = coordinates(G, std, MultiPoly.const(F, G.layout, F.one)) if std else ()
    return FiniteAlgebra.from_products(F, len(std), product, unit), std, G


__all__ = [
    "InfiniteField",
    "InvariantViolation",
    "NotZeroDimensional",
    "contains_properly",
    "coordinates",
    "dimension_zero",
    "from_coordinates",
    "ideal_from_basis",
    "is_g_invariant",
    "member",
    "quotient_algebra",
    "quotient_basis",
    "quotient_dimension",
    "twisted_image",
]

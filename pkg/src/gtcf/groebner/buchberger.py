"""Buchberger's algorithm with the sugar strategy and reduced, monic output.

Pairs are selected by (sugar, lcm under the term order, indices); the product
and chain criteria discard useless pairs. The reduced basis is sorted by
descending leading monomial, so two ideals are equal exactly when their
bases are.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Optional, Sequence

from ..config.runtime_config import current_config
from ..ff.field import Field
from ..poly.grammar import format_poly
from ..poly.multipoly import (
    Layout,
    LayoutMismatch,
    Monomial,
    MultiPoly,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
    order_key,
    same_field,
)

logger = logging.getLogger(__name__)


class BudgetExceeded(RuntimeError):
    """Raised when the pair queue passes the configured cap."""


def _resolve_order(order: Optional[str]) -> str:
    return current_config().groebner.default_order if order is None else order


@dataclass(frozen=True, eq=False)
class Ideal:
    field: Field
    layout: Layout
    generators: tuple[MultiPoly, ...] = ()

    def __post_init__(self):
        gens = []
        for f in self.generators:
            if f.layout != self.layout:
                raise LayoutMismatch(f"generator over {f.layout}, ideal over {self.layout}")
            if not same_field(self.field, f.field):
                raise LayoutMismatch("generator over a different field")
            if not f.is_zero():
                gens.append(f)
        object.__setattr__(self, "generators", tuple(gens))

    @classmethod
    def of(cls, *gens: MultiPoly) -> Ideal:
        if not gens:
            raise ValueError("use Ideal(field, layout) for the zero ideal")
        return cls(gens[0].field, gens[0].layout, tuple(gens))

    @classmethod
    def unit(cls, field: Field, layout: Layout) -> Ideal:
        return cls(field, layout, (MultiPoly.const(field, layout, field.one),))

    def plus(self, *gens: MultiPoly) -> Ideal:
        return Ideal(self.field, self.layout, self.generators + tuple(gens))

    def __add__(self, other: Ideal) -> Ideal:
        return self.plus(*other.generators)

    @property
    def is_zero(self) -> bool:
        return not self.generators

    def _key(self) -> tuple:
        return (id(self.field), self.layout, frozenset(self.generators))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Ideal) and self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def to_json(self, order: Optional[str] = None) -> dict:
        order = _resolve_order(order)
        return {
            "order": order,
            "layout": self.layout.to_json(),
            "generators": [format_poly(f, order) for f in self.generators],
        }


@dataclass(frozen=True, eq=False)
class GroebnerBasis:
    ideal: Ideal
    order: str
    polys: tuple[MultiPoly, ...]
    pairs_processed: int = 0
    _leads: tuple = field(default=(), repr=False)

    def __post_init__(self):
        object.__setattr__(self, "_leads", tuple(g.leading(self.order) for g in self.polys))

    @property
    def field(self) -> Field:
        return self.ideal.field

    @property
    def layout(self) -> Layout:
        return self.ideal.layout

    @property
    def is_unit(self) -> bool:
        return len(self.polys) == 1 and self.polys[0].is_constant()

    @property
    def leading_monomials(self) -> tuple[Monomial, ...]:
        return tuple(m for m, _ in self._leads)

    def normal_form(self, f: MultiPoly) -> MultiPoly:
        return MultiPoly(f.field, f.layout, _reduce_terms(f.field, f.terms, self.polys, self._leads, self.order))

    def contains(self, f: MultiPoly) -> bool:
        return self.normal_form(f).is_zero()

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, GroebnerBasis)
            and self.order == other.order
            and self.polys == other.polys
        )

    def __hash__(self) -> int:
        return hash((self.order, self.polys))

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "layout": self.layout.to_json(),
            "basis": [format_poly(g, self.order) for g in self.polys],
        }


def _reduce_terms(
    F: Field,
    terms: dict[Monomial, Any],
    basis: Sequence[MultiPoly],
    leads: Sequence[tuple[Monomial, Any]],
    order: str,
    skip: Optional[int] = None,
) -> dict[Monomial, Any]:
    """Full reduction of ``terms`` modulo ``basis``; returns the remainder terms."""
    key = order_key(order)
    p = dict(terms)
    rem: dict[Monomial, Any] = {}
    while p:
        m = max(p, key=key)
        c = p[m]
        for idx, (lm, lc) in enumerate(leads):
            if idx == skip or not mono_divides(lm, m):
                continue
            q = mono_div(m, lm)
            factor = F.mul(c, F.inv(lc))
            for mg, cg in basis[idx].terms.items():
                mm = mono_mul(mg, q)
                v = F.sub(p[mm], F.mul(factor, cg)) if mm in p else F.neg(F.mul(factor, cg))
                if F.is_zero(v):
                    p.pop(mm, None)
                else:
                    p[mm] = v
            break
        else:
            rem[m] = c
            del p[m]
    return rem


def _spoly(F: Field, f: MultiPoly, g: MultiPoly, lf, lg) -> MultiPoly:
    (mf, cf), (mg, cg) = lf, lg
    lcm = mono_lcm(mf, mg)
    a = f.mul_term(mono_div(lcm, mf), F.inv(cf))
    b = g.mul_term(mono_div(lcm, mg), F.inv(cg))
    return a - b


def _coprime(a: Monomial, b: Monomial) -> bool:
    return all(not (x and y) for x, y in zip(a, b))


def _reduced(basis: list[MultiPoly], order: str) -> list[MultiPoly]:
    key = order_key(order)
    basis = [g.monic(order) for g in basis]
    leads = [g.leading(order)[0] for g in basis]
    keep = []
    for i, lm in enumerate(leads):
        dominated = any(
            j != i and mono_divides(leads[j], lm) and (leads[j] != lm or j < i)
            for j in range(len(basis))
        )
        if not dominated:
            keep.append(basis[i])
    out = []
    leads_k = [g.leading(order) for g in keep]
    for i, g in enumerate(keep):
        lm, lc = leads_k[i]
        tail = {m: c for m, c in g.terms.items() if m != lm}
        rest = _reduce_terms(g.field, tail, keep, leads_k, order, skip=i)
        rest[lm] = lc
        out.append(MultiPoly(g.field, g.layout, rest).monic(order))
    out.sort(key=lambda g: key(g.leading(order)[0]), reverse=True)
    return out


def buchberger(I: Ideal, order: Optional[str] = None, pair_cap: Optional[int] = None) -> GroebnerBasis:
    order = _resolve_order(order)
    cap = current_config().groebner.pair_cap if pair_cap is None else pair_cap
    return _buchberger_cached(I, order, cap)


@lru_cache(maxsize=512)
def _buchberger_cached(I: Ideal, order: str, cap: int) -> GroebnerBasis:
    F = I.field
    key = order_key(order)
    G: list[MultiPoly] = []
    leads: list[tuple[Monomial, Any]] = []
    sugar: list[int] = []
    pending: dict[tuple[int, int], int] = {}

    def add(h: MultiPoly, s: int) -> None:
        h = h.monic(order)
        lt = h.leading(order)
        new = len(G)
        G.append(h)
        leads.append(lt)
        sugar.append(s)
        for i in range(new):
            ps = max(sugar[i] - sum(leads[i][0]), s - sum(lt[0])) + sum(mono_lcm(leads[i][0], lt[0]))
            pending[(i, new)] = ps

    gens = sorted(I.generators, key=lambda f: key(f.leading(order)[0]))
    for f in gens:
        h = MultiPoly(F, I.layout, _reduce_terms(F, f.terms, G, leads, order))
        if not h.is_zero():
            add(h, f.total_degree())

    processed = 0
    while pending:
        i, j = min(
            pending,
            key=lambda ij: (pending[ij], key(mono_lcm(leads[ij[0]][0], leads[ij[1]][0])), ij[1], ij[0]),
        )
        s = pending.pop((i, j))
        processed += 1
        if processed > cap:
            logger.warning("pair cap %d exceeded after %d basis elements", cap, len(G))
            raise BudgetExceeded(f"Buchberger pair cap {cap} exceeded")
        mi, mj = leads[i][0], leads[j][0]
        if _coprime(mi, mj):
            continue
        lcm = mono_lcm(mi, mj)
        if any(
            k not in (i, j)
            and mono_divides(leads[k][0], lcm)
            and (min(i, k), max(i, k)) not in pending
            and (min(j, k), max(j, k)) not in pending
            for k in range(len(G))
        ):
            continue
        sp = _spoly(F, G[i], G[j], leads[i], leads[j])
        h = MultiPoly(F, I.layout, _reduce_terms(F, sp.terms, G, leads, order))
        if not h.is_zero():
            if h.is_constant():
                one = MultiPoly.const(F, I.layout, F.one)
                return GroebnerBasis(I, order, (one,), processed)
            add(h, s)

    if any(g.is_constant() for g in G):
        return GroebnerBasis(I, order, (MultiPoly.const(F, I.layout, F.one),), processed)
    basis = tuple(_reduced(G, order))
    logger.debug("basis of %d elements after %d pairs", len(basis), processed)
    return GroebnerBasis(I, order, basis, processed)


def normal_form(f: MultiPoly, I: Ideal, order: Optional[str] = None) -> MultiPoly:
    return buchberger(I, order).normal_form(f)


def ideal_from_basis(G: GroebnerBasis) -> Ideal:
    return Ideal(G.field, G.layout, G.polys)

"""Multivariate polynomials in the block variables X_{i,j} (block i ≤ e, slot j ≤ n).

Monomials are dense exponent tuples over the flattened layout, variable
X_{i,j} sitting at position ``(i-1)*n + (j-1)``. Serialized forms key
exponents sparsely by (block, slot).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Mapping, Optional, Sequence

from ..ff.field import Field

Monomial = tuple[int, ...]

ORDERS = ("lex", "grevlex", "deglex")


class ArityMismatch(ValueError):
    """Raised when a point has the wrong number of coordinates."""


class LayoutMismatch(ValueError):
    """Raised when polynomials over different layouts or fields are combined."""


@dataclass(frozen=True)
class Layout:
    e: int
    n: int

    @property
    def nvars(self) -> int:
        return self.e * self.n

    def index(self, block: int, slot: int) -> int:
        if not (1 <= block <= self.e and 1 <= slot <= self.n):
            raise LayoutMismatch(f"x[{block}][{slot}] outside layout e={self.e}, n={self.n}")
        return (block - 1) * self.n + (slot - 1)

    def block_slot(self, idx: int) -> tuple[int, int]:
        b, s = divmod(idx, self.n)
        return b + 1, s + 1

    def name(self, idx: int) -> str:
        b, s = self.block_slot(idx)
        return f"x[{b}][{s}]"

    def to_json(self) -> dict:
        return {"e": self.e, "n": self.n}


def order_key(order: str) -> Callable[[Monomial], tuple]:
    """Sort key under which larger monomials compare greater; x[1][1] is the largest variable."""
    if order == "lex":
        return lambda m: m
    if order == "deglex":
        return lambda m: (sum(m), m)
    if order == "grevlex":
        return lambda m: (sum(m), tuple(-a for a in reversed(m)))
    raise ValueError(f"unknown term order {order!r}; expected one of {ORDERS}")


def same_field(a: Field, b: Field) -> bool:
    same = getattr(a, "same_as", None)
    return a is b or bool(same and same(b))


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


class MultiPoly:
    """Immutable sparse polynomial; ``terms`` maps monomials to nonzero coefficients."""

    __slots__ = ("field", "layout", "terms", "_hash")

    def __init__(self, field: Field, layout: Layout, terms: Mapping[Monomial, Any] | None = None):
        clean = {}
        for m, c in (terms or {}).items():
            if len(m) != layout.nvars:
                raise LayoutMismatch(f"monomial of length {len(m)} in layout with {layout.nvars} variables")
            if not field.is_zero(c):
                clean[tuple(m)] = c
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "layout", layout)
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, key, value):
        raise AttributeError("MultiPoly is immutable")

    # construction

    @classmethod
    def zero(cls, field: Field, layout: Layout) -> MultiPoly:
        return cls(field, layout)

    @classmethod
    def const(cls, field: Field, layout: Layout, c: Any) -> MultiPoly:
        return cls(field, layout, {(0,) * layout.nvars: c})

    @classmethod
    def var(cls, field: Field, layout: Layout, block: int, slot: int = 1) -> MultiPoly:
        m = [0] * layout.nvars
        m[layout.index(block, slot)] = 1
        return cls(field, layout, {tuple(m): field.one})

    @classmethod
    def from_univariate(
        cls, field: Field, layout: Layout, coeffs: Sequence[Any], block: int = 1, slot: int = 1
    ) -> MultiPoly:
        idx = layout.index(block, slot)
        terms = {}
        for d, c in enumerate(coeffs):
            m = [0] * layout.nvars
            m[idx] = d
            terms[tuple(m)] = c
        return cls(field, layout, terms)

    # predicates

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(m) for m in self.terms)

    def constant_term(self) -> Any:
        return self.terms.get((0,) * self.layout.nvars, self.field.zero)

    def total_degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def variables(self) -> tuple[int, ...]:
        used = set()
        for m in self.terms:
            used.update(i for i, a in enumerate(m) if a)
        return tuple(sorted(used))

    def univariate_index(self) -> Optional[int]:
        """Index of the single variable f depends on, or None."""
        vs = self.variables()
        return vs[0] if len(vs) == 1 else None

    def to_univariate(self, idx: int) -> tuple:
        if any(a for m in self.terms for i, a in enumerate(m) if i != idx):
            raise ValueError("polynomial involves other variables")
        top = max((m[idx] for m in self.terms), default=-1)
        out = [self.field.zero] * (top + 1)
        for m, c in self.terms.items():
            out[m[idx]] = c
        return tuple(out)

    # arithmetic

    def _check(self, other: MultiPoly) -> None:
        if other.layout != self.layout:
            raise LayoutMismatch(f"layouts differ: {self.layout} vs {other.layout}")
        if other.field is not self.field and not same_field(self.field, other.field):
            raise LayoutMismatch("polynomials over different fields")

    def __add__(self, other: MultiPoly) -> MultiPoly:
        self._check(other)
        F = self.field
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = F.add(out[m], c) if m in out else c
        return MultiPoly(F, self.layout, out)

    def __neg__(self) -> MultiPoly:
        F = self.field
        return MultiPoly(F, self.layout, {m: F.neg(c) for m, c in self.terms.items()})

    def __sub__(self, other: MultiPoly) -> MultiPoly:
        return self + (-other)

    def __mul__(self, other: MultiPoly) -> MultiPoly:
        self._check(other)
        F = self.field
        out: dict[Monomial, Any] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                c = F.mul(c1, c2)
                out[m] = F.add(out[m], c) if m in out else c
        return MultiPoly(F, self.layout, out)

    def __pow__(self, k: int) -> MultiPoly:
        out = MultiPoly.const(self.field, self.layout, self.field.one)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def scale(self, c: Any) -> MultiPoly:
        F = self.field
        return MultiPoly(F, self.layout, {m: F.mul(c, a) for m, a in self.terms.items()})

    def mul_term(self, mono: Monomial, c: Any) -> MultiPoly:
        F = self.field
        return MultiPoly(F, self.layout, {mono_mul(m, mono): F.mul(c, a) for m, a in self.terms.items()})

    # ordering

    def sorted_terms(self, order: str) -> list[tuple[Monomial, Any]]:
        key = order_key(order)
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)

    def leading(self, order: str) -> tuple[Monomial, Any]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        key = order_key(order)
        m = max(self.terms, key=key)
        return m, self.terms[m]

    def monic(self, order: str) -> MultiPoly:
        if not self.terms:
            return self
        _, lc = self.leading(order)
        return self.scale(self.field.inv(lc))

    # comparison

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.layout == other.layout and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.layout, frozenset(self.terms.items()))))
        return self._hash

    def __repr__(self) -> str:
        from .grammar import format_poly

        return f"MultiPoly({format_poly(self)})"

    def to_json(self) -> dict:
        from .grammar import format_poly

        return {"text": format_poly(self), "layout": self.layout.to_json()}


def evaluate(f: MultiPoly, point: Sequence[Any]) -> Any:
    if len(point) != f.layout.nvars:
        raise ArityMismatch(f"expected {f.layout.nvars} coordinates, got {len(point)}")
    F = f.field
    cache: dict[tuple[int, int], Any] = {}

    def power(i: int, a: int) -> Any:
        key = (i, a)
        if key not in cache:
            cache[key] = F.pow(point[i], a)
        return cache[key]

    out = F.zero
    for m, c in f.terms.items():
        t = c
        for i, a in enumerate(m):
            if a:
                t = F.mul(t, power(i, a))
        out = F.add(out, t)
    return out

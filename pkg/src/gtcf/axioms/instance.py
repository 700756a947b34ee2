"""Axiom instances (n, I, J) and their builders."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any, Optional, Sequence, Union

from ..groebner.buchberger import Ideal, _resolve_order
from ..groebner.hypotheses import Hypotheses, check_ideals
from ..groebner.predicates import InvariantViolation, is_g_invariant
from ..gtf.field import GTransformalField
from ..poly.grammar import format_poly, parse_polys
from ..poly.multipoly import Layout, LayoutMismatch, MultiPoly, same_field

logger = logging.getLogger(__name__)


class InfiniteCarrier(ValueError):
    pass


class CoefficientsNotConstant(ValueError):
    pass


class WrongGroupOrder(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class AxiomInstance:
    n: int
    I: Ideal
    J: Ideal
    provenance: str = ""

    def __post_init__(self):
        if self.I.layout != self.J.layout:
            raise LayoutMismatch(f"I over {self.I.layout}, J over {self.J.layout}")
        if self.I.layout.n != self.n:
            raise LayoutMismatch(f"layout has {self.I.layout.n} slots, instance says n={self.n}")

    @property
    def layout(self) -> Layout:
        return self.I.layout

    @property
    def e(self) -> int:
        return self.layout.e

    @property
    def field(self):
        return self.I.field

    def to_json(self, order: Optional[str] = None) -> dict:
        order = _resolve_order(order)
        return {
            "e": self.e,
            "n": self.n,
            "field": self.field.to_json(),
            "I": [format_poly(f, order) for f in self.I.generators],
            "J": [format_poly(f, order) for f in self.J.generators],
            "provenance": self.provenance,
        }


def instance_from_texts(
    Kσ: GTransformalField,
    n: int,
    I_texts: Sequence[str],
    J_texts: Sequence[str] = ("1",),
    provenance: str = "",
) -> AxiomInstance:
    """Parse generators in the polynomial grammar over the layout (|G|, n)."""
    K = Kσ.carrier
    L = Layout(Kσ.e, n)
    I = Ideal(K, L, tuple(parse_polys(I_texts, K, L)))
    J = Ideal(K, L, tuple(parse_polys(J_texts, K, L)))
    return AxiomInstance(n, I, J, provenance)


def _relayout(f: MultiPoly, L: Layout) -> MultiPoly:
    """A one-block polynomial written in the block-1 variables of ``L``."""
    pad = (0,) * (L.nvars - f.layout.nvars)
    return MultiPoly(f.field, L, {m + pad: c for m, c in f.terms.items()})


def _check_constant(Kσ: GTransformalField, polys: Sequence[MultiPoly]) -> None:
    for f in polys:
        for c in f.terms.values():
            if not Kσ.is_constant(c):
                raise CoefficientsNotConstant(f"{format_poly(f)} has a coefficient outside the constants")


Base = Union[Ideal, Sequence[MultiPoly], tuple]


def diagonal_instance(
    Kσ: GTransformalField,
    base: Base,
    n: Optional[int] = None,
    extra_J: Sequence[MultiPoly] = (),
    provenance: str = "diagonal",
) -> AxiomInstance:
    """I = I₀(X_1) + (X_i − X_1 : i ≥ 2); J = I + extra_J, or the unit ideal.

    ``base`` is an ideal over a single block of n slots, a list of its
    generators, or the coefficient tuple of a univariate polynomial (n = 1).
    """
    K, e = Kσ.carrier, Kσ.e
    if isinstance(base, Ideal):
        gens = list(base.generators)
        n = base.layout.n
    elif base and isinstance(base[0], MultiPoly):
        gens = list(base)
        n = gens[0].layout.n
    else:
        n = 1
        gens = [MultiPoly.from_univariate(K, Layout(1, 1), tuple(base))]
    if any(f.layout != Layout(1, n) for f in gens):
        raise LayoutMismatch("base generators must live on a single block")
    if any(not same_field(f.field, K) for f in gens):
        raise LayoutMismatch("base generators are over a different field")
    _check_constant(Kσ, gens)

    L = Layout(e, n)
    out = [_relayout(f, L) for f in gens]
    for i in range(2, e + 1):
        for j in range(1, n + 1):
            out.append(MultiPoly.var(K, L, i, j) - MultiPoly.var(K, L, 1, j))
    I = Ideal(K, L, tuple(out))
    J = I.plus(*extra_J) if extra_J else Ideal.unit(K, L)
    if not is_g_invariant(I, Kσ.twisted):
        raise InvariantViolation("diagonal ideal is not invariant")
    return AxiomInstance(n, I, J, provenance)


def norm_instance(
    Kσ: GTransformalField,
    c: Any,
    exclude: Optional[Any] = None,
    provenance: str = "norm",
) -> AxiomInstance:
    """I = (X_{1,1}·X_{2,1} − c) for a group of order 2; ``exclude`` w adds X_{1,1} − w to J."""
    if Kσ.e != 2:
        raise WrongGroupOrder(f"norm instances need |G| = 2, got {Kσ.e}")
    K = Kσ.carrier
    if K.is_zero(c) or not Kσ.is_constant(c):
        raise CoefficientsNotConstant("c must be a nonzero constant")
    L = Layout(2, 1)
    x1, x2 = MultiPoly.var(K, L, 1), MultiPoly.var(K, L, 2)
    f = x1 * x2 - MultiPoly.const(K, L, c)
    I = Ideal.of(f)
    if exclude is None:
        J = Ideal.unit(K, L)
    else:
        J = I.plus(x1 - MultiPoly.const(K, L, exclude))
    return AxiomInstance(1, I, J, provenance)


def check_hypotheses(
    Kσ: GTransformalField,
    inst: AxiomInstance,
    order: Optional[str] = None,
    seed: Optional[int] = None,
) -> Hypotheses:
    if inst.e != Kσ.e:
        raise LayoutMismatch(f"instance has {inst.e} blocks, group has order {Kσ.e}")
    if not same_field(inst.field, Kσ.carrier):
        raise LayoutMismatch("instance is over a different field")
    return check_ideals(Kσ.twisted, inst.I, inst.J, order, seed)

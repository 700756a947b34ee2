"""One extension step: a point of V(I) \\ V(J) over a larger field with the action extended.

For a finite strict carrier K and ideals I ⊊ J with I prime, zero-dimensional
and invariant, K[X]/I is a field of degree m over K. It is identified with
L = F_{p^(km)} by sending a primitive element θ to the smallest root of its
minimal polynomial. The action then extends to L through σ′_k(X_{i,j}) =
X_{k∗i,j}, realized as a Frobenius power s′_k ≡ s_k (mod deg K).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional

from ..ff import linalg
from ..ff.embedding import Embedding, embed
from ..ff.factor import roots
from ..ff.field import ExtField, make_field
from ..groebner.buchberger import Ideal
from ..groebner.hypotheses import Hypotheses, check_ideals
from ..groebner.predicates import InfiniteField, coordinates
from ..groebner.primality import primitive_element
from ..poly.grammar import format_poly
from ..poly.multipoly import LayoutMismatch, MultiPoly, evaluate
from ..poly.twisted import sigma_tuple
from .field import GTransformalField, NotAnAction

logger = logging.getLogger(__name__)


class HypothesesFail(ValueError):
    def __init__(self, failed: list[str], hypotheses: Optional[Hypotheses] = None):
        super().__init__(f"hypotheses failed: {', '.join(failed)}")
        self.failed = failed
        self.hypotheses = hypotheses


class ExtensionNotCertified(RuntimeError):
    pass


@dataclass(frozen=True, eq=False)
class Extension:
    base: GTransformalField
    field: GTransformalField
    iota: Embedding
    point: tuple[int, ...]
    image: tuple[int, ...]
    theta: MultiPoly
    minimal_polynomial: tuple
    hypotheses: Hypotheses

    @property
    def degree(self) -> int:
        """[L : K]."""
        return self.field.carrier.k // self.base.carrier.k

    def to_json(self) -> dict:
        L = self.field.carrier
        return {
            "base": self.base.to_json(),
            "field": self.field.to_json(),
            "degree": self.degree,
            "iota": self.iota.to_json(),
            "theta": format_poly(self.theta),
            "point": [L.format(a) for a in self.point],
            "image": [L.format(a) for a in self.image],
            "hypotheses": self.hypotheses.to_json(),
        }


def _lift(f: MultiPoly, L: ExtField, iota: Embedding) -> MultiPoly:
    return MultiPoly(L, f.layout, {m: iota(c) for m, c in f.terms.items()})


def _extended_exponent(L: ExtField, k_deg: int, s: int, m: int, image: tuple, moves: list[tuple[int, int]]) -> Optional[int]:
    for t in range(m):
        cand = (s + k_deg * t) % L.k
        if all(L.frobenius(image[src], cand) == image[dst] for src, dst in moves):
            return cand
    return None


def extend_step(
    Kσ: GTransformalField,
    I: Ideal,
    J: Ideal,
    order: Optional[str] = None,
    seed: Optional[int] = None,
) -> Extension:
    K = Kσ.carrier
    if not isinstance(K, ExtField):
        raise InfiniteField(f"extension steps need a finite carrier, got {K.describe()}")
    if I.layout.e != Kσ.e or J.layout != I.layout:
        raise LayoutMismatch(f"ideals over {I.layout} and {J.layout}, group of order {Kσ.e}")
    hyp = check_ideals(Kσ.twisted, I, J, order, seed)
    if not hyp.passed:
        raise HypothesesFail(hyp.failed, hyp)

    prim = primitive_element(I, order, seed)
    if prim is None:
        raise ExtensionNotCertified("no primitive element found for K[X]/I")
    A, G, std = prim.algebra, prim.basis, list(prim.std)
    m = A.dim
    L = make_field(K.p, K.k * m)
    iota = embed(K, L)
    mu = tuple(iota(c) for c in prim.minimal_polynomial)
    rs = roots(L, mu)
    if not rs:
        raise ExtensionNotCertified("minimal polynomial has no root in L")
    beta = rs[0]

    u = tuple(prim.theta.terms.get(mono, K.zero) for mono in std)
    powers = [A.pow(u, t) for t in range(m)]
    beta_powers = [L.pow(beta, t) for t in range(m)]
    P = linalg.transpose(powers)
    layout = I.layout
    image = []
    for idx in range(layout.nvars):
        var = MultiPoly.var(K, layout, *layout.block_slot(idx))
        sol = linalg.solve(K, P, coordinates(G, std, var))
        if sol is None:
            raise ExtensionNotCertified(f"{layout.name(idx)} is not a polynomial in theta")
        value = L.zero
        for c, bp in zip(sol, beta_powers):
            if c:
                value = L.add(value, L.mul(iota(c), bp))
        image.append(value)
    image = tuple(image)

    act = Kσ.index_action
    exponents = []
    for k in Kσ.group.elements():
        moves = [
            (idx, layout.index(act.act(k, b), s))
            for idx in range(layout.nvars)
            for b, s in [layout.block_slot(idx)]
        ]
        s_new = _extended_exponent(L, K.k, Kσ.exponents[k - 1], m, image, moves)
        if s_new is None:
            raise ExtensionNotCertified(f"no automorphism of {L.describe()} extends sigma_{k}")
        exponents.append(s_new)
    try:
        Lσ = GTransformalField.finite(L, Kσ.group, exponents, name=f"{Kσ.name}'" if Kσ.name else "")
    except NotAnAction as exc:
        raise ExtensionNotCertified(str(exc)) from exc

    point = image[: layout.n]
    _verify(Kσ, Lσ, iota, I, J, point, image)
    logger.info(
        "extended %s to %s, sigma exponents %s", K.describe(), L.describe(), tuple(exponents)
    )
    return Extension(Kσ, Lσ, iota, point, image, prim.theta, prim.minimal_polynomial, hyp)


def _verify(Kσ, Lσ, iota, I: Ideal, J: Ideal, point: tuple, image: tuple) -> None:
    L = Lσ.carrier
    for f in I.generators:
        if not L.is_zero(evaluate(_lift(f, L, iota), image)):
            raise ExtensionNotCertified(f"point is not a zero of {format_poly(f)}")
    if not any(not L.is_zero(evaluate(_lift(g, L, iota), image)) for g in J.generators):
        raise ExtensionNotCertified("point is a zero of J")
    if sigma_tuple(Lσ.twisted, point) != image:
        raise ExtensionNotCertified("sigma-tuple of the point differs from the generic point")
    x = Kσ.carrier.gen
    for k in Kσ.group.elements():
        if Lσ.sigma(k)(iota(x)) != iota(Kσ.sigma(k)(x)):
            raise ExtensionNotCertified(f"sigma'_{k} does not restrict to sigma_{k}")

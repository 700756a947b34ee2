"""Tri-state primality verdicts for zero-dimensional and principal ideals."""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from typing import Optional

from ..config.runtime_config import current_config
from ..ff import upoly as up
from ..ff.algebra import FiniteAlgebra
from ..ff.factor import Factorization, factor_univariate
from ..ff.field import ExtField
from ..poly.grammar import format_poly
from ..poly.multipoly import MultiPoly
from .buchberger import GroebnerBasis, Ideal, buchberger
from .predicates import (
    InfiniteField,
    NotZeroDimensional,
    dimension_zero,
    from_coordinates,
    member,
    quotient_algebra,
)

logger = logging.getLogger(__name__)

PRIME = "Prime"
NOT_PRIME = "NotPrime"
UNKNOWN = "Unknown"


@dataclass(frozen=True)
class PrimalityVerdict:
    status: str
    method: str = ""
    reason: str = ""
    witness: Optional[tuple[MultiPoly, MultiPoly]] = None
    factorization: Optional[Factorization] = field(default=None, compare=False)

    @property
    def is_prime(self) -> bool:
        return self.status == PRIME

    @property
    def is_unknown(self) -> bool:
        return self.status == UNKNOWN

    def verify(self, I: Ideal) -> bool:
        """A NotPrime witness (f, g) must satisfy f·g ∈ I with f, g ∉ I."""
        if self.status != NOT_PRIME or self.witness is None:
            return True
        f, g = self.witness
        return member(f * g, I) and not member(f, I) and not member(g, I)

    def to_json(self) -> dict:
        out: dict = {"status": self.status, "method": self.method}
        if self.reason:
            out["reason"] = self.reason
        if self.witness is not None:
            out["witness"] = [format_poly(w) for w in self.witness]
        if self.factorization is not None:
            out["factorization"] = self.factorization.to_json()
        return out


def _upoly_at(I: Ideal, coeffs: tuple, theta: MultiPoly) -> MultiPoly:
    F, L = I.field, I.layout
    out = MultiPoly.zero(F, L)
    for c in reversed(coeffs):
        out = out * theta + MultiPoly.const(F, L, c)
    return out


def _split_witness(I: Ideal, fac: Factorization, mp: tuple, theta: MultiPoly) -> tuple[MultiPoly, MultiPoly]:
    F = I.field
    g = fac.factors[0][0]
    h = up.quo(F, up.monic(F, mp), g)
    return _upoly_at(I, g, theta), _upoly_at(I, h, theta)


def _candidates(I: Ideal, std, G, rng: random.Random, sweep: int, retries: int):
    F, L = I.field, I.layout
    variables = [MultiPoly.var(F, L, *L.block_slot(i)) for i in range(L.nvars)]
    q = F.order
    for t in range(sweep):
        if t < q - 1:
            # Vandermonde forms sum lam^i x_i for nonzero lam
            coeffs = [F.pow(t + 1, i) for i in range(L.nvars)]
        else:
            r = t + 1
            coeffs = []
            for _ in range(L.nvars):
                r, c = divmod(r, q)
                coeffs.append(c)
        theta = MultiPoly.zero(F, L)
        for c, v in zip(coeffs, variables):
            theta = theta + v.scale(c)
        yield "linear", G.normal_form(theta)
    for _ in range(retries):
        vec = tuple(rng.randrange(q) for _ in std)
        yield "random", from_coordinates(G, std, vec)


def is_prime_zero_dim(
    I: Ideal,
    order: Optional[str] = None,
    seed: Optional[int] = None,
    max_dim: Optional[int] = None,
) -> PrimalityVerdict:
    """Prime iff K[X]/I is a field; K must be finite and I zero-dimensional."""
    F = I.field
    if not isinstance(F, ExtField):
        raise InfiniteField(f"zero-dimensional primality needs a finite carrier, got {F.describe()}")
    cfg = current_config().groebner
    G = buchberger(I, order)
    if G.is_unit:
        return PrimalityVerdict(NOT_PRIME, "unit", reason="unit ideal is not proper")
    if not dimension_zero(G):
        raise NotZeroDimensional("ideal is not zero-dimensional")
    A, std, G = quotient_algebra(G)
    bound = cfg.max_quotient_dim if max_dim is None else max_dim
    if A.dim > bound:
        return PrimalityVerdict(UNKNOWN, "budget", reason=f"quotient dimension {A.dim} exceeds {bound}")
    rng = random.Random(current_config().ff.factor_seed if seed is None else seed)

    for source, theta in _candidates(I, std, G, rng, cfg.linear_sweep, cfg.random_retries):
        u = tuple(theta.terms.get(m, F.zero) for m in std)
        mp = A.minimal_polynomial(u)
        if up.deg(mp) < 1:
            continue
        fac = factor_univariate(F, mp)
        if not fac.is_irreducible:
            witness = _split_witness(I, fac, mp, theta)
            return PrimalityVerdict(NOT_PRIME, f"minimal polynomial ({source})", witness=witness, factorization=fac)
        if up.deg(mp) == A.dim:
            return PrimalityVerdict(PRIME, f"primitive element ({source})", factorization=fac)

    test = A.field_test()
    if test.is_field:
        return PrimalityVerdict(PRIME, "frobenius")
    a, b = test.witness
    witness = (from_coordinates(G, std, a), from_coordinates(G, std, b))
    return PrimalityVerdict(NOT_PRIME, test.kind, witness=witness)


def _degree_in(f: MultiPoly, idx: int) -> int:
    return max((m[idx] for m in f.terms), default=-1)


def _coefficients_in(f: MultiPoly, idx: int) -> tuple[MultiPoly, MultiPoly]:
    """Split a polynomial of degree 1 in variable ``idx`` as A·v + B."""
    A, B = {}, {}
    for m, c in f.terms.items():
        if m[idx]:
            mm = list(m)
            mm[idx] = 0
            A[tuple(mm)] = c
        else:
            B[m] = c
    return MultiPoly(f.field, f.layout, A), MultiPoly(f.field, f.layout, B)


def _coprime_certified(a: MultiPoly, b: MultiPoly) -> bool:
    if (a.is_constant() and not a.is_zero()) or (b.is_constant() and not b.is_zero()):
        return True
    va, vb = a.univariate_index(), b.univariate_index()
    if va is None or va != vb or not isinstance(a.field, ExtField):
        return False
    F = a.field
    return up.gcd(F, a.to_univariate(va), b.to_univariate(va)) == (F.one,)


def is_prime_principal(I: Ideal) -> PrimalityVerdict:
    """Primality of (f): factorization for univariate f, a degree-one criterion otherwise."""
    if len(I.generators) > 1:
        raise ValueError("principal ideal expected")
    if I.is_zero:
        return PrimalityVerdict(PRIME, "zero ideal")
    (f,) = I.generators
    F, L = f.field, f.layout
    if f.is_constant():
        return PrimalityVerdict(NOT_PRIME, "unit", reason="unit ideal is not proper")
    idx = f.univariate_index()
    if idx is not None:
        coeffs = f.to_univariate(idx)
        if len(coeffs) == 2:
            return PrimalityVerdict(PRIME, "linear")
        if not isinstance(F, ExtField):
            return PrimalityVerdict(UNKNOWN, "unsupported", reason=f"factorization over {F.describe()} unsupported")
        fac = factor_univariate(F, coeffs)
        if fac.is_irreducible:
            return PrimalityVerdict(PRIME, "factorization", factorization=fac)
        theta = MultiPoly.var(F, L, *L.block_slot(idx))
        witness = _split_witness(I, fac, up.monic(F, coeffs), theta)
        return PrimalityVerdict(NOT_PRIME, "factorization", witness=witness, factorization=fac)
    for v in f.variables():
        if _degree_in(f, v) != 1:
            continue
        A, B = _coefficients_in(f, v)
        var = MultiPoly.var(F, L, *L.block_slot(v))
        if B.is_zero():
            if A.is_constant():
                return PrimalityVerdict(PRIME, "linear")
            return PrimalityVerdict(NOT_PRIME, "monomial factor", witness=(A, var))
        if _coprime_certified(A, B):
            return PrimalityVerdict(PRIME, "degree one with coprime coefficients")
    return PrimalityVerdict(UNKNOWN, "unsupported", reason="multivariate factorization unsupported")


@dataclass(frozen=True, eq=False)
class PrimitiveElement:
    """θ ∈ K[X]/I whose minimal polynomial has degree dim K[X]/I."""

    theta: MultiPoly
    minimal_polynomial: tuple
    algebra: FiniteAlgebra
    std: tuple
    basis: GroebnerBasis


def primitive_element(I: Ideal, order: Optional[str] = None, seed: Optional[int] = None) -> Optional[PrimitiveElement]:
    F = I.field
    if not isinstance(F, ExtField):
        raise InfiniteField(f"primitive elements need a finite carrier, got {F.describe()}")
    cfg = current_config().groebner
    A, std, G = quotient_algebra(I, order)
    rng = random.Random(current_config().ff.factor_seed if seed is None else seed)
    for _, theta in _candidates(I, std, G, rng, cfg.linear_sweep, cfg.random_retries):
        u = tuple(theta.terms.get(m, F.zero) for m in std)
        mp = A.minimal_polynomial(u)
        if up.deg(mp) == A.dim:
            return PrimitiveElement(theta, mp, A, tuple(std), G)
    cap = current_config().closure.exhaustive_cap
    for r in range(1, min(F.order**A.dim, cap)):
        u, rest = [], r
        for _ in std:
            rest, c = divmod(rest, F.order)
            u.append(c)
        mp = A.minimal_polynomial(tuple(u))
        if up.deg(mp) == A.dim:
            return PrimitiveElement(from_coordinates(G, std, u), mp, A, tuple(std), G)
    return None

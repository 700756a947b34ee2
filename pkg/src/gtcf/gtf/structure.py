"""Structure constants of a strict field with group action, and the way back.

Given a C-basis v_1 = 1, v_2, …, v_e of K over its constants C, a strict
field is pinned down by

    v_i · v_j = Σ_l c_ijl v_l        σ_k(v_j) = Σ_l d_kjl v_l

with all c, d in C. :func:`reconstruct` rebuilds C^e with that product and
those C-linear automorphisms, checks it is a field with a group action and,
when the source field is known, checks the coordinate map is an isomorphism.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Optional, Sequence

import numpy as np

from ..config.runtime_config import current_config
from ..ff import linalg
from ..ff.algebra import FiniteAlgebra
from ..ff.embedding import Embedding, lift_through
from ..ff.field import ExtField
from ..ff.linalg import rank_mod_p, solve_mod_p
from ..groups.finite import FiniteGroup
from .field import GTransformalField

logger = logging.getLogger(__name__)

Vector = tuple


class NotStrict(ValueError):
    """[K : K^G] differs from |G|."""


class NotABasis(ValueError):
    pass


class InvalidTensors(ValueError):
    pass


class UnsupportedCarrier(ValueError):
    pass


# coordinates


@dataclass(frozen=True, eq=False)
class BasisFrame:
    """A C-basis of a finite carrier K together with the embedding C → K."""

    field: ExtField
    constants: ExtField
    iota: Embedding
    basis: tuple[int, ...]

    @cached_property
    def _constant_basis(self) -> tuple[int, ...]:
        C, i = self.constants, self.iota
        out, x = [], C.one
        for _ in range(C.k):
            out.append(i(x))
            x = C.mul(x, C.gen)
        return tuple(out)

    @cached_property
    def matrix(self) -> np.ndarray:
        """F_p matrix; column (i, a) holds the digits of ι(g^a)·v_i."""
        K = self.field
        cols = [K.digits(K.mul(w, v)) for v in self.basis for w in self._constant_basis]
        return np.array(cols, dtype=np.int64).T.reshape(K.k, len(cols))

    def is_basis(self) -> bool:
        K = self.field
        return self.matrix.shape[1] == K.k and rank_mod_p(self.matrix, K.p) == K.k

    def coordinates(self, y: int) -> Vector:
        K, C = self.field, self.constants
        sol = solve_mod_p(self.matrix, K.digits(y), K.p)
        if sol is None:
            raise NotABasis(f"{K.format(y)} is outside the span")
        g = C.k
        return tuple(C.from_digits(int(c) for c in sol[i * g : (i + 1) * g]) for i in range(len(self.basis)))

    def element(self, coords: Sequence[int]) -> int:
        K = self.field
        out = K.zero
        for c, v in zip(coords, self.basis):
            if c:
                out = K.add(out, K.mul(self.iota(c), v))
        return out


def basis_frame(Kσ: GTransformalField, basis: Sequence[int]) -> BasisFrame:
    K = Kσ.carrier
    if not isinstance(K, ExtField):
        raise UnsupportedCarrier(f"structure constants need a finite carrier, got {K.describe()}")
    C, iota = Kσ.constants()
    frame = BasisFrame(K, C, iota, tuple(basis))
    if len(frame.basis) != Kσ.e:
        raise NotABasis(f"{len(frame.basis)} vectors for a group of order {Kσ.e}")
    if frame.basis[0] != K.one:
        raise NotABasis("the first basis vector must be 1")
    if not frame.is_basis():
        raise NotABasis(f"vectors are not a basis of {K.describe()} over {C.describe()}")
    return frame


def power_basis(Kσ: GTransformalField, x: Optional[int] = None) -> tuple[int, ...]:
    """1, x, …, x^(e-1) for the first x (in rank order) giving a basis over the constants."""
    K = Kσ.carrier
    C, iota = Kσ.constants()
    candidates = [x] if x is not None else range(1, K.order)
    for y in candidates:
        pw, cur = [], K.one
        for _ in range(Kσ.e):
            pw.append(cur)
            cur = K.mul(cur, y)
        if BasisFrame(K, C, iota, tuple(pw)).is_basis():
            return tuple(pw)
    raise NotABasis("no power basis found")


# constants


@dataclass(frozen=True)
class StructureConstants:
    base: ExtField
    group: FiniteGroup
    products: tuple[tuple[Vector, ...], ...]
    actions: tuple[tuple[Vector, ...], ...]
    frame: Optional[BasisFrame] = field(default=None, compare=False)
    source: Optional[GTransformalField] = field(default=None, compare=False)

    @property
    def dim(self) -> int:
        return len(self.products)

    def c(self, i: int, j: int, l: int) -> int:
        return self.products[i - 1][j - 1][l - 1]

    def d(self, k: int, j: int, l: int) -> int:
        return self.actions[k - 1][j - 1][l - 1]

    def to_json(self) -> dict:
        C = self.base
        out = {
            "base": C.to_json(),
            "group": {"name": self.group.name, "order": self.group.order},
            "dim": self.dim,
            "c": [[[C.format(x) for x in v] for v in row] for row in self.products],
            "d": [[[C.format(x) for x in v] for v in row] for row in self.actions],
        }
        if self.frame is not None:
            out["basis"] = [self.frame.field.format(v) for v in self.frame.basis]
        return out


def structure_constants(Kσ: GTransformalField, basis: Optional[Sequence[int]] = None) -> StructureConstants:
    if not Kσ.is_strict():
        raise NotStrict(f"[K:C] = {Kσ.constants_degree} but |G| = {Kσ.e}")
    if basis is None:
        basis = power_basis(Kσ)
    frame = basis_frame(Kσ, basis)
    K, v = frame.field, frame.basis
    products = tuple(tuple(frame.coordinates(K.mul(a, b)) for b in v) for a in v)
    actions = tuple(tuple(frame.coordinates(Kσ.sigma(k)(b)) for b in v) for k in Kσ.group.elements())
    logger.info("structure constants of %s over %s, dim %d", K.describe(), frame.constants.describe(), len(v))
    return StructureConstants(frame.constants, Kσ.group, products, actions, frame, Kσ)


# the carrier C^e


@dataclass(frozen=True, eq=False)
class TensorField:
    """C^e with the product given by structure constants."""

    algebra: FiniteAlgebra

    @property
    def base(self) -> ExtField:
        return self.algebra.field

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def zero(self) -> Vector:
        return self.algebra.zero

    @property
    def one(self) -> Vector:
        return self.algebra.one

    @property
    def characteristic(self) -> int:
        return self.base.p

    @property
    def order(self) -> int:
        return self.base.order**self.dim

    @property
    def degree_over_constants(self) -> int:
        return self.dim

    def constants_of(self, sigmas) -> tuple[ExtField, None]:
        return self.base, None

    def elements(self):
        return itertools.product(self.base.elements(), repeat=self.dim)

    def add(self, a: Vector, b: Vector) -> Vector:
        return self.algebra.add(a, b)

    def sub(self, a: Vector, b: Vector) -> Vector:
        return self.algebra.sub(a, b)

    def neg(self, a: Vector) -> Vector:
        return self.algebra.sub(self.zero, a)

    def mul(self, a: Vector, b: Vector) -> Vector:
        return self.algebra.mul(a, b)

    def pow(self, a: Vector, m: int) -> Vector:
        if m < 0:
            a, m = self.inv(a), -m
        return self.algebra.pow(a, m)

    def inv(self, a: Vector) -> Vector:
        if self.is_zero(a):
            raise ZeroDivisionError("inverse of 0")
        cols = [self.mul(a, self.algebra.basis(j)) for j in range(self.dim)]
        sol = linalg.solve(self.base, linalg.transpose(cols), self.one)
        if sol is None:
            raise ZeroDivisionError("element is a zero divisor")
        return tuple(sol)

    def from_int(self, n: int) -> Vector:
        return self.algebra.scale(self.base.from_int(n), self.one)

    def is_zero(self, a: Vector) -> bool:
        return self.algebra.is_zero(a)

    def format(self, a: Vector) -> str:
        return "[" + ", ".join(self.base.format(c) for c in a) + "]"

    def describe(self) -> str:
        return f"{self.base.describe()}^{self.dim}"

    def to_json(self) -> dict:
        return {"tensor": self.base.to_json(), "dim": self.dim}


@dataclass(frozen=True, eq=False)
class MatrixAut:
    """A C-linear automorphism of C^e; column j is the image of basis vector j."""

    field: TensorField
    columns: tuple[Vector, ...]

    def __call__(self, x: Vector) -> Vector:
        T = self.field
        out = T.zero
        for c, col in zip(x, self.columns):
            if c:
                out = T.add(out, T.algebra.scale(c, col))
        return out

    def compose(self, other: MatrixAut) -> MatrixAut:
        return MatrixAut(self.field, tuple(self(col) for col in other.columns))

    def is_identity(self) -> bool:
        return all(col == self.field.algebra.basis(j) for j, col in enumerate(self.columns))

    def to_json(self) -> dict:
        C = self.field.base
        return {"columns": [[C.format(c) for c in col] for col in self.columns]}


@dataclass(frozen=True, eq=False)
class Reconstruction:
    field: GTransformalField
    iso: Optional[Any]
    checked: int
    exhaustive: bool

    def to_json(self) -> dict:
        return {
            "field": self.field.carrier.describe(),
            "strict": self.field.is_strict(),
            "iso_checked": self.checked,
            "exhaustive": self.exhaustive,
        }


def _check_shape(S: StructureConstants) -> None:
    e = S.dim
    if any(len(row) != e or any(len(v) != e for v in row) for row in S.products):
        raise InvalidTensors("product tensor is not e x e x e")
    if len(S.actions) != S.group.order:
        raise InvalidTensors(f"{len(S.actions)} action matrices for a group of order {S.group.order}")
    if any(len(row) != e or any(len(v) != e for v in row) for row in S.actions):
        raise InvalidTensors("action tensor is not |G| x e x e")
    if S.group.order != e:
        raise InvalidTensors(f"dimension {e} but |G| = {S.group.order}")


def _check_algebra(A: FiniteAlgebra) -> None:
    e = A.dim
    basis = [A.basis(i) for i in range(e)]
    for i, j in itertools.product(range(e), repeat=2):
        if A.products[i][j] != A.products[j][i]:
            raise InvalidTensors(f"not commutative at ({i + 1},{j + 1})")
    for j in range(e):
        if A.mul(A.one, basis[j]) != basis[j]:
            raise InvalidTensors(f"first basis vector is not a unit on v_{j + 1}")
    for i, j, l in itertools.product(range(e), repeat=3):
        if A.mul(A.products[i][j], basis[l]) != A.mul(basis[i], A.products[j][l]):
            raise InvalidTensors(f"not associative at ({i + 1},{j + 1},{l + 1})")
    test = A.field_test()
    if not test.is_field:
        raise InvalidTensors(f"algebra is not a field ({test.kind})")


def _check_action(T: TensorField, G: FiniteGroup, auts: Sequence[MatrixAut]) -> None:
    A = T.algebra
    e = A.dim
    if not auts[0].is_identity():
        raise InvalidTensors("the neutral element does not act trivially")
    for k, s in enumerate(auts, start=1):
        if linalg.rank(T.base, linalg.transpose(s.columns)) != e:
            raise InvalidTensors(f"sigma_{k} is not invertible")
        if s(A.one) != A.one:
            raise InvalidTensors(f"sigma_{k} does not fix 1")
        for i, j in itertools.product(range(e), repeat=2):
            if s(A.products[i][j]) != A.mul(s.columns[i], s.columns[j]):
                raise InvalidTensors(f"sigma_{k} is not multiplicative on (v_{i + 1}, v_{j + 1})")
    for a in G.elements():
        for b in G.elements():
            if auts[a - 1].compose(auts[b - 1]).columns != auts[G.mul(a, b) - 1].columns:
                raise InvalidTensors(f"sigma_{a} sigma_{b} != sigma_{G.mul(a, b)}")
    shifted = []
    for s in auts:
        for r in range(e):
            shifted.append([T.base.sub(s.columns[c][r], T.base.one if r == c else T.base.zero) for c in range(e)])
    fixed = linalg.nullspace(T.base, shifted, cols=e)
    if len(fixed) != 1:
        raise InvalidTensors(f"fixed space has dimension {len(fixed)} over the base")


def _sample(K: ExtField, cap: int, size: int, seed: int) -> tuple[Sequence[int], bool]:
    if K.order <= cap:
        return K.elements(), True
    rng = np.random.default_rng(seed)
    return [int(x) for x in rng.integers(0, K.order, size=size)], False


def reconstruct(S: StructureConstants, cap: Optional[int] = None, seed: int = 0) -> Reconstruction:
    cfg = current_config().closure
    cap = cfg.iso_check_cap if cap is None else cap
    _check_shape(S)
    C, e = S.base, S.dim
    unit = tuple(C.one if i == 0 else C.zero for i in range(e))
    A = FiniteAlgebra(C, e, S.products, unit)
    _check_algebra(A)
    T = TensorField(A)
    auts = tuple(MatrixAut(T, tuple(row)) for row in S.actions)
    _check_action(T, S.group, auts)
    rebuilt = GTransformalField(T, S.group, auts, name="reconstructed")

    frame = S.frame
    if frame is None or S.source is None:
        return Reconstruction(rebuilt, None, 0, False)
    K = frame.field
    sigmas = S.source.sigmas
    xs, exhaustive = _sample(K, cap, cfg.sample_size, seed)
    checked = 0
    for x in xs:
        fx = frame.coordinates(x)
        for j, v in enumerate(frame.basis):
            if frame.coordinates(K.mul(x, v)) != T.mul(fx, A.basis(j)):
                raise InvalidTensors(f"coordinate map is not multiplicative at {K.format(x)}")
        for k, s in enumerate(sigmas):
            if frame.coordinates(s(x)) != auts[k](fx):
                raise InvalidTensors(f"coordinate map does not intertwine sigma_{k + 1} at {K.format(x)}")
        checked += 1
    logger.info("reconstruction of %s verified on %d elements", T.describe(), checked)
    return Reconstruction(rebuilt, frame.coordinates, checked, exhaustive)


# towers


@dataclass(frozen=True)
class SquareCheck:
    holds: bool
    checked: int
    exhaustive: bool
    mismatch: Optional[int] = None

    def to_json(self) -> dict:
        out = {"holds": self.holds, "checked": self.checked, "exhaustive": self.exhaustive}
        if self.mismatch is not None:
            out["mismatch"] = self.mismatch
        return out


def constants_embedding(small: BasisFrame, big: BasisFrame, iota: Embedding) -> Embedding:
    """C → C′ induced by ι: K → K′."""
    return lift_through(iota.compose(small.iota), big.iota)


def check_commuting_square(
    small: StructureConstants,
    big: StructureConstants,
    iota: Embedding,
    cap: Optional[int] = None,
    seed: int = 0,
) -> SquareCheck:
    """f′ ∘ ι equals the coordinatewise embedding C^e → C′^e composed with f."""
    if small.frame is None or big.frame is None:
        raise ValueError("both structure constants need their basis frames")
    if tuple(iota(v) for v in small.frame.basis) != big.frame.basis:
        raise NotABasis("the larger basis is not the image of the smaller one")
    cfg = current_config().closure
    cap = cfg.iso_check_cap if cap is None else cap
    iC = constants_embedding(small.frame, big.frame, iota)
    K = small.frame.field
    xs, exhaustive = _sample(K, cap, cfg.sample_size, seed)
    checked = 0
    for x in xs:
        lhs = big.frame.coordinates(iota(x))
        rhs = tuple(iC(c) for c in small.frame.coordinates(x))
        checked += 1
        if lhs != rhs:
            return SquareCheck(False, checked, exhaustive, x)
    return SquareCheck(True, checked, exhaustive)


def linearly_disjoint(Lσ: GTransformalField, iota: Embedding, basis: Sequence[int]) -> bool:
    """Whether ι(basis) stays independent over the constants of L."""
    L = Lσ.carrier
    C, emb = Lσ.constants()
    frame = BasisFrame(L, C, emb, tuple(iota(v) for v in basis))
    return rank_mod_p(frame.matrix, L.p) == frame.matrix.shape[1]

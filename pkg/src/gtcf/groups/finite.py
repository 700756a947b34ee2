"""Finite groups stored as Cayley tables over 1-based indices.

Index 1 is always the neutral element. Groups built by the structural
constructors here (cyclic groups, direct products, permutation groups,
quotients) are groups by construction and skip the cubic associativity scan
that :func:`from_cayley_table` runs on user input.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Hashable, Iterable, Sequence

from sympy import factorint


class NotAGroup(ValueError):
    """Raised when a Cayley table violates a group axiom."""

    def __init__(self, message: str, witness: tuple[int, ...] = ()):
        super().__init__(f"{message} (witness {witness})" if witness else message)
        self.witness = witness


class NotAHomomorphism(ValueError):
    """Raised when a map between groups does not respect products."""


class UnknownPreset(ValueError):
    """Raised for group names the preset resolver does not know."""


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    cayley: tuple[tuple[int, ...], ...]
    name: str = ""
    labels: tuple[str, ...] = field(default=())

    @property
    def order(self) -> int:
        return len(self.cayley)

    @property
    def identity(self) -> int:
        return 1

    def elements(self) -> range:
        return range(1, self.order + 1)

    def mul(self, a: int, b: int) -> int:
        return self.cayley[a - 1][b - 1]

    @cached_property
    def _inverses(self) -> tuple[int, ...]:
        inv = [0] * self.order
        for a in self.elements():
            row = self.cayley[a - 1]
            inv[a - 1] = row.index(1) + 1
        return tuple(inv)

    def inverse(self, a: int) -> int:
        return self._inverses[a - 1]

    def power(self, a: int, m: int) -> int:
        if m < 0:
            a, m = self.inverse(a), -m
        out = 1
        base = a
        while m:
            if m & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            m >>= 1
        return out

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != 1:
            x = self.mul(x, a)
            k += 1
        return k

    @cached_property
    def is_abelian(self) -> bool:
        return all(
            self.cayley[a][b] == self.cayley[b][a]
            for a in range(self.order)
            for b in range(a + 1, self.order)
        )

    @cached_property
    def is_cyclic(self) -> bool:
        return any(self.element_order(a) == self.order for a in self.elements())

    def generated(self, gens: Iterable[int]) -> frozenset[int]:
        """Subgroup generated by ``gens`` (closure under right multiplication)."""
        gens = [g for g in set(gens) if g != 1]
        seen = {1}
        frontier = [1]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = self.mul(x, g)
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return frozenset(seen)

    def generating_set(self) -> tuple[int, ...]:
        """Greedy generating set: first index not yet covered, repeated."""
        gens: list[int] = []
        covered = frozenset({1})
        for a in self.elements():
            if a not in covered:
                gens.append(a)
                covered = self.generated(gens)
            if len(covered) == self.order:
                break
        return tuple(gens)

    def is_subgroup(self, subset: Iterable[int]) -> bool:
        s = set(subset)
        if 1 not in s:
            return False
        return all(self.mul(a, self.inverse(b)) in s for a in s for b in s)

    def is_normal(self, subset: Iterable[int]) -> bool:
        s = frozenset(subset)
        return all(
            self.mul(self.mul(g, h), self.inverse(g)) in s for g in self.elements() for h in s
        )

    def label(self, a: int) -> str:
        return self.labels[a - 1] if self.labels else str(a)

    def to_json(self) -> dict:
        return {"name": self.name, "order": self.order, "cayley": [list(r) for r in self.cayley]}


@dataclass(frozen=True, eq=False)
class IndexAction:
    """Left translation on indices: ``act(k, l) = j`` iff g_k g_l = g_j."""

    group: FiniteGroup

    def act(self, k: int, l: int) -> int:
        return self.group.mul(k, l)

    def permutation(self, k: int) -> tuple[int, ...]:
        return tuple(self.group.mul(k, l) for l in self.group.elements())


@dataclass(frozen=True, eq=False)
class GroupHom:
    source: FiniteGroup
    target: FiniteGroup
    images: tuple[int, ...]

    def __call__(self, a: int) -> int:
        return self.images[a - 1]

    def image(self, subset: Iterable[int] | None = None) -> frozenset[int]:
        if subset is None:
            return frozenset(self.images)
        return frozenset(self.images[a - 1] for a in subset)

    @property
    def is_surjective(self) -> bool:
        return len(set(self.images)) == self.target.order

    @cached_property
    def kernel(self) -> frozenset[int]:
        return frozenset(a for a in self.source.elements() if self.images[a - 1] == 1)

    def compose(self, other: GroupHom) -> GroupHom:
        """``self ∘ other`` (apply ``other`` first)."""
        if other.target is not self.source and other.target.cayley != self.source.cayley:
            raise NotAHomomorphism("composition of maps with mismatched groups")
        return GroupHom(other.source, self.target, tuple(self(other(a)) for a in other.source.elements()))

    def to_json(self) -> dict:
        return {
            "source": self.source.name,
            "target": self.target.name,
            "images": list(self.images),
            "surjective": self.is_surjective,
        }


def from_cayley_table(table: Sequence[Sequence[int]], name: str = "") -> FiniteGroup:
    """Validate a 1-based Cayley table and wrap it as a :class:`FiniteGroup`."""
    e = len(table)
    if e == 0:
        raise NotAGroup("empty table")
    for r, row in enumerate(table, start=1):
        if len(row) != e:
            raise NotAGroup("table is not square", (r,))
        for c, v in enumerate(row, start=1):
            if not isinstance(v, int) or not 1 <= v <= e:
                raise NotAGroup(f"entry {v!r} outside 1..{e}", (r, c))
    for l in range(1, e + 1):
        if table[0][l - 1] != l:
            raise NotAGroup("index 1 is not a left identity", (1, l))
        if table[l - 1][0] != l:
            raise NotAGroup("index 1 is not a right identity", (l, 1))
    full = set(range(1, e + 1))
    for r in range(1, e + 1):
        if set(table[r - 1]) != full:
            raise NotAGroup(f"row {r} is not a permutation", (r,))
        if {table[i][r - 1] for i in range(e)} != full:
            raise NotAGroup(f"column {r} is not a permutation", (r,))
    for a, b, c in itertools.product(range(e), repeat=3):
        ab = table[a][b] - 1
        bc = table[b][c] - 1
        if table[ab][c] != table[a][bc]:
            raise NotAGroup("associativity fails", (a + 1, b + 1, c + 1))
    return FiniteGroup(tuple(tuple(row) for row in table), name=name)


def from_images(source: FiniteGroup, target: FiniteGroup, images: Sequence[int]) -> GroupHom:
    if len(images) != source.order:
        raise NotAHomomorphism(f"expected {source.order} images, got {len(images)}")
    if any(not 1 <= v <= target.order for v in images):
        raise NotAHomomorphism("image index out of range")
    hom = GroupHom(source, target, tuple(images))
    for a in source.elements():
        for b in source.elements():
            if hom(source.mul(a, b)) != target.mul(hom(a), hom(b)):
                raise NotAHomomorphism(f"hom(g{a}*g{b}) != hom(g{a})*hom(g{b})")
    return hom


def from_function(
    elements: Sequence[Hashable],
    mul: Callable[[Hashable, Hashable], Hashable],
    name: str = "",
) -> FiniteGroup:
    """Cayley table of a closed set under ``mul``; ``elements[0]`` must be the identity."""
    index = {x: i + 1 for i, x in enumerate(elements)}
    table = tuple(tuple(index[mul(x, y)] for y in elements) for x in elements)
    return FiniteGroup(table, name=name, labels=tuple(str(x) for x in elements))


def cyclic_group(n: int) -> FiniteGroup:
    """ℤ/n with index k standing for the residue k-1."""
    table = tuple(tuple((a + b) % n + 1 for b in range(n)) for a in range(n))
    return FiniteGroup(table, name=f"Z/{n}", labels=tuple(str(a) for a in range(n)))


def direct_product(*factors: FiniteGroup) -> FiniteGroup:
    """Direct product with mixed-radix indexing, the first factor most significant."""
    if not factors:
        return cyclic_group(1)
    orders = [f.order for f in factors]
    coords = list(itertools.product(*[range(1, m + 1) for m in orders]))
    index = {c: i + 1 for i, c in enumerate(coords)}
    table = tuple(
        tuple(index[tuple(f.mul(x, y) for f, x, y in zip(factors, cx, cy))] for cy in coords)
        for cx in coords
    )
    labels = tuple(
        "(" + ",".join(f.label(x) for f, x in zip(factors, c)) + ")" for c in coords
    )
    return FiniteGroup(table, name="x".join(f.name for f in factors), labels=labels)


def product_coordinates(a: int, orders: Sequence[int]) -> tuple[int, ...]:
    """1-based factor indices of element ``a`` of :func:`direct_product`."""
    r = a - 1
    out = []
    for m in reversed(orders):
        out.append(r % m + 1)
        r //= m
    return tuple(reversed(out))


def from_permutations(perms: Iterable[Sequence[int]], name: str = "") -> FiniteGroup:
    """Group of permutations of 0..m-1 under composition (p∘q)(x) = p(q(x))."""
    elems = sorted({tuple(p) for p in perms})
    m = len(elems[0])
    ident = tuple(range(m))
    if ident not in elems:
        raise NotAGroup("permutation set lacks the identity")
    elems.remove(ident)
    elems.insert(0, ident)
    return from_function(elems, lambda p, q: tuple(p[q[x]] for x in range(m)), name=name)


def _sign(p: Sequence[int]) -> int:
    inversions = sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])
    return -1 if inversions % 2 else 1


def symmetric_group(m: int) -> FiniteGroup:
    return from_permutations(itertools.permutations(range(m)), name=f"S{m}")


def alternating_group(m: int) -> FiniteGroup:
    return from_permutations(
        (p for p in itertools.permutations(range(m)) if _sign(p) == 1), name=f"A{m}"
    )


def dihedral_group(m: int) -> FiniteGroup:
    """Symmetries of the regular m-gon (order 2m)."""
    rots = [tuple((i + r) % m for i in range(m)) for r in range(m)]
    refl = [tuple((r - i) % m for i in range(m)) for r in range(m)]
    return from_permutations(rots + refl, name=f"D{m}")


def quaternion_group() -> FiniteGroup:
    # (sign, unit) with unit in "1ijk"
    units = {
        ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
        ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
        ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
        ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
    }

    def mul(x, y):
        s, u = units[(x[1], y[1])]
        return (x[0] * y[0] * s, u)

    elems = [(1, "1"), (-1, "1"), (1, "i"), (-1, "i"), (1, "j"), (-1, "j"), (1, "k"), (-1, "k")]
    return from_function(elems, mul, name="Q8")


def quotient_map(G: FiniteGroup, N: Iterable[int]) -> GroupHom:
    """The epimorphism G → G/N; cosets are indexed by their smallest element."""
    normal = frozenset(N)
    if not G.is_subgroup(normal) or not G.is_normal(normal):
        raise NotAHomomorphism("quotient requires a normal subgroup")
    coset_of: dict[int, int] = {}
    reps: list[int] = []
    for a in G.elements():
        if a in coset_of:
            continue
        reps.append(a)
        for h in normal:
            coset_of[G.mul(a, h)] = len(reps)
    table = tuple(tuple(coset_of[G.mul(x, y)] for y in reps) for x in reps)
    Q = FiniteGroup(table, name=f"{G.name}/N{len(normal)}", labels=tuple(G.label(r) for r in reps))
    return GroupHom(G, Q, tuple(coset_of[a] for a in G.elements()))


def abelian_invariants(G: FiniteGroup) -> tuple[int, ...]:
    """Invariant factors d_1 ≥ d_2 ≥ … (d_{i+1} | d_i) of an abelian group."""
    if not G.is_abelian:
        raise NotAHomomorphism(f"{G.name or 'group'} is not abelian")
    orders = [G.element_order(a) for a in G.elements()]
    per_prime: dict[int, list[int]] = {}
    for p, top in factorint(G.order).items():
        # rank of G[p^i] minus rank of G[p^(i-1)] = number of factors of order >= p^i
        logs = [0]
        for i in range(1, top + 1):
            count = sum(1 for o in orders if (p**i) % o == 0)
            logs.append(factorint(count).get(p, 0))
        at_least = [logs[i] - logs[i - 1] for i in range(1, top + 1)]
        exps: list[int] = []
        for i in range(top, 0, -1):
            exact = at_least[i - 1] - (at_least[i] if i < top else 0)
            exps.extend([i] * exact)
        per_prime[p] = exps
    width = max((len(v) for v in per_prime.values()), default=0)
    factors = []
    for j in range(width):
        d = 1
        for p, exps in per_prime.items():
            if j < len(exps):
                d *= p ** exps[j]
        factors.append(d)
    return tuple(factors)


_PRODUCT = re.compile(r"^Z/\d+(x\s*Z/\d+)+$")


def preset(name: str) -> FiniteGroup:
    """Resolve ``Z/n``, ``Z/axZ/b[x…]``, ``Sn``, ``An``, ``Dn``, ``Q8`` or ``trivial``."""
    s = name.strip().replace(" ", "").replace("×", "x")
    if s in ("1", "trivial"):
        return cyclic_group(1)
    if re.fullmatch(r"Z/\d+", s):
        n = int(s[2:])
        if n < 1:
            raise UnknownPreset(name)
        return cyclic_group(n)
    if _PRODUCT.match(s):
        factors = [cyclic_group(int(part[2:])) for part in s.split("x")]
        return direct_product(*factors)
    m = re.fullmatch(r"([SAD])(\d+)", s)
    if m:
        kind, k = m.group(1), int(m.group(2))
        if kind == "S" and 1 <= k <= 5:
            return symmetric_group(k)
        if kind == "A" and 1 <= k <= 5:
            return alternating_group(k)
        if kind == "D" and 3 <= k <= 32:
            return dihedral_group(k)
    if s == "Q8":
        return quaternion_group()
    raise UnknownPreset(f"unknown group preset {name!r}")

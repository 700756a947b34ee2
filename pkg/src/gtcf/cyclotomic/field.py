"""Exact arithmetic in ℚ(ζ_n).

Elements are tuples of ``Fraction`` of length φ(n): the little-endian
coefficients of the residue modulo Φ_n. Automorphisms are exponents a with
gcd(a, n) = 1, acting by ζ ↦ ζ^a.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from math import gcd
from typing import Iterable, Sequence

from sympy import Matrix, Rational, divisors, totient

from ..ff import upoly as up

Element = tuple


class Rationals:
    """ℚ as a :class:`~gtcf.ff.field.Field` on ``Fraction`` values."""

    zero = Fraction(0)
    one = Fraction(1)
    characteristic = 0
    order = None

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in Q")
        return 1 / Fraction(a)

    def pow(self, a, m):
        return Fraction(a) ** m

    def from_int(self, n):
        return Fraction(n)

    def is_zero(self, a):
        return a == 0

    def format(self, a) -> str:
        return _format_fraction(Fraction(a))

    def describe(self) -> str:
        return "Q"

    def to_json(self) -> dict:
        return {"field": "Q"}


QQ = Rationals()


def _format_fraction(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


@lru_cache(maxsize=128)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Φ_n as little-endian integer coefficients, from X^n − 1 = ∏_{d|n} Φ_d."""
    if n < 1:
        raise ValueError("n must be positive")
    num = tuple(Fraction(c) for c in [-1] + [0] * (n - 1) + [1])
    for d in divisors(n):
        if d < n:
            num = up.quo(QQ, num, tuple(Fraction(c) for c in cyclotomic_polynomial(int(d))))
    return tuple(int(c) for c in num)


@dataclass(frozen=True, eq=False)
class CycloField:
    n: int

    characteristic = 0
    order = None

    @cached_property
    def modulus(self) -> tuple[int, ...]:
        return cyclotomic_polynomial(self.n)

    @property
    def degree(self) -> int:
        return len(self.modulus) - 1

    @cached_property
    def zero(self) -> Element:
        return (Fraction(0),) * self.degree

    @cached_property
    def one(self) -> Element:
        return self.from_int(1)

    @cached_property
    def gen(self) -> Element:
        """ζ_n."""
        return self.reduce((0, 1))

    def same_as(self, other: object) -> bool:
        return isinstance(other, CycloField) and other.n == self.n

    def reduce(self, coeffs: Sequence) -> Element:
        r = up.mod(QQ, up.trim(QQ, [Fraction(c) for c in coeffs]), self._modulus_q)
        return tuple(r) + (Fraction(0),) * (self.degree - len(r))

    @cached_property
    def _modulus_q(self) -> tuple:
        return tuple(Fraction(c) for c in self.modulus)

    def element(self, coeffs: Iterable) -> Element:
        return self.reduce(list(coeffs))

    def from_int(self, n) -> Element:
        return self.reduce([Fraction(n)])

    def is_zero(self, a: Element) -> bool:
        return all(c == 0 for c in a)

    def add(self, a: Element, b: Element) -> Element:
        return tuple(x + y for x, y in zip(a, b))

    def sub(self, a: Element, b: Element) -> Element:
        return tuple(x - y for x, y in zip(a, b))

    def neg(self, a: Element) -> Element:
        return tuple(-x for x in a)

    def mul(self, a: Element, b: Element) -> Element:
        return self.reduce(up.mul(QQ, up.trim(QQ, a), up.trim(QQ, b)))

    def inv(self, a: Element) -> Element:
        if self.is_zero(a):
            raise ZeroDivisionError(f"inverse of 0 in {self.describe()}")
        return self.reduce(up.invmod(QQ, up.trim(QQ, a), self._modulus_q))

    def pow(self, a: Element, m: int) -> Element:
        if m < 0:
            a, m = self.inv(a), -m
        out, base = self.one, a
        while m:
            if m & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            m >>= 1
        return out

    def zeta_power(self, j: int) -> Element:
        return self._zeta_powers[j % self.n]

    @cached_property
    def _zeta_powers(self) -> tuple[Element, ...]:
        out, x = [], self.one
        for _ in range(self.n):
            out.append(x)
            x = self.mul(x, self.gen)
        return tuple(out)

    def conjugate(self, a: Element, exponent: int) -> Element:
        """Image of ``a`` under ζ ↦ ζ^exponent."""
        out = self.zero
        for i, c in enumerate(a):
            if c:
                out = self.add(out, tuple(c * x for x in self.zeta_power(i * exponent)))
        return out

    def fixed_field(self, exponents: Iterable[int]) -> list[Element]:
        """ℚ-basis of the subfield fixed by ζ ↦ ζ^a for every a in ``exponents``."""
        H = _closure_mod(self.n, exponents)
        orbits: list[Element] = []
        seen: set[int] = set()
        for j in range(self.n):
            if j in seen:
                continue
            orbit = {(j * a) % self.n for a in H}
            seen |= orbit
            total = self.zero
            for i in sorted(orbit):
                total = self.add(total, self.zeta_power(i))
            orbits.append(total)
        M = Matrix([[Rational(c.numerator, c.denominator) for c in v] for v in orbits])
        _, pivots = M.T.rref()
        return [orbits[i] for i in pivots]

    def format(self, a: Element) -> str:
        terms = []
        for i in range(len(a) - 1, -1, -1):
            c = a[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("g" if i == 1 else f"g^{i}")
            if not mono:
                terms.append(_format_fraction(c))
            elif c == 1:
                terms.append(mono)
            else:
                terms.append(f"{_format_fraction(c)}*{mono}")
        if not terms:
            return "0"
        if len(terms) == 1 and "*" not in terms[0] and "/" not in terms[0] and not terms[0].startswith("-"):
            return terms[0]
        return "(" + "+".join(terms) + ")"

    def describe(self) -> str:
        return f"Q(zeta_{self.n})"

    def to_json(self) -> dict:
        return {"cyclotomic": self.n, "degree": self.degree}


def _closure_mod(n: int, exponents: Iterable[int]) -> frozenset[int]:
    gens = {a % n for a in exponents} or {1 % n}
    out = {1 % n}
    frontier = list(out)
    while frontier:
        nxt = []
        for x in frontier:
            for a in gens:
                y = (x * a) % n
                if y not in out:
                    out.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(out)


class ConductorMismatch(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class CycloAut:
    field: CycloField
    a: int

    def __post_init__(self):
        if gcd(self.a, self.field.n) != 1:
            raise ValueError(f"exponent {self.a} is not a unit mod {self.field.n}")

    @property
    def exponent(self) -> int:
        return self.a % self.field.n

    def __call__(self, x: Element) -> Element:
        return self.field.conjugate(x, self.a)

    def compose(self, other: CycloAut) -> CycloAut:
        if other.field.n != self.field.n:
            raise ConductorMismatch("automorphisms of different cyclotomic fields")
        return CycloAut(self.field, (self.a * other.a) % self.field.n)

    def is_identity(self) -> bool:
        return self.exponent == 1 % self.field.n

    def to_json(self) -> dict:
        return {"exponent": self.exponent}


def euler_phi(n: int) -> int:
    return int(totient(n))


def cyclo_field(n: int) -> CycloField:
    return _cyclo_field(n)


@lru_cache(maxsize=64)
def _cyclo_field(n: int) -> CycloField:
    if n < 1:
        raise ValueError("conductor must be positive")
    return CycloField(n)

"""Supernatural numbers ∏ p^(e_p), e_p ∈ ℕ ∪ {∞}.

Stored as the finitely many primes whose exponent differs from a default
``rest`` exponent (0 or ∞) shared by every other prime.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import inf
from typing import Mapping, Union

from sympy import factorint, isprime

from ..ff.field import prime_power

Exponent = Union[int, float]


def _exp_text(e: Exponent) -> str:
    return "inf" if e == inf else str(int(e))


@dataclass(frozen=True)
class SupernaturalNumber:
    entries: tuple[tuple[int, Exponent], ...] = ()
    rest: Exponent = 0

    def __post_init__(self):
        if self.rest not in (0, inf):
            raise ValueError("the default exponent must be 0 or inf")
        clean = {}
        for p, e in self.entries:
            if not isprime(p):
                raise ValueError(f"{p} is not prime")
            if e != inf and (e < 0 or int(e) != e):
                raise ValueError(f"bad exponent {e} at {p}")
            if e != self.rest:
                clean[int(p)] = e if e == inf else int(e)
        object.__setattr__(self, "entries", tuple(sorted(clean.items())))

    @classmethod
    def of(cls, exponents: Mapping[int, Exponent], rest: Exponent = 0) -> SupernaturalNumber:
        return cls(tuple(exponents.items()), rest)

    @classmethod
    def from_int(cls, n: int) -> SupernaturalNumber:
        if n < 1:
            raise ValueError("n must be positive")
        return cls.of({int(p): int(e) for p, e in factorint(n).items()})

    def exponent(self, p: int) -> Exponent:
        return dict(self.entries).get(p, self.rest)

    @property
    def is_finite(self) -> bool:
        return self.rest == 0 and all(e != inf for _, e in self.entries)

    def value(self) -> int:
        if not self.is_finite:
            raise ValueError(f"{self} is infinite")
        out = 1
        for p, e in self.entries:
            out *= p**e
        return out

    def _primes(self, other: SupernaturalNumber) -> set[int]:
        return {p for p, _ in self.entries} | {p for p, _ in other.entries}

    def _combine(self, other: SupernaturalNumber, op) -> SupernaturalNumber:
        primes = self._primes(other)
        return SupernaturalNumber.of(
            {p: op(self.exponent(p), other.exponent(p)) for p in primes}, op(self.rest, other.rest)
        )

    def __mul__(self, other: Union[SupernaturalNumber, int]) -> SupernaturalNumber:
        if isinstance(other, int):
            other = SupernaturalNumber.from_int(other)
        return self._combine(other, lambda a, b: a + b)

    __rmul__ = __mul__

    def lcm(self, other: SupernaturalNumber) -> SupernaturalNumber:
        return self._combine(other, max)

    def gcd(self, other: SupernaturalNumber) -> SupernaturalNumber:
        return self._combine(other, min)

    def divides(self, other: SupernaturalNumber) -> bool:
        if self.rest > other.rest:
            return False
        return all(self.exponent(p) <= other.exponent(p) for p in self._primes(other))

    def __str__(self) -> str:
        parts = [f"{p}^{_exp_text(e)}" for p, e in self.entries]
        if self.rest == inf:
            parts.append("rest^inf")
        return " · ".join(parts) if parts else "1"

    def to_json(self) -> dict:
        return {
            "primes": {str(p): _exp_text(e) for p, e in self.entries},
            "rest": _exp_text(self.rest),
            "text": str(self),
        }


def _check(q: int, n: int) -> None:
    prime_power(q)
    if n < 1:
        raise ValueError("n must be positive")


def closure_degree(q: int, n: int) -> SupernaturalNumber:
    """Degree over F_q of the fixed field of ∏_{p|n} p^(v_p(n)) ℤ_p: p^(v_p(n)) for p | n, ∞ elsewhere."""
    _check(q, n)
    return SupernaturalNumber.of({int(p): int(e) for p, e in factorint(n).items()}, inf)


def constants_degree(q: int, n: int) -> SupernaturalNumber:
    """Degree over F_q of the constants of the closure: 0 at p | n, ∞ elsewhere."""
    _check(q, n)
    return SupernaturalNumber.of({int(p): 0 for p in factorint(n)}, inf)

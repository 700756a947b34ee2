"""Exact finite fields F_{p^k}.

Elements are ints in ``range(p**k)``: the base-p digits of an element are the
little-endian coefficients of its residue modulo the defining polynomial, so
for p = 2 an element is the packed bit vector of its coefficients and the
prime field is ``range(p)``. Fields of at most ``ff.table_bound`` elements
multiply through log/antilog tables.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Any, Iterable, Optional, Protocol, Sequence

from sympy import factorint, isprime
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_irreducible_p

from ..config.runtime_config import current_config

logger = logging.getLogger(__name__)


class NotPrime(ValueError):
    pass


class TooLarge(ValueError):
    """Raised when p or p^k is beyond the configured bounds."""


class FieldMismatch(ValueError):
    """Raised when elements or polynomials of different fields are combined."""


class Field(Protocol):
    """Arithmetic interface shared by finite fields and cyclotomic fields."""

    zero: Any
    one: Any

    @property
    def characteristic(self) -> int: ...

    @property
    def order(self) -> Optional[int]: ...

    def add(self, a: Any, b: Any) -> Any: ...

    def sub(self, a: Any, b: Any) -> Any: ...

    def neg(self, a: Any) -> Any: ...

    def mul(self, a: Any, b: Any) -> Any: ...

    def inv(self, a: Any) -> Any: ...

    def pow(self, a: Any, m: int) -> Any: ...

    def from_int(self, n: int) -> Any: ...

    def is_zero(self, a: Any) -> bool: ...

    def describe(self) -> str: ...

    def to_json(self) -> dict: ...


def _is_irreducible_over_prime(p: int, modulus: Sequence[int]) -> bool:
    return bool(gf_irreducible_p([int(c) for c in reversed(modulus)], p, ZZ))


@dataclass(frozen=True, eq=False)
class ExtField:
    p: int
    k: int
    modulus: tuple[int, ...]

    zero = 0
    one = 1

    def __reduce__(self):
        # worker processes rebuild through the cache
        return (_rebuild, (self.p, self.modulus))

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def order(self) -> int:
        return self.p**self.k

    @property
    def gen(self) -> int:
        """Residue class of X."""
        if self.k > 1:
            return self.p
        return (-self.modulus[0]) % self.p

    def same_as(self, other: object) -> bool:
        return isinstance(other, ExtField) and other.p == self.p and other.modulus == self.modulus

    def check(self, other: object) -> None:
        if other is not self and not self.same_as(other):
            raise FieldMismatch(f"{self.describe()} vs {getattr(other, 'describe', lambda: other)()}")

    def elements(self) -> range:
        return range(self.order)

    def digits(self, a: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.k):
            a, d = divmod(a, self.p)
            out.append(d)
        return tuple(out)

    def from_digits(self, ds: Iterable[int]) -> int:
        out, scale = 0, 1
        for d in ds:
            out += (d % self.p) * scale
            scale *= self.p
        return out

    def from_int(self, n: int) -> int:
        return n % self.p

    def is_zero(self, a: int) -> bool:
        return a == 0

    # additive structure

    def add(self, a: int, b: int) -> int:
        p = self.p
        if p == 2:
            return a ^ b
        if self.k == 1:
            return (a + b) % p
        out, scale = 0, 1
        while a or b:
            a, x = divmod(a, p)
            b, y = divmod(b, p)
            out += ((x + y) % p) * scale
            scale *= p
        return out

    def neg(self, a: int) -> int:
        p = self.p
        if p == 2:
            return a
        if self.k == 1:
            return (-a) % p
        out, scale = 0, 1
        while a:
            a, x = divmod(a, p)
            out += ((-x) % p) * scale
            scale *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def scale_int(self, c: int, a: int) -> int:
        """``c·a`` for an integer ``c``."""
        return self.mul(c % self.p, a)

    # multiplicative structure

    @cached_property
    def _tables(self) -> Optional[tuple[list[int], list[int]]]:
        q = self.order
        if q > current_config().ff.table_bound or q == 2:
            return None
        g = self.primitive_element
        exp = [1] * (2 * (q - 1))
        log = [-1] * q
        x = 1
        for i in range(q - 1):
            exp[i] = x
            log[x] = i
            x = self._mul_slow(x, g)
        for i in range(q - 1, 2 * (q - 1)):
            exp[i] = exp[i - (q - 1)]
        return log, exp

    @cached_property
    def _mask(self) -> int:
        return sum(1 << i for i, c in enumerate(self.modulus) if c)

    def _mul_slow(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a * b) % self.p
        if self.p == 2:
            k, mask = self.k, self._mask
            r = 0
            while b:
                if b & 1:
                    r ^= a
                b >>= 1
                a <<= 1
                if (a >> k) & 1:
                    a ^= mask
            return r
        p, k, m = self.p, self.k, self.modulus
        x, y = self.digits(a), self.digits(b)
        prod = [0] * (2 * k - 1)
        for i, xi in enumerate(x):
            if xi:
                for j, yj in enumerate(y):
                    if yj:
                        prod[i + j] = (prod[i + j] + xi * yj) % p
        for d in range(2 * k - 2, k - 1, -1):
            c = prod[d]
            if c:
                for i in range(k):
                    prod[d - k + i] = (prod[d - k + i] - c * m[i]) % p
                prod[d] = 0
        return self.from_digits(prod[:k])

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        t = self._tables
        if t is not None:
            log, exp = t
            return exp[log[a] + log[b]]
        return self._mul_slow(a, b)

    def pow(self, a: int, m: int) -> int:
        if m < 0:
            a, m = self.inv(a), -m
        if a == 0:
            return 1 if m == 0 else 0
        t = self._tables
        if t is not None:
            log, exp = t
            return exp[(log[a] * m) % (self.order - 1)]
        if self.k == 1:
            return pow(a, m, self.p)
        out, base = 1, a
        while m:
            if m & 1:
                out = self._mul_slow(out, base)
            base = self._mul_slow(base, base)
            m >>= 1
        return out

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError(f"inverse of 0 in {self.describe()}")
        t = self._tables
        if t is not None:
            log, exp = t
            return exp[(self.order - 1 - log[a]) % (self.order - 1)]
        if self.k == 1:
            return pow(a, -1, self.p)
        return self.pow(a, self.order - 2)

    def frobenius(self, a: int, r: int = 1) -> int:
        """``a^(p^r)`` with ``r`` taken mod k."""
        r %= self.k
        for _ in range(r):
            a = self.pow(a, self.p)
        return a

    @cached_property
    def primitive_element(self) -> int:
        """Smallest element generating the multiplicative group."""
        q = self.order
        if q == 2:
            return 1
        primes = list(factorint(q - 1))
        for a in range(1, q):
            if all(self._pow_slow(a, (q - 1) // l) != 1 for l in primes):
                return a
        raise RuntimeError(f"no primitive element in {self.describe()}")

    def _pow_slow(self, a: int, m: int) -> int:
        out, base = 1, a
        while m:
            if m & 1:
                out = self._mul_slow(out, base)
            base = self._mul_slow(base, base)
            m >>= 1
        return out

    def element_order(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no multiplicative order")
        n = self.order - 1
        for l, e in factorint(n).items():
            for _ in range(e):
                if self.pow(a, n // l) == 1:
                    n //= l
                else:
                    break
        return n

    def format(self, a: int) -> str:
        """Grammar text of an element: an integer, or a sum of ``c*g^i`` in parentheses."""
        if a < self.p:
            return str(a)
        terms = []
        for i, c in reversed(list(enumerate(self.digits(a)))):
            if not c:
                continue
            mono = "" if i == 0 else ("g" if i == 1 else f"g^{i}")
            terms.append(str(c) if not mono else (mono if c == 1 else f"{c}*{mono}"))
        return terms[0] if len(terms) == 1 and "*" not in terms[0] else "(" + "+".join(terms) + ")"

    def describe(self) -> str:
        return f"GF({self.p}^{self.k})" if self.k > 1 else f"GF({self.p})"

    def to_json(self) -> dict:
        return {"p": self.p, "k": self.k, "modulus": list(self.modulus)}

    def __repr__(self) -> str:
        return f"ExtField({self.describe()}, modulus={list(self.modulus)})"


def _rebuild(p: int, modulus: tuple[int, ...]) -> ExtField:
    F = make_field(p, len(modulus) - 1)
    return F if F.modulus == tuple(modulus) else field_with_modulus(p, modulus)


def _check_bounds(p: int, k: int, magnitude_bound: Optional[int]) -> None:
    if k < 1:
        raise ValueError(f"degree must be >= 1, got {k}")
    if not isprime(p):
        raise NotPrime(f"{p} is not prime")
    cfg = current_config().ff
    if p > cfg.max_characteristic:
        raise TooLarge(f"characteristic {p} exceeds {cfg.max_characteristic}")
    bound = cfg.magnitude_bound if magnitude_bound is None else magnitude_bound
    if p**k > bound:
        raise TooLarge(f"{p}^{k} exceeds magnitude bound {bound}")


@lru_cache(maxsize=256)
def _canonical_field(p: int, k: int) -> ExtField:
    if k == 1:
        return ExtField(p, 1, (0, 1))
    for m in range(p**k):
        # m walks the non-leading coefficients in lexicographic order, top coefficient first
        low = []
        r = m
        for _ in range(k):
            r, d = divmod(r, p)
            low.append(d)
        if low[0] == 0:
            continue
        modulus = tuple(low) + (1,)
        if _is_irreducible_over_prime(p, modulus):
            logger.debug("defining polynomial for GF(%d^%d): %s", p, k, modulus)
            return ExtField(p, k, modulus)
    raise RuntimeError(f"no irreducible polynomial of degree {k} over GF({p})")


def make_field(p: int, k: int = 1, magnitude_bound: Optional[int] = None) -> ExtField:
    """F_{p^k} defined by the lexicographically smallest monic irreducible of degree k."""
    _check_bounds(p, k, magnitude_bound)
    return _canonical_field(p, k)


def field_with_modulus(p: int, modulus: Sequence[int]) -> ExtField:
    """Field defined by a caller-supplied monic irreducible (little-endian)."""
    modulus = tuple(int(c) % p for c in modulus)
    k = len(modulus) - 1
    _check_bounds(p, k, None)
    if modulus[-1] != 1:
        raise ValueError("defining polynomial must be monic")
    if not _is_irreducible_over_prime(p, modulus):
        raise ValueError(f"{list(modulus)} is not irreducible over GF({p})")
    canonical = _canonical_field(p, k)
    return canonical if canonical.modulus == modulus else ExtField(p, k, modulus)


def frobenius(F: ExtField, x: int, r: int = 1) -> int:
    return F.frobenius(x, r)


@dataclass(frozen=True, eq=False)
class FrobeniusPower:
    """The automorphism x ↦ x^(p^s) of a finite field."""

    field: ExtField
    s: int

    @property
    def exponent(self) -> int:
        return self.s % self.field.k

    def __call__(self, x: int) -> int:
        return self.field.frobenius(x, self.s)

    def compose(self, other: FrobeniusPower) -> FrobeniusPower:
        return FrobeniusPower(self.field, (self.s + other.s) % self.field.k)

    def is_identity(self) -> bool:
        return self.exponent == 0

    def to_json(self) -> dict:
        return {"frobenius": self.exponent}


def prime_power(q: int) -> tuple[int, int]:
    """Split ``q = p^k``; raises :class:`NotPrime` when q is not a prime power."""
    f = factorint(q)
    if len(f) != 1:
        raise NotPrime(f"{q} is not a prime power")
    ((p, k),) = f.items()
    return int(p), int(k)

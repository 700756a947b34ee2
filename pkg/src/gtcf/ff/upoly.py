"""Dense univariate polynomials over a field.

A polynomial is a tuple of field elements, little-endian by degree, with no
trailing zeros; ``()`` is the zero polynomial. Functions take the field first
and only use the :class:`~gtcf.ff.field.Field` interface.
"""

from __future__ import annotations

from typing import Any, Sequence

from .field import Field

UPoly = tuple


class ZeroPolynomial(ValueError):
    pass


def trim(F: Field, a: Sequence[Any]) -> UPoly:
    a = list(a)
    while a and F.is_zero(a[-1]):
        a.pop()
    return tuple(a)


def deg(a: UPoly) -> int:
    return len(a) - 1


def const(F: Field, c: Any) -> UPoly:
    return trim(F, (c,))


def x(F: Field) -> UPoly:
    return (F.zero, F.one)


def monomial(F: Field, c: Any, d: int) -> UPoly:
    return trim(F, (F.zero,) * d + (c,))


def add(F: Field, a: UPoly, b: UPoly) -> UPoly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = F.add(out[i], c)
    return trim(F, out)


def neg(F: Field, a: UPoly) -> UPoly:
    return tuple(F.neg(c) for c in a)


def sub(F: Field, a: UPoly, b: UPoly) -> UPoly:
    return add(F, a, neg(F, b))


def scale(F: Field, c: Any, a: UPoly) -> UPoly:
    if F.is_zero(c):
        return ()
    return trim(F, [F.mul(c, t) for t in a])


def mul(F: Field, a: UPoly, b: UPoly) -> UPoly:
    if not a or not b:
        return ()
    out = [F.zero] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if F.is_zero(ai):
            continue
        for j, bj in enumerate(b):
            if not F.is_zero(bj):
                out[i + j] = F.add(out[i + j], F.mul(ai, bj))
    return trim(F, out)


def divmod_(F: Field, a: UPoly, b: UPoly) -> tuple[UPoly, UPoly]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    db = deg(b)
    if len(r) <= db:
        return (), trim(F, r)
    inv_lc = F.inv(b[-1])
    q = [F.zero] * (len(r) - db)
    for i in range(len(r) - 1, db - 1, -1):
        c = r[i]
        if F.is_zero(c):
            continue
        c = F.mul(c, inv_lc)
        q[i - db] = c
        for j in range(db + 1):
            r[i - db + j] = F.sub(r[i - db + j], F.mul(c, b[j]))
    return trim(F, q), trim(F, r[:db])


def mod(F: Field, a: UPoly, b: UPoly) -> UPoly:
    return divmod_(F, a, b)[1]


def quo(F: Field, a: UPoly, b: UPoly) -> UPoly:
    return divmod_(F, a, b)[0]


def monic(F: Field, a: UPoly) -> UPoly:
    if not a:
        return a
    return scale(F, F.inv(a[-1]), a)


def gcd(F: Field, a: UPoly, b: UPoly) -> UPoly:
    while b:
        a, b = b, mod(F, a, b)
    return monic(F, a)


def gcdext(F: Field, a: UPoly, b: UPoly) -> tuple[UPoly, UPoly, UPoly]:
    """Monic ``g`` with ``s·a + t·b = g``."""
    r0, r1 = a, b
    s0, s1 = const(F, F.one), ()
    t0, t1 = (), const(F, F.one)
    while r1:
        q, r = divmod_(F, r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(F, s0, mul(F, q, s1))
        t0, t1 = t1, sub(F, t0, mul(F, q, t1))
    if not r0:
        return r0, s0, t0
    inv = F.inv(r0[-1])
    return scale(F, inv, r0), scale(F, inv, s0), scale(F, inv, t0)


def invmod(F: Field, a: UPoly, m: UPoly) -> UPoly:
    g, s, _ = gcdext(F, a, m)
    if g != const(F, F.one):
        raise ZeroDivisionError("not invertible modulo m")
    return mod(F, s, m)


def powmod(F: Field, a: UPoly, e: int, m: UPoly) -> UPoly:
    out = mod(F, const(F, F.one), m)
    base = mod(F, a, m)
    while e:
        if e & 1:
            out = mod(F, mul(F, out, base), m)
        base = mod(F, mul(F, base, base), m)
        e >>= 1
    return out


def derivative(F: Field, a: UPoly) -> UPoly:
    return trim(F, [F.mul(F.from_int(i), a[i]) for i in range(1, len(a))])


def evaluate(F: Field, a: UPoly, x0: Any) -> Any:
    out = F.zero
    for c in reversed(a):
        out = F.add(F.mul(out, x0), c)
    return out


def sort_key(a: UPoly) -> tuple:
    """Degree first, then coefficients from the top down."""
    return (len(a), tuple(reversed(a)))


def to_text(F: Field, a: UPoly, var: str = "X") -> str:
    if not a:
        return "0"
    fmt = getattr(F, "format", str)
    parts = []
    for d in range(len(a) - 1, -1, -1):
        c = a[d]
        if F.is_zero(c):
            continue
        mono = "" if d == 0 else (var if d == 1 else f"{var}^{d}")
        coeff = fmt(c)
        if not mono:
            term = coeff
        elif c == F.one:
            term = mono
        else:
            term = f"{coeff}*{mono}"
        parts.append(term)
    return "+".join(parts)

"""Solvability of x·x̄ = r in ℚ(i), i.e. r = a² + b² over the rationals."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt
from typing import Optional

from sympy import factorint
from sympy.ntheory import sqrt_mod

SOLVABLE = "Solvable"
UNSOLVABLE = "Unsolvable"


@dataclass(frozen=True)
class NormVerdict:
    r: Fraction
    status: str
    witness: Optional[tuple[Fraction, Fraction]] = None
    certificate: dict = field(default_factory=dict)

    @property
    def solvable(self) -> bool:
        return self.status == SOLVABLE

    def to_json(self) -> dict:
        out: dict = {"r": self.r, "status": self.status}
        if self.witness is not None:
            out["witness"] = list(self.witness)
        if self.certificate:
            out["certificate"] = self.certificate
        return out


def _prime_as_two_squares(p: int) -> tuple[int, int]:
    """p ≡ 1 (mod 4) as u² + v² (Hermite–Serret)."""
    x = sqrt_mod(p - 1, p)
    a, b = p, x
    limit = isqrt(p)
    while b > limit:
        a, b = b, a % b
    u = b
    v = isqrt(p - u * u)
    if u * u + v * v != p:
        raise RuntimeError(f"Hermite-Serret descent failed for {p}")
    return u, v


def _gaussian_mul(z: tuple[int, int], w: tuple[int, int]) -> tuple[int, int]:
    return z[0] * w[0] - z[1] * w[1], z[0] * w[1] + z[1] * w[0]


def two_squares(M: int) -> Optional[tuple[int, int]]:
    """Nonnegative (x, y), x ≤ y, with x² + y² = M, or None."""
    if M < 0:
        return None
    if M == 0:
        return 0, 0
    z = (1, 0)
    for p, e in factorint(M).items():
        if p == 2:
            for _ in range(e):
                z = _gaussian_mul(z, (1, 1))
        elif p % 4 == 1:
            g = _prime_as_two_squares(p)
            for _ in range(e):
                z = _gaussian_mul(z, g)
        else:
            if e % 2:
                return None
            z = (z[0] * p ** (e // 2), z[1] * p ** (e // 2))
    x, y = sorted((abs(z[0]), abs(z[1])))
    return x, y


def norm_solvable(r: Fraction | int | str) -> NormVerdict:
    r = Fraction(r)
    if r < 0:
        return NormVerdict(r, UNSOLVABLE, certificate={"kind": "sign", "reason": "norms are sums of squares, hence >= 0"})
    if r == 0:
        return NormVerdict(r, SOLVABLE, witness=(Fraction(0), Fraction(0)))
    N, D = r.numerator, r.denominator
    for p, e in sorted(factorint(N * D).items()):
        if p % 4 == 3 and e % 2:
            return NormVerdict(
                r,
                UNSOLVABLE,
                certificate={"kind": "two_squares", "prime": p, "exponent": e, "of": N * D},
            )
    xy = two_squares(N * D)
    if xy is None:
        raise RuntimeError(f"{N * D} passed the prime test but is not a sum of two squares")
    a, b = Fraction(xy[0], D), Fraction(xy[1], D)
    if a * a + b * b != r:
        raise RuntimeError(f"witness for {r} failed to verify")
    return NormVerdict(r, SOLVABLE, witness=(a, b))

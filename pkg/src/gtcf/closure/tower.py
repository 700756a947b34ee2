"""Finite stages of the ℤ/n-closure of F_q.

Level L has constants C_L = F_{q^t} and carrier K_L = F_{q^(n·t)} with
t = t_L coprime to n. The generator of ℤ/n acts on K_L as x ↦ x^(q^(t·u))
where u·t ≡ 1 (mod n): the Frobenius power that is 1 mod n and 0 mod t, so
restriction from level L+1 to level L sends generator to generator. It
generates the same group as x ↦ x^(q^t).
"""

from __future__ import annotations

import logging
import threading
from dataclasses import dataclass
from functools import cached_property
from math import gcd
from typing import Callable, Optional, Sequence, Union

from sympy import factorint, nextprime

from ..config.runtime_config import current_config
from ..ff import upoly as up
from ..ff.embedding import Embedding, embed, lift_through
from ..ff.factor import irreducible_polynomials, is_irreducible
from ..ff.field import ExtField, TooLarge, make_field, prime_power
from ..groebner.buchberger import BudgetExceeded
from ..groups.frattini import TruncationTooSmall
from ..gtf.field import GTransformalField
from .supernatural import SupernaturalNumber, closure_degree, constants_degree

logger = logging.getLogger(__name__)


class InvalidSchedule(ValueError):
    pass


def default_schedule(n: int) -> Callable[[int], int]:
    """t_L = (product of the first L primes not dividing n)^L; t_0 = 1."""

    def t(level: int) -> int:
        primes, p = [], 1
        while len(primes) < level:
            p = nextprime(p)
            if n % p:
                primes.append(p)
        out = 1
        for p in primes:
            out *= p**level
        return out

    return t


@dataclass(frozen=True, eq=False)
class Level:
    index: int
    t: int
    n: int
    base: ExtField
    constants: ExtField
    carrier: ExtField
    field: GTransformalField
    iota: Embedding

    @property
    def generator_exponent(self) -> int:
        """s with σ_generator = x ↦ x^(p^s)."""
        return self.field.exponents[1] if self.n > 1 else 0

    @property
    def action_order(self) -> int:
        """Order of the generator acting on K_L."""
        deg = self.carrier.k
        return deg // gcd(self.generator_exponent, deg) if self.n > 1 else 1

    def to_json(self) -> dict:
        return {
            "level": self.index,
            "t": self.t,
            "constants": self.constants.describe(),
            "field": self.carrier.describe(),
            "degree_over_constants": self.field.constants_degree,
            "strict": self.field.is_strict(),
            "generator_frobenius_exponent": self.generator_exponent,
            "action_order": self.action_order,
        }


class ClosureTower:
    def __init__(
        self,
        q: int,
        n: int,
        schedule: Optional[Union[Sequence[int], Callable[[int], int]]] = None,
        max_levels: Optional[int] = None,
    ):
        self.p, self.k = prime_power(q)
        if n < 1:
            raise ValueError("n must be positive")
        self.q, self.n = q, n
        cfg = current_config().closure
        self.max_levels = cfg.max_levels if max_levels is None else max_levels
        if schedule is None:
            self._t = default_schedule(n)
            self._explicit: Optional[tuple[int, ...]] = None
        elif callable(schedule):
            self._t = schedule
            self._explicit = None
        else:
            self._explicit = tuple(int(t) for t in schedule)
            self._t = lambda level: self._explicit[level]
        self._levels: dict[int, Level] = {}
        self._steps: dict[int, tuple[Embedding, Embedding]] = {}
        self._lock = threading.Lock()

    @cached_property
    def base(self) -> ExtField:
        return make_field(self.p, self.k)

    def schedule(self, upto: int) -> list[int]:
        return [self.t(level) for level in range(upto + 1)]

    def t(self, level: int) -> int:
        if level < 0:
            raise InvalidSchedule("levels start at 0")
        if self._explicit is not None and level >= len(self._explicit):
            raise BudgetExceeded(f"schedule has {len(self._explicit)} levels")
        t = int(self._t(level))
        if t < 1 or gcd(t, self.n) != 1:
            raise InvalidSchedule(f"t_{level} = {t} is not coprime to n = {self.n}")
        if level > 0 and t % self.t(level - 1):
            raise InvalidSchedule(f"t_{level - 1} does not divide t_{level}")
        return t

    @property
    def closure_degree(self) -> SupernaturalNumber:
        return closure_degree(self.q, self.n)

    @property
    def constants_degree(self) -> SupernaturalNumber:
        return constants_degree(self.q, self.n)

    def level_field(self, level: int) -> Level:
        with self._lock:
            return self._level(level)

    def _level(self, level: int) -> Level:
        if level in self._levels:
            return self._levels[level]
        if level > self.max_levels:
            raise BudgetExceeded(f"level {level} beyond max_levels={self.max_levels}")
        t = self.t(level)
        try:
            C = make_field(self.p, self.k * t)
            K = make_field(self.p, self.k * self.n * t)
        except TooLarge as exc:
            raise BudgetExceeded(f"level {level} (t={t}) is too large: {exc}") from exc
        u = pow(t, -1, self.n) if self.n > 1 else 0
        step = self.k * t * u
        Kσ = GTransformalField.cyclic_frobenius(K, self.n, step, name=f"level {level}")
        iota = embed(C, K)
        lv = Level(level, t, self.n, self.base, C, K, Kσ, iota)
        if not Kσ.is_strict() or Kσ.constants()[0].k != C.k:
            raise RuntimeError(f"level {level} is not strict over {C.describe()}")
        self._levels[level] = lv
        logger.info("closure tower q=%d n=%d: level %d is %s over %s", self.q, self.n, level, K.describe(), C.describe())
        return lv

    def step_embeddings(self, level: int) -> tuple[Embedding, Embedding]:
        """K_L → K_{L+1} and the induced C_L → C_{L+1}, forming a commuting square."""
        with self._lock:
            if level not in self._steps:
                a, b = self._level(level), self._level(level + 1)
                iK = embed(a.carrier, b.carrier)
                iC = lift_through(iK.compose(a.iota), b.iota)
                self._steps[level] = (iK, iC)
            return self._steps[level]

    def computed_levels(self) -> list[int]:
        return sorted(self._levels)

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "n": self.n,
            "schedule": [self._levels[i].t for i in self.computed_levels()],
            "levels": [self._levels[i].to_json() for i in self.computed_levels()],
            "closure_degree": self.closure_degree.to_json(),
            "constants_degree": self.constants_degree.to_json(),
        }


def level_field(T: ClosureTower, level: int) -> Level:
    return T.level_field(level)


@dataclass(frozen=True)
class LevelProbe:
    level: int
    degree: int
    poly: str
    irreducible_over_K: bool
    method: str

    def to_json(self) -> dict:
        return {
            "level": self.level,
            "degree": self.degree,
            "poly": self.poly,
            "irreducible_over_K": self.irreducible_over_K,
            "method": self.method,
        }


def level_probe(T: ClosureTower, level: int, factor_cap: int = 2**16) -> LevelProbe:
    """A degree-ℓ irreducible over F_q, ℓ the least prime ∤ n·t_L; it stays irreducible over K_L."""
    lv = T.level_field(level)
    m = T.n * lv.t
    ell = 2
    while m % ell == 0:
        ell = nextprime(ell)
    F = T.base
    f = next(irreducible_polynomials(F, ell))
    K = lv.carrier
    if K.order <= factor_cap**2:
        iF = embed(F, K)
        ok = is_irreducible(K, tuple(iF(c) for c in f))
        method = "factorization"
    else:
        # an irreducible of degree ℓ over F_q stays irreducible over F_(q^m) iff gcd(ℓ, m) = 1
        ok = gcd(ell, m) == 1
        method = "degree"
    return LevelProbe(level, ell, up.to_text(F, f), ok, method)


def closure_kernel_truncation(n: int, k: int) -> tuple[int, ...]:
    """Cyclic orders of ∏_{p|n} p^(v_p(n)) ℤ_p taken mod p^k: one ℤ/p^(k − v_p(n)) per prime."""
    valuations = dict(sorted(factorint(n).items()))
    if valuations and k < max(valuations.values()):
        raise TruncationTooSmall(f"k={k} below max valuation {max(valuations.values())} of {n}")
    return tuple(int(p) ** (k - a) for p, a in valuations.items())

"""Bounded-degree G-closedness certification along a closure tower.

Every monic f over C_{L0} of degree 2..D that is irreducible over K_{L0}
must become reducible over some later K_{L′}. Splitting is decided by
factoring when the level field can be built, otherwise by degree arithmetic:
an irreducible of degree d over C_{L0} splits over K_{L′} exactly when
gcd(d, n·t_{L′}/t_{L0}) > 1.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from math import gcd
from typing import Optional

from tqdm import tqdm

from ..config.runtime_config import current_config
from ..ff import upoly as up
from ..ff.embedding import embed
from ..ff.factor import is_irreducible, monic_polynomials
from ..ff.field import ExtField
from ..groebner.buchberger import BudgetExceeded
from .tower import ClosureTower, InvalidSchedule

logger = logging.getLogger(__name__)

PASS = "Pass"
FAIL = "Fail"


class CapExceeded(ValueError):
    pass


@dataclass(frozen=True)
class CertRow:
    poly: str
    degree: int
    first_split: Optional[int]
    method: str = ""

    def to_json(self) -> dict:
        return {"poly": self.poly, "degree": self.degree, "first_split": self.first_split, "method": self.method}


@dataclass(frozen=True)
class Certification:
    q: int
    n: int
    base_level: int
    degree_bound: int
    level_budget: int
    rows: tuple[CertRow, ...] = field(default=())
    checked: int = 0
    sampled: bool = False
    seed: int = 0

    @property
    def survivors(self) -> list[str]:
        return [r.poly for r in self.rows if r.first_split is None]

    @property
    def status(self) -> str:
        return FAIL if self.survivors else PASS

    def first_split(self, poly: str) -> Optional[int]:
        for r in self.rows:
            if r.poly == poly:
                return r.first_split
        raise KeyError(poly)

    def to_json(self) -> dict:
        out = {
            "q": self.q,
            "n": self.n,
            "base_level": self.base_level,
            "degree_bound": self.degree_bound,
            "level_budget": self.level_budget,
            "status": self.status,
            "checked": self.checked,
            "rows": [r.to_json() for r in self.rows],
            "survivors": self.survivors,
        }
        if self.sampled:
            out["sampled"] = True
            out["seed"] = self.seed
        return out


def _candidates(C: ExtField, D: int, cap: int, sample: int, rng: random.Random):
    """(poly, sampled) over degrees 2..D."""
    q = C.order
    exhaustive = q ** (D + 1) <= cap
    for d in range(2, D + 1):
        if exhaustive:
            for f in monic_polynomials(C, d):
                yield f
        else:
            seen = set()
            for _ in range(sample):
                f = tuple(rng.randrange(q) for _ in range(d)) + (C.one,)
                if f not in seen:
                    seen.add(f)
                    yield f


def _splits_at(T: ClosureTower, f: tuple, C0: ExtField, t0: int, level: int) -> tuple[bool, str]:
    try:
        lv = T.level_field(level)
    except BudgetExceeded:
        d = up.deg(f)
        return gcd(d, T.n * T.t(level) // t0) > 1, "degree"
    iota = embed(C0, lv.carrier)
    return not is_irreducible(lv.carrier, tuple(iota(c) for c in f)), "factorization"


def certify_gclosed(
    T: ClosureTower,
    degree_bound: int,
    level_budget: Optional[int] = None,
    base_level: int = 0,
    seed: int = 0,
    progress: bool = False,
) -> Certification:
    cfg = current_config().closure
    budget = cfg.level_budget if level_budget is None else level_budget
    if degree_bound > cfg.max_certify_degree:
        raise CapExceeded(f"degree bound {degree_bound} exceeds {cfg.max_certify_degree}")
    if budget > cfg.max_levels:
        raise CapExceeded(f"level budget {budget} exceeds {cfg.max_levels}")
    if degree_bound < 2:
        return Certification(T.q, T.n, base_level, degree_bound, budget)

    lv0 = T.level_field(base_level)
    C0, K0, t0 = lv0.constants, lv0.carrier, lv0.t
    iota0 = lv0.iota
    rng = random.Random(seed)
    sampled = C0.order ** (degree_bound + 1) > cfg.exhaustive_cap
    rows, checked = [], 0
    for f in tqdm(
        list(_candidates(C0, degree_bound, cfg.exhaustive_cap, cfg.sample_size, rng)),
        desc="certify",
        disable=not progress,
        leave=False,
    ):
        checked += 1
        if not is_irreducible(C0, f):
            continue
        if not is_irreducible(K0, tuple(iota0(c) for c in f)):
            continue
        first, method = None, ""
        for level in range(base_level + 1, budget + 1):
            try:
                split, how = _splits_at(T, f, C0, t0, level)
            except (BudgetExceeded, InvalidSchedule):
                break
            if split:
                first, method = level, how
                break
        rows.append(CertRow(up.to_text(C0, f), up.deg(f), first, method))
    cert = Certification(T.q, T.n, base_level, degree_bound, budget, tuple(rows), checked, sampled, seed)
    logger.info(
        "certify q=%d n=%d D=%d: %d candidates irreducible over K, %d survivors",
        T.q, T.n, degree_bound, len(rows), len(cert.survivors),
    )
    return cert

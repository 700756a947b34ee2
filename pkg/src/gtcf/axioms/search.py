"""Witness search for axiom instances over finite carriers.

Points a ∈ K^n are enumerated by rank: a is read as a base-q numeral with
a_1 the most significant digit and each coordinate's own rank as its digit
value. A rank r is a witness when σ̄(a) = (σ_1(a), …, σ_e(a)) is a zero of
every generator of I and a non-zero of some generator of J. Contiguous rank
ranges go to worker processes; the merged result is the global rank-minimal
witness, so the outcome does not depend on the worker count.
"""

from __future__ import annotations

import logging
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Any, Optional, Sequence

from tqdm import tqdm

from ..config.runtime_config import current_config
from ..ff.field import ExtField
from ..groebner.buchberger import BudgetExceeded
from ..groebner.hypotheses import Hypotheses
from ..gtf.extend import HypothesesFail
from ..gtf.field import GTransformalField
from ..poly.multipoly import MultiPoly, evaluate
from ..poly.twisted import sigma_tuple
from .instance import AxiomInstance, InfiniteCarrier, check_hypotheses

logger = logging.getLogger(__name__)

WITNESS = "Witness"
EXHAUSTED = "Exhausted"
BUDGET_HIT = "BudgetHit"

Terms = tuple[tuple[tuple[int, ...], int], ...]


@dataclass(frozen=True)
class SearchOutcome:
    kind: str
    searched: int
    space: int
    ambient_points: int
    witness: Optional[tuple[int, ...]] = None
    rank: Optional[int] = None
    random_hit: bool = False

    @property
    def found(self) -> bool:
        return self.kind == WITNESS

    def to_json(self, field: Optional[ExtField] = None) -> dict:
        out: dict = {
            "kind": self.kind,
            "searched": self.searched,
            "space": self.space,
            "ambient_points": self.ambient_points,
        }
        if self.witness is not None:
            out["rank"] = self.rank
            out["witness"] = [field.format(a) for a in self.witness] if field else list(self.witness)
        if self.random_hit:
            out["random_hit"] = True
        return out


@dataclass(frozen=True, eq=False)
class AxiomReport:
    field: GTransformalField
    instance: AxiomInstance
    hypotheses: Optional[Hypotheses]
    outcome: SearchOutcome
    forced: bool = False
    budget: int = 0
    seed: int = 0

    def __post_init__(self):
        if self.outcome.witness is not None and not is_witness(self.field, self.instance, self.outcome.witness):
            raise RuntimeError(f"reported witness {self.outcome.witness} does not verify")

    @property
    def certifiable(self) -> bool:
        return self.hypotheses is not None and self.hypotheses.certifiable

    def to_json(self) -> dict:
        out = {
            "field": self.field.to_json(),
            "instance": self.instance.to_json(),
            "hypotheses": self.hypotheses.to_json() if self.hypotheses else None,
            "outcome": self.outcome.to_json(self.field.carrier),
            "forced": self.forced,
            "certifiable": self.certifiable,
            "budget": self.budget,
            "seed": self.seed,
        }
        if self.outcome.witness is not None:
            out["sigma_tuple"] = [
                self.field.carrier.format(x) for x in sigma_tuple(self.field.twisted, self.outcome.witness)
            ]
        return out


def point_of_rank(q: int, n: int, r: int) -> tuple[int, ...]:
    out = [0] * n
    for j in range(n - 1, -1, -1):
        r, out[j] = divmod(r, q)
    return tuple(out)


def rank_of_point(q: int, a: Sequence[int]) -> int:
    r = 0
    for x in a:
        r = r * q + x
    return r


def is_witness(Kσ: GTransformalField, inst: AxiomInstance, a: Sequence[Any]) -> bool:
    """Independent check through the polynomial evaluator."""
    if len(a) != inst.n:
        return False
    image = sigma_tuple(Kσ.twisted, tuple(a))
    K = Kσ.carrier
    if not all(K.is_zero(evaluate(f, image)) for f in inst.I.generators):
        return False
    return any(not K.is_zero(evaluate(g, image)) for g in inst.J.generators)


# worker side: plain data only


def _terms(f: MultiPoly) -> Terms:
    return tuple(sorted(f.terms.items()))


def _eval(K: ExtField, terms: Terms, image: Sequence[int]) -> int:
    out = 0
    for m, c in terms:
        t = c
        for x, k in zip(image, m):
            if k:
                t = K.mul(t, K.pow(x, k))
                if t == 0:
                    break
        out = K.add(out, t)
    return out


@dataclass(frozen=True)
class _Job:
    field: ExtField
    exponents: tuple[int, ...]
    n: int
    I: tuple[Terms, ...]
    J: tuple[Terms, ...]
    lo: int
    hi: int
    first_only: bool


def _hit(job: _Job, a: tuple[int, ...]) -> bool:
    K = job.field
    image = [K.frobenius(x, s) for s in job.exponents for x in a]
    if any(_eval(K, f, image) for f in job.I):
        return False
    return any(_eval(K, g, image) for g in job.J)


def _scan(job: _Job) -> tuple[Optional[int], int]:
    """(first witness rank or None, witness count) over [lo, hi)."""
    q = job.field.order
    first, count = None, 0
    for r in range(job.lo, job.hi):
        if _hit(job, point_of_rank(q, job.n, r)):
            count += 1
            if first is None:
                first = r
                if job.first_only:
                    break
    return first, count


def _jobs(Kσ: GTransformalField, inst: AxiomInstance, lo: int, hi: int, parts: int, first_only: bool) -> list[_Job]:
    I = tuple(_terms(f) for f in inst.I.generators)
    J = tuple(_terms(g) for g in inst.J.generators)
    size = max(1, -(-(hi - lo) // parts))
    return [
        _Job(Kσ.carrier, Kσ.exponents, inst.n, I, J, a, min(a + size, hi), first_only)
        for a in range(lo, hi, size)
    ]


def _run(jobs: list[_Job], workers: int, progress: bool, desc: str, stop_early: bool) -> list[tuple[Optional[int], int]]:
    bar = tqdm(total=sum(j.hi - j.lo for j in jobs), desc=desc, disable=not progress, leave=False)
    results: list[tuple[Optional[int], int]] = []
    try:
        if workers <= 1:
            for job in jobs:
                res = _scan(job)
                results.append(res)
                bar.update(job.hi - job.lo)
                if stop_early and res[0] is not None:
                    break
        else:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                for job, res in zip(jobs, pool.map(_scan, jobs)):
                    results.append(res)
                    bar.update(job.hi - job.lo)
    finally:
        bar.close()
    return results


def _require_finite(Kσ: GTransformalField) -> ExtField:
    K = Kσ.carrier
    if not isinstance(K, ExtField) or Kσ.exponents is None:
        raise InfiniteCarrier(f"witness search needs a finite carrier, got {K.describe()}")
    return K


def find_witness(
    Kσ: GTransformalField,
    inst: AxiomInstance,
    budget: Optional[int] = None,
    seed: Optional[int] = None,
    workers: Optional[int] = None,
    random_probes: Optional[int] = None,
    force: bool = False,
    check: bool = True,
    order: Optional[str] = None,
    progress: bool = False,
) -> AxiomReport:
    K = _require_finite(Kσ)
    cfg = current_config().axioms
    budget = cfg.budget if budget is None else budget
    workers = cfg.workers if workers is None else max(1, workers)
    random_probes = cfg.random_probes if random_probes is None else random_probes
    seed = current_config().ff.factor_seed if seed is None else seed

    hyp = check_hypotheses(Kσ, inst, order, seed) if check else None
    if hyp is not None and hyp.refuted and not force:
        raise HypothesesFail(hyp.refuted, hyp)

    q, n = K.order, inst.n
    ambient = q**n
    points = q ** (n * inst.e)
    limit = min(ambient, budget)

    random_hit = False
    if random_probes > 0 and ambient > 0:
        rng = random.Random(seed)
        probe = _jobs(Kσ, inst, 0, 1, 1, True)[0]
        hits = [r for r in (rng.randrange(ambient) for _ in range(random_probes)) if _hit(probe, point_of_rank(q, n, r))]
        if hits:
            # the rank-minimal witness is at or below the best random hit
            best = min(hits)
            limit = min(limit, best + 1)
            random_hit = True

    parts = workers * 4 if workers > 1 else max(1, min(64, limit // 4096 + 1))
    jobs = _jobs(Kσ, inst, 0, limit, parts, True)
    results = _run(jobs, workers, progress, "witness search", stop_early=True)
    ranks = [r for r, _ in results if r is not None]
    if ranks:
        r = min(ranks)
        outcome = SearchOutcome(WITNESS, r + 1, ambient, points, point_of_rank(q, n, r), r, random_hit)
    elif limit >= ambient:
        outcome = SearchOutcome(EXHAUSTED, ambient, ambient, points)
    else:
        outcome = SearchOutcome(BUDGET_HIT, limit, ambient, points)
    logger.info(
        "search over %s^%d: %s after %d of %d points", K.describe(), n, outcome.kind, outcome.searched, ambient
    )
    return AxiomReport(Kσ, inst, hyp, outcome, forced=force, budget=budget, seed=seed)


def count_witnesses(
    Kσ: GTransformalField,
    inst: AxiomInstance,
    budget: Optional[int] = None,
    workers: Optional[int] = None,
    progress: bool = False,
) -> int:
    """Exact number of witnesses in K^n."""
    K = _require_finite(Kσ)
    cfg = current_config().axioms
    budget = cfg.budget if budget is None else budget
    workers = cfg.workers if workers is None else max(1, workers)
    ambient = K.order**inst.n
    if ambient > budget:
        raise BudgetExceeded(f"{ambient} points exceed the search budget {budget}")
    parts = workers * 4 if workers > 1 else 1
    jobs = _jobs(Kσ, inst, 0, ambient, parts, False)
    return sum(c for _, c in _run(jobs, workers, progress, "witness count", stop_early=False))

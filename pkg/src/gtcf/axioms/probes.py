"""Bounded probes on a pair C ⊆ K of finite fields.

In a model every polynomial over the constants that stays irreducible over K
is linear, and every K-irreducible variety over C has a C-point. These probes
look for the degree-bounded counterexamples.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Optional, Sequence

from ..config.runtime_config import current_config
from ..ff import upoly as up
from ..ff.embedding import Embedding
from ..ff.factor import factor_univariate, is_irreducible, monic_polynomials, roots
from ..groebner.buchberger import BudgetExceeded

logger = logging.getLogger(__name__)

PASS = "Pass"
VIOLATION = "Violation"


@dataclass(frozen=True)
class ProbeVerdict:
    status: str
    poly: tuple
    degrees_over_K: tuple[int, ...]
    text: str = ""

    @property
    def violated(self) -> bool:
        return self.status == VIOLATION

    def to_json(self) -> dict:
        return {"status": self.status, "poly": self.text, "degrees_over_K": list(self.degrees_over_K)}


def irreducible_over_K_probe(iota: Embedding, f: Sequence[int]) -> ProbeVerdict:
    """Violation when f ∈ C[X] has degree > 1 and is irreducible over K."""
    C, K = iota.source, iota.target
    f = up.trim(C, f)
    text = up.to_text(C, f)
    if up.deg(f) <= 1:
        return ProbeVerdict(PASS, f, (max(up.deg(f), 0),), text)
    fK = tuple(iota(c) for c in f)
    fac = factor_univariate(K, fK)
    status = VIOLATION if fac.is_irreducible else PASS
    return ProbeVerdict(status, f, fac.degrees, text)


@dataclass(frozen=True)
class StronglyPacProbe:
    bound: int
    checked: int
    failures: tuple[tuple, ...] = field(default=())
    texts: tuple[str, ...] = field(default=())

    @property
    def holds(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {"degree_bound": self.bound, "checked": self.checked, "holds": self.holds, "failures": list(self.texts)}


def strongly_pac_probe(iota: Embedding, bound: int, cap: Optional[int] = None) -> StronglyPacProbe:
    """Monic f ∈ C[X] of degree ≤ bound irreducible over K without a root in C."""
    C, K = iota.source, iota.target
    cap = current_config().closure.exhaustive_cap if cap is None else cap
    total = sum(C.order**d for d in range(1, bound + 1))
    if total > cap:
        raise BudgetExceeded(f"{total} polynomials exceed the probe cap {cap}")
    failures, texts, checked = [], [], 0
    for d in range(1, bound + 1):
        for f in monic_polynomials(C, d):
            checked += 1
            if d == 1 or not is_irreducible(C, f):
                continue
            fK = tuple(iota(c) for c in f)
            if is_irreducible(K, fK) and not roots(C, f):
                failures.append(f)
                texts.append(up.to_text(C, f))
    logger.info("strongly PAC probe %s/%s up to degree %d: %d failures", K.describe(), C.describe(), bound, len(failures))
    return StronglyPacProbe(bound, checked, tuple(failures), tuple(texts))

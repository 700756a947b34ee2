"""The three ideal conditions an axiom instance must meet: invariance, primality, I ⊊ J."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Optional

from ..ff.field import ExtField
from ..poly.twisted import TwistedAction
from .buchberger import Ideal, buchberger
from .predicates import contains_properly, dimension_zero, is_g_invariant
from .primality import UNKNOWN, PrimalityVerdict, is_prime_principal, is_prime_zero_dim

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Hypotheses:
    invariant: bool
    primality: PrimalityVerdict
    contained: bool
    notes: tuple[str, ...] = field(default=())

    @property
    def failed(self) -> list[str]:
        out = []
        if not self.invariant:
            out.append("invariance")
        if not self.primality.is_prime:
            out.append("primality")
        if not self.contained:
            out.append("containment")
        return out

    @property
    def refuted(self) -> list[str]:
        """Failures that are decided; an Unknown primality verdict is not one."""
        return [f for f in self.failed if not (f == "primality" and self.primality.is_unknown)]

    @property
    def passed(self) -> bool:
        return not self.failed

    @property
    def certifiable(self) -> bool:
        return not self.primality.is_unknown

    def to_json(self) -> dict:
        return {
            "invariant": self.invariant,
            "primality": self.primality.to_json(),
            "contained": self.contained,
            "passed": self.passed,
            "certifiable": self.certifiable,
            "notes": list(self.notes),
        }


def primality_verdict(I: Ideal, order: Optional[str] = None, seed: Optional[int] = None) -> PrimalityVerdict:
    """Zero-dimensional test over finite carriers, the principal test otherwise."""
    if isinstance(I.field, ExtField):
        G = buchberger(I, order)
        if G.is_unit or dimension_zero(G):
            return is_prime_zero_dim(I, order, seed)
    if len(I.generators) <= 1:
        return is_prime_principal(I)
    return PrimalityVerdict(UNKNOWN, "unsupported", reason="neither zero-dimensional nor principal")


def check_ideals(
    A: TwistedAction,
    I: Ideal,
    J: Ideal,
    order: Optional[str] = None,
    seed: Optional[int] = None,
) -> Hypotheses:
    notes = []
    invariant = is_g_invariant(I, A, order)
    verdict = primality_verdict(I, order, seed)
    contained = contains_properly(I, J, order)
    if buchberger(J, order).is_unit:
        notes.append("J is the unit ideal")
    if not is_g_invariant(J, A, order):
        notes.append("J is not G-invariant")
    logger.info(
        "hypotheses: invariant=%s primality=%s contained=%s", invariant, verdict.status, contained
    )
    return Hypotheses(invariant, verdict, contained, tuple(notes))

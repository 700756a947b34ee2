from .buchberger import BudgetExceeded, GroebnerBasis, Ideal, buchberger, ideal_from_basis, normal_form
from .predicates import (
    InfiniteField,
    InvariantViolation,
    NotZeroDimensional,
    contains_properly,
    dimension_zero,
    is_g_invariant,
    member,
    quotient_algebra,
    quotient_basis,
    quotient_dimension,
)
from .hypotheses import Hypotheses, check_ideals, primality_verdict
from .primality import (
    NOT_PRIME,
    PRIME,
    UNKNOWN,
    PrimalityVerdict,
    PrimitiveElement,
    is_prime_principal,
    is_prime_zero_dim,
    primitive_element,
)

__all__ = [
    "BudgetExceeded",
    "GroebnerBasis",
    "Hypotheses",
    "Ideal",
    "InfiniteField",
    "InvariantViolation",
    "NOT_PRIME",
    "NotZeroDimensional",
    "PRIME",
    "PrimalityVerdict",
    "PrimitiveElement",
    "UNKNOWN",
    "buchberger",
    "check_ideals",
    "contains_properly",
    "dimension_zero",
    "ideal_from_basis",
    "is_g_invariant",
    "is_prime_principal",
    "is_prime_zero_dim",
    "member",
    "normal_form",
    "primality_verdict",
    "primitive_element",
    "quotient_algebra",
    "quotient_basis",
    "quotient_dimension",
]

from .algebra import FieldTest, FiniteAlgebra
from .embedding import DegreeMismatch, Embedding, embed, lift_through
from .factor import (
    Factorization,
    factor_univariate,
    irreducible_polynomials,
    is_irreducible,
    monic_polynomials,
    roots,
)
from .field import (
    ExtField,
    Field,
    FieldMismatch,
    NotPrime,
    TooLarge,
    field_with_modulus,
    frobenius,
    make_field,
    prime_power,
)
from .upoly import ZeroPolynomial

__all__ = [
    "DegreeMismatch",
    "Embedding",
    "ExtField",
    "Factorization",
    "Field",
    "FieldMismatch",
    "FieldTest",
    "FiniteAlgebra",
    "NotPrime",
    "TooLarge",
    "ZeroPolynomial",
    "embed",
    "factor_univariate",
    "field_with_modulus",
    "frobenius",
    "irreducible_polynomials",
    "is_irreducible",
    "lift_through",
    "make_field",
    "monic_polynomials",
    "prime_power",
    "roots",
]

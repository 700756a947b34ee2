from .extend import Extension, ExtensionNotCertified, HypothesesFail, extend_step
from .field import CycloConstants, GTransformalField, NotAnAction, constants, is_strict
from .structure import (
    BasisFrame,
    InvalidTensors,
    MatrixAut,
    NotABasis,
    NotStrict,
    Reconstruction,
    SquareCheck,
    StructureConstants,
    TensorField,
    UnsupportedCarrier,
    basis_frame,
    check_commuting_square,
    linearly_disjoint,
    power_basis,
    reconstruct,
    structure_constants,
)

__all__ = [
    "BasisFrame",
    "CycloConstants",
    "Extension",
    "ExtensionNotCertified",
    "GTransformalField",
    "HypothesesFail",
    "InvalidTensors",
    "MatrixAut",
    "NotABasis",
    "NotAnAction",
    "NotStrict",
    "Reconstruction",
    "SquareCheck",
    "StructureConstants",
    "TensorField",
    "UnsupportedCarrier",
    "basis_frame",
    "check_commuting_square",
    "constants",
    "extend_step",
    "is_strict",
    "linearly_disjoint",
    "power_basis",
    "reconstruct",
    "structure_constants",
]

from .field import QQ, ConductorMismatch, CycloAut, CycloField, cyclo_field, cyclotomic_polynomial, euler_phi
from .galois import UnitGroup, extend_action, galois_group, restrict, units_mod
from .norm import SOLVABLE, UNSOLVABLE, NormVerdict, norm_solvable, two_squares

__all__ = [
    "QQ",
    "ConductorMismatch",
    "CycloAut",
    "CycloField",
    "NormVerdict",
    "SOLVABLE",
    "UNSOLVABLE",
    "UnitGroup",
    "cyclo_field",
    "cyclotomic_polynomial",
    "euler_phi",
    "extend_action",
    "galois_group",
    "norm_solvable",
    "restrict",
    "two_squares",
    "units_mod",
]

from .certify import FAIL, PASS, CapExceeded, Certification, CertRow, certify_gclosed
from .supernatural import SupernaturalNumber, closure_degree, constants_degree
from .tower import (
    ClosureTower,
    InvalidSchedule,
    Level,
    LevelProbe,
    closure_kernel_truncation,
    default_schedule,
    level_field,
    level_probe,
)

__all__ = [
    "CapExceeded",
    "CertRow",
    "Certification",
    "ClosureTower",
    "FAIL",
    "InvalidSchedule",
    "Level",
    "LevelProbe",
    "PASS",
    "SupernaturalNumber",
    "certify_gclosed",
    "closure_degree",
    "closure_kernel_truncation",
    "constants_degree",
    "default_schedule",
    "level_field",
    "level_probe",
]

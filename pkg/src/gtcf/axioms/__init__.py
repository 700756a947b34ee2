from .instance import (
    AxiomInstance,
    CoefficientsNotConstant,
    InfiniteCarrier,
    WrongGroupOrder,
    check_hypotheses,
    diagonal_instance,
    instance_from_texts,
    norm_instance,
)
from .probes import PASS, VIOLATION, ProbeVerdict, StronglyPacProbe, irreducible_over_K_probe, strongly_pac_probe
from .search import (
    BUDGET_HIT,
    EXHAUSTED,
    WITNESS,
    AxiomReport,
    SearchOutcome,
    count_witnesses,
    find_witness,
    is_witness,
    point_of_rank,
    rank_of_point,
)

__all__ = [
    "AxiomInstance",
    "AxiomReport",
    "BUDGET_HIT",
    "CoefficientsNotConstant",
    "EXHAUSTED",
    "InfiniteCarrier",
    "PASS",
    "ProbeVerdict",
    "SearchOutcome",
    "StronglyPacProbe",
    "VIOLATION",
    "WITNESS",
    "WrongGroupOrder",
    "check_hypotheses",
    "count_witnesses",
    "diagonal_instance",
    "find_witness",
    "instance_from_texts",
    "irreducible_over_K_probe",
    "is_witness",
    "norm_instance",
    "point_of_rank",
    "rank_of_point",
    "strongly_pac_probe",
]

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from gtcf.axioms import (
    BUDGET_HIT,
    EXHAUSTED,
    VIOLATION,
    WITNESS,
    CoefficientsNotConstant,
    WrongGroupOrder,
    count_witnesses,
    diagonal_instance,
    find_witness,
    instance_from_texts,
    irreducible_over_K_probe,
    is_witness,
    norm_instance,
    point_of_rank,
    rank_of_point,
    strongly_pac_probe,
)
from gtcf.ff.embedding import embed
from gtcf.ff.field import make_field
from gtcf.gtf.extend import HypothesesFail
from gtcf.gtf.field import GTransformalField

QUINTIC = (1, 0, 1, 0, 0, 1)


def test_norm_instance_has_witness(f9_frob):
    inst = instance_from_texts(f9_frob, 1, ["x[1][1]*x[2][1] - 2"])
    report = find_witness(f9_frob, inst)
    out = report.outcome
    assert out.kind == WITNESS
    assert is_witness(f9_frob, inst, out.witness)
    assert out.searched == out.rank + 1
    # every smaller rank fails
    for r in range(out.rank):
        assert not is_witness(f9_frob, inst, point_of_rank(9, 1, r))
    assert report.certifiable


def test_diagonal_quintic_over_f4_is_exhausted(f4_frob):
    inst = diagonal_instance(f4_frob, QUINTIC)
    report = find_witness(f4_frob, inst)
    assert report.outcome.kind == EXHAUSTED
    assert report.outcome.searched == 4
    assert report.outcome.space == 4
    assert report.outcome.ambient_points == 16
    assert report.outcome.witness is None


def test_budget_hit(f9_frob):
    inst = instance_from_texts(f9_frob, 1, ["x[1][1]*x[2][1] - 2"])
    out = find_witness(f9_frob, inst, budget=1).outcome
    assert out.kind == BUDGET_HIT
    assert out.searched == 1


def test_witness_does_not_depend_on_workers(f9_frob):
    inst = instance_from_texts(f9_frob, 2, ["x[1][1]*x[2][1] + x[1][2]*x[2][2] - 1"])
    single = find_witness(f9_frob, inst, workers=1).outcome
    pooled = find_witness(f9_frob, inst, workers=2).outcome
    assert single.kind == pooled.kind == WITNESS
    assert single.witness == pooled.witness


def test_norm_fibres_have_q_plus_one_points(f9_frob, f9):
    for c in (1, 2):
        inst = norm_instance(f9_frob, c)
        assert count_witnesses(f9_frob, inst) == 4


def test_excluded_value_removes_a_witness(f9_frob):
    plain = norm_instance(f9_frob, 1)
    excluded = norm_instance(f9_frob, 1, exclude=1)
    assert count_witnesses(f9_frob, excluded) == count_witnesses(f9_frob, plain) - 1


def test_rank_encoding():
    assert point_of_rank(9, 2, 13) == (1, 4)
    assert rank_of_point(9, (1, 4)) == 13


def test_norm_instance_checks_its_inputs(f9_frob, f9):
    cubic = GTransformalField.cyclic_frobenius(make_field(2, 3), 3, 1)
    with pytest.raises(WrongGroupOrder):
        norm_instance(cubic, 1)
    with pytest.raises(CoefficientsNotConstant):
        norm_instance(f9_frob, f9.gen)
    with pytest.raises(CoefficientsNotConstant):
        norm_instance(f9_frob, 0)


def test_refuted_hypotheses_need_force(f4_frob, f4):
    inst = instance_from_texts(f4_frob, 1, ["x[1][1] - g"])
    with pytest.raises(HypothesesFail) as err:
        find_witness(f4_frob, inst)
    assert "invariance" in err.value.failed
    report = find_witness(f4_frob, inst, force=True)
    assert report.forced
    assert report.outcome.kind == WITNESS
    assert report.outcome.witness == (f4.gen,)


def test_strongly_pac_probe_finds_cubics():
    probe = strongly_pac_probe(embed(make_field(2), make_field(2, 2)), 3)
    assert not probe.holds
    assert len(probe.failures) == 2
    assert probe.checked == 14
    assert all(len(f) == 4 for f in probe.failures)


def test_irreducible_probe():
    iota = embed(make_field(2), make_field(2, 2))
    assert irreducible_over_K_probe(iota, QUINTIC).violated
    assert irreducible_over_K_probe(iota, QUINTIC).status == VIOLATION
    assert not irreducible_over_K_probe(iota, (1, 1, 1)).violated


@pytest.mark.parametrize("q", [3, 5, 7, 9])
def test_norm_fibres_over_every_small_field(q):
    p, k = {3: (3, 1), 5: (5, 1), 7: (7, 1), 9: (3, 2)}[q]
    Kσ = GTransformalField.cyclic_frobenius(make_field(p, 2 * k), 2, k)
    C, iota = Kσ.constants()
    assert C.order == q
    counts = [count_witnesses(Kσ, norm_instance(Kσ, iota(c))) for c in C.elements() if c != C.zero]
    assert counts == [q + 1] * (q - 1)

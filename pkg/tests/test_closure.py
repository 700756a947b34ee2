import math
import sys
from math import inf
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from gtcf.closure import (
    PASS,
    CapExceeded,
    ClosureTower,
    InvalidSchedule,
    SupernaturalNumber,
    certify_gclosed,
    closure_degree,
    closure_kernel_truncation,
    constants_degree,
    default_schedule,
    level_probe,
)
from gtcf.ff import upoly as up
from gtcf.ff.embedding import embed, lift_through
from gtcf.ff.factor import is_irreducible, monic_polynomials
from gtcf.groebner.buchberger import BudgetExceeded


def test_closure_degrees_as_text():
    assert str(closure_degree(2, 6)) == "2^1 · 3^1 · rest^inf"
    assert str(constants_degree(2, 6)) == "2^0 · 3^0 · rest^inf"
    assert str(closure_degree(3, 4)) == "2^2 · rest^inf"
    assert str(SupernaturalNumber.from_int(12)) == "2^2 · 3^1"
    assert closure_degree(9, 1).exponent(7) == inf


def test_constants_times_n_is_the_closure_degree():
    for n in (2, 4, 6, 12):
        assert constants_degree(5, n) * n == closure_degree(5, n)


@settings(max_examples=50, deadline=None)
@given(a=st.integers(min_value=1, max_value=5000), b=st.integers(min_value=1, max_value=5000))
def test_finite_supernatural_arithmetic(a, b):
    A, B = SupernaturalNumber.from_int(a), SupernaturalNumber.from_int(b)
    assert (A * B).value() == a * b
    assert A.lcm(B).value() == math.lcm(a, b)
    assert A.gcd(B).value() == math.gcd(a, b)
    assert A.divides(B) == (b % a == 0)


def test_infinite_values_refuse_value():
    with pytest.raises(ValueError):
        closure_degree(2, 3).value()
    assert SupernaturalNumber.from_int(3).divides(closure_degree(2, 3))
    assert not closure_degree(2, 3).divides(SupernaturalNumber.from_int(3))


def test_default_schedule():
    t = default_schedule(6)
    assert [t(0), t(1), t(2)] == [1, 5, 1225]
    assert default_schedule(2)(1) == 3


def test_levels_are_strict_and_grow():
    T = ClosureTower(2, 2)
    lv0, lv1 = T.level_field(0), T.level_field(1)
    assert lv0.carrier.order == 4 and lv0.constants.order == 2
    assert lv1.t == 3
    assert lv1.constants.order == 8 and lv1.carrier.order == 64
    assert lv1.field.is_strict()
    iK, iC = T.step_embeddings(0)
    for a in lv0.constants.elements():
        assert iK(lv0.iota(a)) == lv1.iota(iC(a))


def test_generator_has_order_n_on_every_level():
    T = ClosureTower(2, 6)
    assert T.level_field(0).action_order == 6
    assert T.level_field(1).carrier.k == 30
    assert T.level_field(1).action_order == 6


def test_explicit_schedule_checks():
    with pytest.raises(InvalidSchedule):
        ClosureTower(2, 2, [1, 2]).t(1)
    with pytest.raises(InvalidSchedule):
        ClosureTower(2, 2, [1, 3, 5]).t(2)
    with pytest.raises(BudgetExceeded):
        ClosureTower(2, 2, [1]).level_field(1)


def test_certification_splits_quintic_at_first_level():
    cert = certify_gclosed(ClosureTower(2, 6), 5)
    assert cert.first_split("X^5+X^2+1") == 1
    assert cert.status == PASS
    assert not cert.survivors
    assert not cert.sampled


def test_certification_caps():
    with pytest.raises(CapExceeded):
        certify_gclosed(ClosureTower(2, 6), 9)
    with pytest.raises(CapExceeded):
        certify_gclosed(ClosureTower(2, 6), 3, level_budget=7)


def test_level_probe_stays_irreducible():
    probe = level_probe(ClosureTower(2, 2), 0)
    assert probe.degree == 3
    assert probe.irreducible_over_K
    assert probe.method == "factorization"


def test_closure_kernel_truncation():
    assert closure_kernel_truncation(6, 2) == (2, 3)
    assert closure_kernel_truncation(4, 3) == (2,)
    assert closure_kernel_truncation(1, 3) == ()


def _small_tower():
    # C_L = GF(2^t), K_L = GF(2^3t) for t = 1, 2, 4
    return ClosureTower(2, 3, [1, 2, 4])


def test_step_squares_commute_across_two_levels():
    T = _small_tower()
    lv0, lv1, lv2 = (T.level_field(level) for level in range(3))
    (iK0, iC0), (iK1, iC1) = T.step_embeddings(0), T.step_embeddings(1)
    for lv, (iK, iC), nxt in ((lv0, (iK0, iC0), lv1), (lv1, (iK1, iC1), lv2)):
        for a in lv.constants.elements():
            assert iK(lv.iota(a)) == nxt.iota(iC(a))
    iK02, iC02 = iK1.compose(iK0), iC1.compose(iC0)
    for a in lv0.constants.elements():
        assert iK02(lv0.iota(a)) == lv2.iota(iC02(a))
    derived = lift_through(iK02.compose(lv0.iota), lv2.iota)
    assert all(derived(a) == iC02(a) for a in lv0.constants.elements())
    assert T.step_embeddings(0) is T.step_embeddings(0)


def test_step_embeddings_intertwine_the_generators():
    T = _small_tower()
    for level in (0, 1):
        lv, nxt = T.level_field(level), T.level_field(level + 1)
        iK, _ = T.step_embeddings(level)
        s, s_next = lv.field.sigma(2), nxt.field.sigma(2)
        for x in lv.carrier.elements():
            assert iK(s(x)) == s_next(iK(x))


def test_splitting_persists_up_the_tower():
    T = _small_tower()
    cert = certify_gclosed(T, 5, level_budget=2)
    C0 = T.level_field(0).constants
    seen = set()
    for d in range(2, 6):
        for f in monic_polynomials(C0, d):
            if not is_irreducible(C0, f):
                continue
            splits = []
            for level in range(3):
                lv = T.level_field(level)
                iota = embed(C0, lv.carrier)
                splits.append(not is_irreducible(lv.carrier, tuple(iota(c) for c in f)))
            assert splits == sorted(splits), up.to_text(C0, f)
            if splits[0]:
                continue
            first = splits.index(True) if True in splits else None
            assert cert.first_split(up.to_text(C0, f)) == first
            seen.add(first)
    assert seen == {1, None}

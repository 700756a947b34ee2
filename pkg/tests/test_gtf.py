import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from gtcf.closure.tower import ClosureTower
from gtcf.cyclotomic.field import cyclo_field
from gtcf.ff.field import make_field
from gtcf.groebner.buchberger import Ideal
from gtcf.groups.finite import cyclic_group, preset
from gtcf.gtf.extend import HypothesesFail, extend_step
from gtcf.gtf.field import GTransformalField, NotAnAction
from gtcf.gtf.structure import (
    NotABasis,
    NotStrict,
    basis_frame,
    check_commuting_square,
    linearly_disjoint,
    reconstruct,
    structure_constants,
)
from gtcf.poly.grammar import parse_polys
from gtcf.poly.multipoly import Layout


def test_constants_of_frobenius_actions(f9_frob):
    C, iota = f9_frob.constants()
    assert C.order == 3
    assert f9_frob.constants_degree == 2
    assert f9_frob.is_strict()
    for a in C.elements():
        assert f9_frob.is_constant(iota(a))


def test_non_strict_action():
    F16 = make_field(2, 4)
    Kσ = GTransformalField.finite(F16, cyclic_group(2), [0, 2])
    C, _ = Kσ.constants()
    assert C.order == 4
    assert Kσ.is_strict()
    trivial = GTransformalField.finite(make_field(2, 2), cyclic_group(2), [0, 0])
    assert not trivial.is_strict()
    with pytest.raises(NotStrict):
        structure_constants(trivial)


def test_action_must_be_a_homomorphism():
    with pytest.raises(NotAnAction):
        GTransformalField.finite(make_field(2, 3), cyclic_group(2), [0, 1])
    with pytest.raises(NotAnAction):
        GTransformalField.finite(make_field(3, 2), cyclic_group(2), [1, 0])


def test_klein_four_group_on_gf16_is_not_an_action():
    with pytest.raises(NotAnAction):
        GTransformalField.finite(make_field(2, 4), preset("Z/2xZ/2"), [0, 2, 1, 3])


def test_cyclotomic_constants():
    Kσ = GTransformalField.cyclotomic(cyclo_field(4), cyclic_group(2), [1, 3])
    C, _ = Kσ.constants()
    assert C.degree == 1
    assert Kσ.is_strict()


@pytest.mark.parametrize("q,n", [(4, 2), (9, 2), (64, 3)])
def test_structure_constants_round_trip(q, n):
    p = 2 if q % 2 == 0 else 3
    k = q.bit_length() - 1 if p == 2 else 2
    Kσ = GTransformalField.cyclic_frobenius(make_field(p, k), n, k // n)
    S = structure_constants(Kσ)
    assert S.dim == n
    # first basis vector is 1, so c_{1,j} is the j-th unit vector
    for j in range(1, n + 1):
        assert [S.c(1, j, l) for l in range(1, n + 1)] == [1 if l == j else 0 for l in range(1, n + 1)]
    rec = reconstruct(S)
    assert rec.exhaustive
    assert rec.checked == q
    assert rec.field.is_strict()


def test_bad_basis_rejected(f9_frob):
    with pytest.raises(NotABasis):
        basis_frame(f9_frob, (1, 1))
    with pytest.raises(NotABasis):
        basis_frame(f9_frob, (3, 1))


def test_commuting_square_along_tower():
    T = ClosureTower(2, 2)
    small_level, big_level = T.level_field(0), T.level_field(1)
    iK, _ = T.step_embeddings(0)
    small = structure_constants(small_level.field)
    big = structure_constants(big_level.field, basis=tuple(iK(v) for v in small.frame.basis))
    square = check_commuting_square(small, big, iK)
    assert square.holds
    assert square.exhaustive and square.checked == 4
    assert linearly_disjoint(big_level.field, iK, small.frame.basis)


def test_extend_step_diagonal_quintic(f4_frob, f4):
    L = Layout(2, 1)
    I = Ideal(f4, L, tuple(parse_polys(["x[1][1]^5 + x[1][1]^2 + 1", "x[2][1] - x[1][1]"], f4, L)))
    J = Ideal.unit(f4, L)
    ext = extend_step(f4_frob, I, J)
    Lσ = ext.field
    assert Lσ.carrier.order == 2**10
    assert ext.degree == 5
    assert Lσ.exponents == (0, 5)
    # the new automorphism restricts to x ↦ x^2 on GF(4)
    for a in f4.elements():
        assert Lσ.sigma(2)(ext.iota(a)) == ext.iota(f4.frobenius(a))
    assert len(ext.point) == 1
    assert ext.image == (ext.point[0], ext.point[0])


def test_extend_step_refuses_non_invariant_ideal(f4_frob, f4):
    L = Layout(2, 1)
    I = Ideal(f4, L, tuple(parse_polys(["x[1][1] - g"], f4, L)))
    with pytest.raises(HypothesesFail) as err:
        extend_step(f4_frob, I, Ideal.unit(f4, L))
    assert "invariance" in err.value.failed

import random
import sys
from pathlib import Path

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from gtcf.ff import upoly as up
from gtcf.ff.embedding import DegreeMismatch, embed, lift_through
from gtcf.ff.factor import factor_univariate, irreducible_polynomials, is_irreducible, roots
from gtcf.ff.field import NotPrime, TooLarge, make_field, prime_power
from gtcf.ff.linalg import rank_mod_p, solve_mod_p

F16 = make_field(2, 4)
F27 = make_field(3, 3)

QUINTIC = (1, 0, 1, 0, 0, 1)  # X^5+X^2+1


def test_make_field_basics():
    F4 = make_field(2, 2)
    assert F4.order == 4
    assert F4.modulus == (1, 1, 1)
    assert F4.describe() == "GF(2^2)"
    assert make_field(7).describe() == "GF(7)"
    assert make_field(3, 2) is make_field(3, 2)


def test_make_field_rejects_bad_input():
    with pytest.raises(NotPrime):
        make_field(4)
    with pytest.raises(NotPrime):
        prime_power(12)
    with pytest.raises(TooLarge):
        make_field(2, 80)
    assert prime_power(81) == (3, 4)


@settings(max_examples=60, deadline=None)
@given(
    a=st.integers(min_value=0, max_value=15),
    b=st.integers(min_value=0, max_value=15),
    c=st.integers(min_value=0, max_value=15),
)
def test_field_axioms_gf16(a, b, c):
    F = F16
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
    assert F.add(a, F.neg(a)) == 0
    if a:
        assert F.mul(a, F.inv(a)) == 1


@settings(max_examples=60, deadline=None)
@given(a=st.integers(min_value=0, max_value=26), b=st.integers(min_value=0, max_value=26))
def test_frobenius_is_an_automorphism(a, b):
    F = F27
    assert F.frobenius(F.mul(a, b)) == F.mul(F.frobenius(a), F.frobenius(b))
    assert F.frobenius(F.add(a, b)) == F.add(F.frobenius(a), F.frobenius(b))
    assert F.frobenius(a, 3) == a


def test_digits_round_trip():
    for a in F27.elements():
        assert F27.from_digits(F27.digits(a)) == a


def test_irreducible_counts():
    F2, F3 = make_field(2), make_field(3)
    assert len(list(irreducible_polynomials(F2, 4))) == 3
    assert len(list(irreducible_polynomials(F3, 3))) == 8


def test_quintic_irreducible_until_degree_five():
    F2 = make_field(2)
    assert is_irreducible(F2, QUINTIC)
    assert is_irreducible(make_field(2, 2), QUINTIC)
    assert not is_irreducible(make_field(2, 5), QUINTIC)
    assert len(roots(make_field(2, 5), QUINTIC)) == 5


def test_factorization_expands_back():
    F2 = make_field(2)
    f = (0, 1, 0, 0, 1)  # X^4+X = X(X+1)(X^2+X+1)
    fac = factor_univariate(F2, f)
    assert sorted(fac.degrees) == [1, 1, 2]
    assert fac.expand() == f
    assert up.to_text(F2, QUINTIC) == "X^5+X^2+1"


def test_embedding_is_a_ring_map():
    F4 = make_field(2, 2)
    iota = embed(F4, F16)
    for a in F4.elements():
        for b in F4.elements():
            assert iota(F4.mul(a, b)) == F16.mul(iota(a), iota(b))
            assert iota(F4.add(a, b)) == F16.add(iota(a), iota(b))
        assert iota.preimage(iota(a)) == a
    outside = [y for y in F16.elements() if not iota.in_image(y)]
    assert len(outside) == 12


def test_embedding_degree_mismatch():
    with pytest.raises(DegreeMismatch):
        embed(make_field(2, 3), F16)


def test_lift_through_commutes():
    F2, F4 = make_field(2), make_field(2, 2)
    e = embed(F4, F16)
    f = embed(F2, F16)
    h = lift_through(f, e)
    for a in F2.elements():
        assert e(h(a)) == f(a)


def test_linear_algebra_mod_p():
    A = np.array([[1, 2], [2, 4]], dtype=np.int64)
    assert rank_mod_p(A, 5) == 1
    B = np.array([[1, 1], [0, 1]], dtype=np.int64)
    x = solve_mod_p(B, [3, 2], 5)
    assert [int(v) for v in x] == [1, 2]


EMBEDDING_PAIRS = [((2, 2), (2, 4)), ((2, 3), (2, 6)), ((3, 2), (3, 4)), ((2, 2), (2, 8)), ((5, 1), (5, 3)), ((3, 1), (3, 6))]


@pytest.mark.parametrize("small,big", EMBEDDING_PAIRS)
def test_embeddings_are_ring_maps_on_random_pairs(small, big):
    S, B = make_field(*small), make_field(*big)
    iota = embed(S, B)
    rng = random.Random(f"{small}{big}")
    assert iota(S.one) == B.one
    assert iota(S.zero) == B.zero
    for _ in range(200):
        a, b = rng.randrange(S.order), rng.randrange(S.order)
        assert iota(S.mul(a, b)) == B.mul(iota(a), iota(b))
        assert iota(S.add(a, b)) == B.add(iota(a), iota(b))
        assert iota(S.frobenius(a)) == B.frobenius(iota(a))
        assert iota.preimage(iota(a)) == a


FACTOR_FIELDS = [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (2, 4), (5, 2), (3, 3), (2, 5), (7, 2), (2, 6)]


def _random_upoly(F, degree, rng):
    coeffs = [rng.randrange(F.order) for _ in range(degree)] + [rng.randrange(1, F.order)]
    return up.trim(F, coeffs)


@settings(max_examples=120, deadline=None)
@given(
    field=st.sampled_from(FACTOR_FIELDS),
    degree=st.integers(min_value=1, max_value=12),
    seed=st.integers(min_value=0, max_value=2**32),
    squared=st.booleans(),
)
def test_factorization_multiplies_back_on_random_polynomials(field, degree, seed, squared):
    F = make_field(*field)
    rng = random.Random(seed)
    f = _random_upoly(F, degree, rng)
    if squared and degree <= 6:
        # force a repeated factor
        g = _random_upoly(F, max(1, degree // 2), rng)
        f = up.mul(F, f, up.mul(F, g, g))
    fac = factor_univariate(F, f)
    assert fac.expand() == f
    assert sum(fac.degrees) == up.deg(f)
    for g, m in fac.factors:
        assert m >= 1
        assert g[-1] == F.one
        assert is_irreducible(F, g)

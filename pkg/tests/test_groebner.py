import itertools
import math
import random
import sys
from pathlib import Path

import pytest
from sympy import Poly, symbols

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from gtcf.ff.field import make_field
from gtcf.groebner.buchberger import BudgetExceeded, Ideal, buchberger
from gtcf.groebner.hypotheses import check_ideals, primality_verdict
from gtcf.groebner.predicates import (
    NotZeroDimensional,
    contains_properly,
    coordinates,
    dimension_zero,
    is_g_invariant,
    member,
    monomial_poly,
    quotient_basis,
    quotient_dimension,
)
from gtcf.groebner.primality import NOT_PRIME, PRIME, UNKNOWN, is_prime_principal, primitive_element
from gtcf.poly.grammar import format_poly, parse_polys
from gtcf.poly.multipoly import Layout, MultiPoly

F5 = make_field(5)
F3 = make_field(3)


def ideal(field, layout, *texts):
    return Ideal(field, layout, tuple(parse_polys(texts, field, layout)))


def test_membership_and_reduction():
    L = Layout(1, 2)
    I = ideal(F5, L, "x[1][1]*x[1][2] - 1", "x[1][1] - x[1][2]")
    (f,) = parse_polys(["x[1][2]^2 - 1"], F5, L)
    assert member(f, I)
    (g,) = parse_polys(["x[1][2] - 2"], F5, L)
    assert not member(g, I)
    assert quotient_dimension(I) == 2


def test_bases_agree_across_orders():
    L = Layout(1, 2)
    I = ideal(F5, L, "x[1][1]^2 - x[1][2]", "x[1][2]^2 - 1")
    for order in ("lex", "grevlex", "deglex"):
        G = buchberger(I, order)
        for h in I.generators:
            assert G.contains(h)
    assert dimension_zero(I)


def test_positive_dimension_detected():
    L = Layout(1, 2)
    I = ideal(F5, L, "x[1][1]*x[1][2] - 1")
    assert not dimension_zero(I)
    with pytest.raises(NotZeroDimensional):
        quotient_dimension(I)


def test_unit_ideal_and_containment():
    L = Layout(1, 1)
    I = ideal(F3, L, "x[1][1]^2 + 1")
    U = Ideal.unit(F3, L)
    assert buchberger(U).is_unit
    assert contains_properly(I, U)
    assert not contains_properly(I, I)


def test_pair_cap_raises_budget_exceeded():
    L = Layout(1, 2)
    I = ideal(F5, L, "x[1][1]*x[1][2] - 1", "x[1][1] - x[1][2]")
    with pytest.raises(BudgetExceeded):
        buchberger(I, "grevlex", pair_cap=0)


def test_zero_dim_primality():
    L = Layout(1, 1)
    irreducible = ideal(F3, L, "x[1][1]^2 + 1")
    assert primality_verdict(irreducible).status == PRIME
    split = ideal(F3, L, "x[1][1]^2 - 1")
    verdict = primality_verdict(split)
    assert verdict.status == NOT_PRIME
    assert verdict.verify(split)


def test_principal_degree_one_criterion(f9):
    I = ideal(f9, Layout(2, 1), "x[1][1]*x[2][1] - 2")
    assert is_prime_principal(I).status == PRIME
    assert primality_verdict(I).status == PRIME


def test_unknown_when_neither_zero_dim_nor_principal():
    L = Layout(1, 3)
    I = ideal(F5, L, "x[1][1]*x[1][2]", "x[1][1]*x[1][3]")
    assert primality_verdict(I).status == UNKNOWN


def test_primitive_element_of_a_field_quotient(f4):
    I = ideal(f4, Layout(1, 1), "x[1][1]^5 + x[1][1]^2 + 1")
    prim = primitive_element(I)
    assert prim is not None
    assert len(prim.minimal_polynomial) - 1 == 5


def test_invariance_under_frobenius(f4_frob, f4):
    L = Layout(2, 1)
    diag = ideal(f4, L, "x[1][1]^5 + x[1][1]^2 + 1", "x[2][1] - x[1][1]")
    assert is_g_invariant(diag, f4_frob.twisted)
    skew = ideal(f4, L, "x[1][1] - g")
    assert not is_g_invariant(skew, f4_frob.twisted)


def test_check_ideals_notes_unit_j(f4_frob, f4):
    L = Layout(2, 1)
    I = ideal(f4, L, "x[1][1]^5 + x[1][1]^2 + 1", "x[2][1] - x[1][1]")
    hyp = check_ideals(f4_frob.twisted, I, Ideal.unit(f4, L))
    assert hyp.passed
    assert "J is the unit ideal" in hyp.notes
    assert hyp.to_json()["certifiable"] is True


CORPUS_PRIMES = (2, 3, 5, 7, 11, 13)


def _upoly_text(coeffs, var):
    """Integer coefficients, constant term first."""
    terms = [str(c) if i == 0 else f"{c}*{var}^{i}" for i, c in enumerate(coeffs) if c]
    return " + ".join(terms) or "0"


def _random_monic(rng, p, degree):
    return [rng.randrange(p) for _ in range(degree)] + [1]


def _sympy_irreducible(coeffs, p):
    return Poly(list(reversed(coeffs)), symbols("t"), modulus=p).is_irreducible


def _random_zero_dim_corpus(seed, size):
    """(field, layout, texts, oracle) tuples with quotient dimension at most 8.

    Shape-lemma ideals (f(x), y - h(x)) are prime iff f is irreducible; tensor
    ideals (f(x), g(y)) are prime iff both are irreducible of coprime degree.
    """
    rng = random.Random(seed)
    out = []
    for _ in range(size):
        p = rng.choice(CORPUS_PRIMES)
        F = make_field(p)
        L = Layout(1, 2)
        if rng.random() < 0.5:
            d = rng.randint(1, 8)
            f = _random_monic(rng, p, d)
            h = [rng.randrange(p) for _ in range(d)]
            texts = [_upoly_text(f, "x[1][1]"), f"x[1][2] - ({_upoly_text(h, 'x[1][1]')})"]
            oracle = _sympy_irreducible(f, p)
        else:
            a, b = rng.choice([(1, 1), (1, 4), (2, 2), (2, 3), (3, 2), (2, 4), (4, 2), (1, 7)])
            f, g = _random_monic(rng, p, a), _random_monic(rng, p, b)
            texts = [_upoly_text(f, "x[1][1]"), _upoly_text(g, "x[1][2]")]
            oracle = _sympy_irreducible(f, p) and _sympy_irreducible(g, p) and math.gcd(a, b) == 1
        out.append((F, L, texts, oracle))
    return out


def test_primality_agrees_with_irreducibility_oracle():
    disagreements = []
    for F, L, texts, oracle in _random_zero_dim_corpus(seed=2024, size=200):
        I = ideal(F, L, *texts)
        verdict = primality_verdict(I)
        assert verdict.status != UNKNOWN, texts
        if verdict.is_prime != oracle:
            disagreements.append((F.p, texts))
        assert verdict.verify(I)
    assert disagreements == []


def test_reduced_basis_ignores_generator_order_and_scaling():
    rng = random.Random(7)
    for F, L, texts, _ in _random_zero_dim_corpus(seed=99, size=60):
        gens = parse_polys(texts, F, L)
        shuffled = list(gens)
        rng.shuffle(shuffled)
        scaled = [g.scale(rng.randrange(1, F.p)) for g in shuffled]
        for order in ("lex", "grevlex"):
            assert buchberger(Ideal(F, L, tuple(gens)), order) == buchberger(Ideal(F, L, tuple(scaled)), order)


SMALL_FIELDS = [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (11, 1), (13, 1), (2, 4)]


def _is_invertible(F, matrix):
    rows = [list(r) for r in matrix]
    n = len(rows)
    for col in range(n):
        pivot = next((r for r in range(col, n) if not F.is_zero(rows[r][col])), None)
        if pivot is None:
            return False
        rows[col], rows[pivot] = rows[pivot], rows[col]
        inv = F.inv(rows[col][col])
        for r in range(col + 1, n):
            factor = F.mul(rows[r][col], inv)
            if not F.is_zero(factor):
                rows[r] = [F.sub(x, F.mul(factor, y)) for x, y in zip(rows[r], rows[col])]
    return True


def _quotient_is_field(I):
    """K[X]/I is a field iff every nonzero element multiplies injectively."""
    G = buchberger(I)
    if G.is_unit:
        return False
    F = G.field
    std = quotient_basis(G)
    basis = [monomial_poly(G, m) for m in std]
    table = [[coordinates(G, std, a * b) for b in basis] for a in basis]
    for vec in itertools.product(range(F.order), repeat=len(std)):
        if not any(vec):
            continue
        # column j holds the coordinates of vec * basis[j]
        cols = []
        for j in range(len(std)):
            col = [F.zero] * len(std)
            for i, c in enumerate(vec):
                if c:
                    col = [F.add(x, F.mul(c, y)) for x, y in zip(col, table[i][j])]
            cols.append(col)
        if not _is_invertible(F, cols):
            return False
    return True


def _random_triangular_ideal(rng):
    """(f(x), y^b + c(x, y) [, h]) over GF(q), q ≤ 16, with q^(ab) ≤ 256."""
    p, k = rng.choice(SMALL_FIELDS)
    F = make_field(p, k)
    q = F.order
    a, b = rng.choice([(a, b) for a in range(1, 9) for b in range(1, 9) if q ** (a * b) <= 256])
    L = Layout(1, 2)
    f = {(i, 0): rng.randrange(q) for i in range(a)}
    f[(a, 0)] = F.one
    g = {(i, j): rng.randrange(q) for i in range(a) for j in range(b)}
    g[(0, b)] = F.one
    gens = [MultiPoly(F, L, f), MultiPoly(F, L, g)]
    if rng.random() < 0.3:
        h = {(rng.randrange(a), rng.randrange(b)): rng.randrange(1, q) for _ in range(2)}
        gens.append(MultiPoly(F, L, h))
    return Ideal(F, L, tuple(gens))


def test_primality_agrees_with_field_oracle_over_small_fields():
    rng = random.Random(16)
    seen, disagreements = set(), []
    for _ in range(150):
        I = _random_triangular_ideal(rng)
        verdict = primality_verdict(I)
        assert verdict.status != UNKNOWN
        assert verdict.verify(I)
        expected = _quotient_is_field(I)
        seen.add(expected)
        if verdict.is_prime != expected:
            disagreements.append([format_poly(f) for f in I.generators])
    assert disagreements == []
    assert seen == {True, False}


def test_principal_criterion_boundaries(f9):
    L = Layout(2, 1)
    coprime = is_prime_principal(ideal(f9, L, "x[1][1]*x[2][1] - 2"))
    assert coprime.status == PRIME
    assert coprime.method == "degree one with coprime coefficients"
    split = is_prime_principal(ideal(f9, L, "x[1][1]^2*x[2][1]"))
    assert split.status == NOT_PRIME
    assert split.method == "monomial factor"
    assert split.verify(ideal(f9, L, "x[1][1]^2*x[2][1]"))
    both_quadratic = is_prime_principal(ideal(f9, L, "x[1][1]^2*x[2][1]^2 + x[1][1] + 1"))
    assert both_quadratic.status == UNKNOWN
    assert both_quadratic.reason == "multivariate factorization unsupported"
    assert is_prime_principal(ideal(f9, L, "x[1][1]^2 - 1")).status == NOT_PRIME

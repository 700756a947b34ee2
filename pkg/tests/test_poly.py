import random
import sys
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from gtcf.poly.grammar import ParseError, format_poly, parse_poly, parse_polys
from gtcf.poly.multipoly import Layout, LayoutMismatch, MultiPoly, evaluate
from gtcf.ff.field import make_field
from gtcf.groups.finite import preset, product_coordinates
from gtcf.gtf.field import GTransformalField
from gtcf.poly.twisted import apply_twisted, sigma_tuple


def test_parse_format_round_trip(f9):
    L = Layout(2, 1)
    f = parse_poly("x[1][1]*x[2][1] - 2", f9, L)
    text = format_poly(f)
    assert parse_poly(text, f9, L) == f
    assert format_poly(f, "grevlex") == format_poly(parse_poly(format_poly(f, "grevlex"), f9, L), "grevlex")


def test_generator_constants(f9):
    L = Layout(1, 1)
    g = parse_poly("g", f9, L)
    assert g.is_constant() and g.constant_term() == f9.gen
    h = parse_poly("(g+1)^2 - g^2 - 2*g", f9, L)
    assert h == MultiPoly.const(f9, L, f9.one)


def test_parse_error_location(f9):
    with pytest.raises(ParseError) as err:
        parse_poly("x[1][1] + * 2", f9, Layout(2, 1))
    assert err.value.line == 1
    assert err.value.column == 11


def test_parse_polys_reports_generator_position(f9):
    with pytest.raises(ParseError) as err:
        parse_polys(["x[1][1]", "x[1][1] +"], f9, Layout(2, 1))
    assert err.value.line == 2


def test_variable_outside_layout(f9):
    with pytest.raises(ParseError):
        parse_poly("x[3][1]", f9, Layout(2, 1))
    with pytest.raises(LayoutMismatch):
        MultiPoly.var(f9, Layout(2, 1), 1, 2)


def test_evaluate(f9):
    L = Layout(2, 1)
    f = parse_poly("x[1][1]*x[2][1] - 2", f9, L)
    assert evaluate(f, (1, 2)) == 0
    assert evaluate(f, (1, 1)) != 0


def test_sigma_tuple_applies_each_automorphism(f9_frob, f9):
    for a in f9.elements():
        assert sigma_tuple(f9_frob.twisted, (a,)) == (a, f9.frobenius(a))


def test_twisted_action_swaps_blocks(f9_frob, f9):
    L = Layout(2, 1)
    f = parse_poly("g*x[1][1] + x[2][1]^2", f9, L)
    moved = apply_twisted(f9_frob.twisted, 2, f)
    expected = parse_poly("x[1][1]^2", f9, L) + MultiPoly.var(f9, L, 2).scale(f9.frobenius(f9.gen))
    assert moved == expected
    assert apply_twisted(f9_frob.twisted, 1, f) == f


def _klein_on_f4():
    G = preset("Z/2xZ/2")
    return GTransformalField.finite(make_field(2, 2), G, [product_coordinates(a, (2, 2))[0] - 1 for a in G.elements()])


def _z2_z4_on_f16():
    G = preset("Z/2xZ/4")
    return GTransformalField.finite(make_field(2, 4), G, [product_coordinates(a, (2, 4))[1] - 1 for a in G.elements()])


def _s3_by_sign_on_f4():
    G = preset("S3")
    return GTransformalField.finite(make_field(2, 2), G, [1 if G.element_order(a) == 2 else 0 for a in G.elements()])


ACTIONS = {
    "Z/2 on GF(9)": lambda: GTransformalField.cyclic_frobenius(make_field(3, 2), 2, 1),
    "Z/3 on GF(8)": lambda: GTransformalField.cyclic_frobenius(make_field(2, 3), 3, 1),
    "Z/4 on GF(16)": lambda: GTransformalField.cyclic_frobenius(make_field(2, 4), 4, 1),
    "Z/6 on GF(64)": lambda: GTransformalField.cyclic_frobenius(make_field(2, 6), 6, 1),
    "Z/8 on GF(256)": lambda: GTransformalField.cyclic_frobenius(make_field(2, 8), 8, 1),
    "Z/2xZ/2 on GF(4)": _klein_on_f4,
    "Z/2xZ/4 on GF(16)": _z2_z4_on_f16,
    "S3 on GF(4)": _s3_by_sign_on_f4,
}


def _random_poly(K, layout, rng, terms=5):
    out = {}
    for _ in range(terms):
        mono = tuple(rng.randrange(3) for _ in range(layout.nvars))
        out[mono] = rng.randrange(K.order)
    return MultiPoly(K, layout, out)


@pytest.mark.parametrize("name", sorted(ACTIONS))
@settings(max_examples=10, deadline=None)
@given(seed=st.integers(min_value=0, max_value=2**32))
def test_twisted_action_is_a_group_action(name, seed):
    Kσ = ACTIONS[name]()
    A, G, K = Kσ.twisted, Kσ.group, Kσ.carrier
    rng = random.Random(seed)
    L = Layout(G.order, 1 + seed % 2)
    f = _random_poly(K, L, rng)
    assert apply_twisted(A, G.identity, f) == f
    for k in G.elements():
        moved = apply_twisted(A, k, f)
        for l in G.elements():
            assert apply_twisted(A, k, apply_twisted(A, l, f)) == apply_twisted(A, G.mul(k, l), f)
        # evaluation at a twisted point intertwines with sigma_k
        a = tuple(rng.randrange(K.order) for _ in range(L.n))
        point = sigma_tuple(A, a)
        assert evaluate(moved, point) == A.sigma(k)(evaluate(f, point))

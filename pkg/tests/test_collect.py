import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from class3dessins.collect import (
    Element,
    Family,
    GroupParams,
    ParameterError,
    commutator,
    element_order,
    eval_word,
    group_of,
    inverse,
    multiply,
    normalize,
    power,
    validate_params,
)
from class3dessins.oracle import LetterCollector

from conftest import SMALLEST, params_of

I5 = validate_params("I", 5, 1, 1, 1)


def elements_of(params):
    g = group_of(params)
    return st.tuples(*(st.integers(0, m - 1) for m in g.moduli)).map(lambda t: Element(*t))


# --- parameters -------------------------------------------------------------


def test_validate_derives_d_l_m():
    assert (I5.d, I5.l, I5.m) == (1, 0, 0)
    iv = validate_params("IV", 2, 3, 1, 1)
    assert (iv.d, iv.l, iv.m) == (2, 0, 1)
    v = validate_params(Family.V, 2, 3, 2, 1)
    assert (v.d, v.l, v.m) == (2, 2, 0)
    vi = validate_params("VI", 2, 3, 2, 1)
    assert (vi.d, vi.l, vi.m) == (2, 2, 1)


@pytest.mark.parametrize(
    "args, fragment",
    [
        (("I", 3, 2, 1, 1), "p > 3"),
        (("V", 2, 3, 3, 1), "b = a-1"),
        (("I", 4, 1, 1, 1), "not prime"),
        (("II", 3, 1, 1, 1), "family II"),
        (("III", 2, 1, 1, 1), "c <= b <= a-1"),
        (("IV", 2, 2, 1, 1), "a-2"),
        (("VII", 2, 3, 1, 1), "unknown family"),
        (("I", 5, 1, 2, 1), "c <= b <= a"),
        (("I", 5, 1, 1, 0), ">= 1"),
    ],
)
def test_validate_rejects(args, fragment):
    with pytest.raises(ParameterError, match=fragment.replace("+", r"\+")):
        validate_params(*args)


def test_params_round_trip_and_equality():
    for name in SMALLEST:
        p = params_of(name)
        assert GroupParams.from_dict(p.to_dict()) == p
        assert hash(GroupParams.from_dict(p.to_dict())) == hash(p)
    assert str(I5) == "(I,5,1,1,1)"


def test_family_ii_accepts_both_branches():
    validate_params("II", 3, 2, 1, 1)  # c <= b < a
    validate_params("II", 3, 2, 2, 1)  # c < b = a
    with pytest.raises(ParameterError):
        validate_params("II", 3, 2, 2, 2)


# --- normal form -----------------------------------------------------------


def test_normalize_examples():
    assert normalize((6, 0, 0, 0, 0), I5) == (1, 0, 0, 0, 0)
    assert normalize((4, 0, 0, 0, 0), validate_params("V", 2, 3, 2, 1)) == (0, 0, 2, 0, 0)
    assert normalize((4, 0, 0, 0, 0), validate_params("IV", 2, 3, 1, 1)) == (0, 0, 0, 1, 0)


def test_normalize_negative_carries():
    vi = validate_params("VI", 2, 3, 2, 1)
    # y^-4 = (y^4)^-1 = z^2 v
    assert normalize((0, -4, 0, 0, 0), vi) == (0, 0, 2, 0, 1)
    assert normalize((-1, 0, -1, -1, -1), I5) == (4, 0, 4, 4, 4)


def test_multiply_examples():
    g = group_of(I5)
    assert multiply(g.identity, (3, 1, 4, 1, 2), I5) == (3, 1, 4, 1, 2)
    assert multiply(g.x, g.y, I5) == (1, 1, 0, 0, 0)
    # y x = x y [y, x] = x y z^-1; frozen after checking against letter collection
    assert multiply(g.y, g.x, I5) == (1, 1, 4, 0, 0)
    assert LetterCollector(I5).collect("yx") == (1, 1, 4, 0, 0)


def test_inverse_examples():
    g = group_of(I5)
    assert inverse(g.identity, I5) == g.identity
    # frozen: unique solution of (xy) h = 1 found by exhaustive search
    assert inverse(Element(1, 1, 0, 0, 0), I5) == (4, 4, 4, 1, 1)
    iii = params_of("III")
    G = group_of(iii)
    involutions = [e for e in G.elements() if e != G.identity and G.multiply(e, e) == G.identity]
    assert involutions
    assert all(G.inverse(e) == e for e in involutions)


def test_power_examples():
    g = group_of(I5)
    assert power(g.x, 0, I5) == g.identity
    assert power(g.x, 5, I5) == g.identity
    vi = validate_params("VI", 2, 3, 2, 1)
    assert power(group_of(vi).x, 4, vi) == (0, 0, 2, 1, 0)


def test_commutator_examples():
    g = group_of(I5)
    assert commutator(g.x, g.y, I5) == g.z
    assert commutator(g.z, g.x, I5) == g.u
    assert commutator(g.z, g.y, I5) == g.v
    assert commutator(g.y, g.y, I5) == g.identity
    assert commutator(g.multiply(g.x, g.y), g.y, I5) == (0, 0, 1, 0, 1)


def test_element_order_examples():
    assert element_order(Element(0, 0, 0, 0, 0), I5) == 1
    assert element_order(Element(1, 0, 0, 0, 0), validate_params("I", 5, 2, 1, 1)) == 25
    assert element_order(Element(1, 0, 0, 0, 0), validate_params("IV", 2, 3, 1, 1)) == 8


def test_eval_word_conventions():
    g = group_of(I5)
    assert eval_word("", I5) == g.identity
    assert eval_word("XYxy", I5) == g.z
    # [x,y]^-1 = [y,x]
    assert eval_word("YXyx", I5) == g.inverse(g.z)
    # x y x^-1 y^-1 = [x^-1, y^-1], which is z modulo <u, v>, not z^-1
    assert eval_word("xyXY", I5) == (0, 0, 1, 4, 4)
    assert eval_word("xyXY", I5) == g.commutator(g.inverse(g.x), g.inverse(g.y))
    zw = "XYxy"
    assert eval_word(zw[::-1].swapcase() * 1 + zw, I5) == g.identity
    with pytest.raises(ValueError, match="bad letter"):
        eval_word("xq", I5)


def test_element_str():
    assert str(Element(4, 4, 4, 1, 1)) == "x^4*y^4*z^4*u*v"
    assert str(Element(0, 0, 0, 0, 0)) == "1"


# --- properties --------------------------------------------------------------


@pytest.mark.parametrize("name", list(SMALLEST))
def test_engine_matches_letter_collection(name):
    params = params_of(name)
    G, L = group_of(params), LetterCollector(params)
    rng = random.Random(11)
    for _ in range(400):
        g = G.normalize([rng.randrange(m) for m in G.moduli])
        h = G.normalize([rng.randrange(m) for m in G.moduli])
        assert G.multiply(g, h) == L.multiply(g, h)


@pytest.mark.parametrize("name", list(SMALLEST))
def test_closed_forms_match_iteration(name):
    params = params_of(name)
    G = group_of(params)
    rng = random.Random(3)
    for _ in range(300):
        g = G.normalize([rng.randrange(m) for m in G.moduli])
        h = G.normalize([rng.randrange(m) for m in G.moduli])
        n = rng.randrange(-3 * G.px, 3 * G.px)
        assert G.power(g, n) == G.power_by_squaring(g, n)
        assert G.commutator(g, h) == G.commutator_by_definition(g, h)
        assert G.multiply(g, G.inverse(g)) == G.identity
        assert G.multiply(G.inverse(g), g) == G.identity


@settings(max_examples=200, deadline=None)
@given(elements_of(I5), elements_of(I5), elements_of(I5))
def test_associative_i5(g, h, k):
    G = group_of(I5)
    assert G.multiply(G.multiply(g, h), k) == G.multiply(g, G.multiply(h, k))


@settings(max_examples=200, deadline=None)
@given(elements_of(params_of("VI")), st.integers(-40, 40), st.integers(-40, 40))
def test_power_laws_vi(g, m, n):
    params = params_of("VI")
    G = group_of(params)
    assert G.multiply(G.power(g, m), G.power(g, n)) == G.power(g, m + n)
    assert G.power(G.power(g, m), n) == G.power(g, m * n)


@settings(max_examples=150, deadline=None)
@given(elements_of(params_of("II")), elements_of(params_of("II")))
def test_commutator_identities_ii(g, h):
    params = params_of("II")
    G = group_of(params)
    c = G.commutator(g, h)
    assert G.inverse(c) == G.commutator(h, g)
    # g^h = g [g, h]
    conj = G.multiply(G.multiply(G.inverse(h), g), h)
    assert conj == G.multiply(g, c)
    # class 3: G_3 is central
    w = G.commutator(c, g)
    assert G.commutator(w, h) == G.identity


def test_index_matches_enumeration_order():
    G = group_of(params_of("III"))
    for k, e in enumerate(G.elements()):
        assert G.index(e) == k
    assert k + 1 == G.order == 128


def test_orders_divide_exponent():
    G = group_of(params_of("V"))
    for e in G.elements():
        assert G.power(e, 8) == G.identity

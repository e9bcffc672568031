import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from class3dessins.collect import Family, ParameterError, group_of, validate_params
from class3dessins.family import (
    FactoredInt,
    euler_poincare_genus,
    enumerate_params,
    export_presentation,
    invariants_of,
    relators,
    structure_types,
)

from conftest import SMALLEST, params_of

EXPECTED = {
    "I": (3125, 5**7 * 96, (5, 5, 5), 626),
    "II": (2187, 16 * 3**11, (9, 9, 9), 730),
    "III": (128, 3 * 2**11, (4, 4, 4), 17),
    "IV": (128, 3 * 2**11, (8, 8, 8), 41),
    "V": (256, 3 * 2**13, (8, 8, 8), 81),
    "VI": (256, 3 * 2**13, (8, 8, 8), 81),
}


@pytest.mark.parametrize("name", list(SMALLEST))
def test_invariants_at_smallest(name):
    params = params_of(name)
    inv = invariants_of(params)
    assert (inv.group_order, inv.aut_order.value, inv.dessin_type, inv.genus) == EXPECTED[name]
    assert inv.group_order == params.order


def test_factored_int_display():
    assert str(FactoredInt(3, 2, 11)) == "3*2^11"
    assert str(FactoredInt(1, 5, 3)) == "5^3"
    assert int(FactoredInt(96, 5, 7)) == 7_500_000


def test_structure_types_examples():
    assert structure_types(validate_params("I", 5, 1, 1, 1)) == ((5, 5, 5), (5, 5))
    assert structure_types(validate_params("IV", 2, 3, 1, 1)) == ((2, 2, 2), (4, 4))
    assert structure_types(validate_params("VI", 2, 3, 2, 1)) == ((2, 2, 4), (4, 4))


def test_enumerate_examples():
    assert [str(p) for p in enumerate_params(5, 1)] == ["(I,5,1,1,1)"]
    assert [str(p) for p in enumerate_params(2, 2)] == ["(III,2,2,1,1)"]
    assert enumerate_params(3, 1) == []
    with pytest.raises(ParameterError):
        enumerate_params(9, 2)


def test_enumerate_p2_a3():
    found = [str(p) for p in enumerate_params(2, 3)]
    assert found == [
        "(III,2,2,1,1)",
        "(III,2,3,1,1)",
        "(III,2,3,2,1)",
        "(III,2,3,2,2)",
        "(IV,2,3,1,1)",
        "(V,2,3,2,1)",
        "(VI,2,3,2,1)",
    ]


def test_enumerate_is_sorted_and_valid():
    for p in (2, 3, 5, 7):
        found = enumerate_params(p, 4)
        assert [q.key for q in found] == sorted(q.key for q in found)
        assert len(set(found)) == len(found)


valid_params = st.sampled_from(
    [q for p in (2, 3, 5, 7, 11) for q in enumerate_params(p, 5)]
)


@settings(max_examples=200, deadline=None)
@given(valid_params)
def test_genus_formula_is_euler_poincare(params):
    inv = invariants_of(params)
    assert euler_poincare_genus(inv.group_order, inv.dessin_type) == inv.genus
    assert inv.group_order == params.order


@settings(max_examples=200, deadline=None)
@given(valid_params)
def test_aut_order_is_burnside_count(params):
    # |Aut(G)| equals the number of generating pairs, |G|^2 (1 - 1/p^2)(1 - 1/p)
    p, n = params.p, params.order
    assert invariants_of(params).aut_order.value * p**4 == n * n * (p * p - 1) * (p * p - p)


@pytest.mark.parametrize("name", list(SMALLEST))
def test_relators_hold_on_defining_pair(name):
    params = params_of(name)
    G = group_of(params)
    for rel in relators(params):
        assert rel.holds(G, G.x, G.y), str(rel)


@pytest.mark.parametrize("name", ["III", "IV", "V", "VI"])
def test_relator_letters_evaluate_to_identity(name):
    # the flat words are long but still feasible for the 2-groups
    params = params_of(name)
    G = group_of(params)
    for rel in relators(params):
        assert G.eval_word(rel.as_word().letters()) == G.identity, str(rel)


def test_relators_count_per_family():
    assert len(relators(params_of("I"))) == 9
    assert len(relators(params_of("IV"))) == 11


def test_relators_detect_wrong_pair():
    params = params_of("V")
    G = group_of(params)
    # (x, y^2) does not generate, and y^2 has the wrong order
    bad = [r for r in relators(params) if not r.holds(G, G.x, G.multiply(G.y, G.y))]
    assert bad


def test_export_presentation_format():
    text = export_presentation(validate_params("IV", 2, 3, 1, 1))
    lines = text.splitlines()
    assert lines[0] == "# family IV: p=2 a=3 b=1 c=1"
    assert lines[1] == "# order 128"
    assert lines[2] == "generators: x, y"
    assert lines[3] == "z := (x^-1*y^-1*x*y)"
    assert lines[4].startswith("u := ((x^-1*y^-1*x*y)^-1*x^-1*")
    assert lines[6] == "relators:"
    assert lines[7] == "x^8    # x^8 = 1"
    assert lines[-2] == "x^4*((x^-1*y^-1*x*y)^-1*x^-1*(x^-1*y^-1*x*y)*x)^-1    # x^4 = u"
    assert len(lines) == 7 + 11
    assert text.endswith("\n")


def test_export_is_deterministic():
    params = params_of("VI")
    assert export_presentation(params) == export_presentation(params)


def test_family_enum_rank():
    assert [f.rank for f in Family] == list(range(6))

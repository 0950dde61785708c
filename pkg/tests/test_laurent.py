"""Laurent polynomial layer: normal forms, factorization, Fox-Milnor.

The Fox-Milnor decision procedure is checked against an independent
brute-force witness search (degree <= 4, coefficients in [-5, 5]) on a
fixed-seed corpus of products, per the acceptance contract.
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from concordance.laurent import (
    LaurentPoly,
    doteq,
    factor,
    fox_milnor_pairing,
    reciprocal,
    substitute_power,
)

P = LaurentPoly.parse


# -- parser / printer --------------------------------------------------------


def test_print_canonical_form():
    p = LaurentPoly({1: 3, 0: -7, -1: 3})
    assert str(p) == "3*t^1 - 7 + 3*t^-1"


def test_parse_round_trip_is_bit_exact():
    for s in [
        "3*t^1 - 7 + 3*t^-1",
        "1*t^2 - 1*t^1 - 1",
        "-2*t^3 + 5 - 1*t^-4",
        "7",
        "-1",
        "0",
        "1*t^-2",
    ]:
        assert str(P(s)) == s


def test_parse_accepts_loose_variants():
    assert P("t") == LaurentPoly({1: 1})
    assert P("-t^2 + t") == LaurentPoly({2: -1, 1: 1})
    assert P("2t^2") == LaurentPoly({2: 2})
    assert P("t^2-t+1") == P("1*t^2 - 1*t^1 + 1")
    assert P("3/2*t^1") == LaurentPoly({1: Fraction(3, 2)})


def test_parse_rejects_garbage():
    for bad in ["", "t^", "3**t", "x+1", "1 + + 2", "t^1.5"]:
        with pytest.raises(ValueError):
            P(bad)


def test_float_coefficients_rejected():
    with pytest.raises(TypeError):
        LaurentPoly({0: 1.5})


# -- arithmetic and normal forms ---------------------------------------------


def test_evaluate_exact():
    p = P("3*t^1 - 7 + 3*t^-1")
    assert p.evaluate(1) == -1
    assert p.evaluate(-1) == -13
    assert p.evaluate(Fraction(1, 3)) == Fraction(3, 3) - 7 + 9


def test_doteq_examples():
    assert doteq(P("1*t^1 - 1 + 1*t^-1"), P("t^2 - t + 1"))
    assert doteq(P("3*t^1 - 7 + 3*t^-1"), P("-3*t^2 + 7*t^1 - 3"))
    assert not doteq(P("t^2 - t + 1"), P("t^2 + t - 1"))
    assert doteq(LaurentPoly.zero(), LaurentPoly.zero())
    assert not doteq(LaurentPoly.zero(), LaurentPoly.one())


def test_reciprocal_involution():
    p = P("3*t^2 - 7*t^1 + 1*t^-3")
    assert reciprocal(reciprocal(p)) == p


def test_substitute_power_validates():
    with pytest.raises(ValueError):
        substitute_power(P("t"), 0)


# -- factorization ------------------------------------------------------------


def test_factor_spec_products():
    f = factor(P("t^4 - 3*t^2 + 1"))
    assert f.sign == 1 and f.content == 1 and f.power == 0
    assert [(str(q), m) for q, m in f.factors] == [
        ("1*t^2 - 1*t^1 - 1", 1),
        ("1*t^2 + 1*t^1 - 1", 1),
    ]


def test_factor_orders_deterministically():
    a = P("t^1 - 2") * P("1 - 2*t^1")
    f = factor(a)
    assert f.sign == -1 and f.content == 1
    assert [(str(q), m) for q, m in f.factors] == [
        ("1*t^1 - 2", 1),
        ("2*t^1 - 1", 1),
    ]


def test_factor_laurent_input_records_unit_power():
    f = factor(P("3*t^1 - 7 + 3*t^-1"))
    assert f.power == -1
    assert [(str(q), m) for q, m in f.factors] == [("3*t^2 - 7*t^1 + 3", 1)]
    assert f.expand() == P("3*t^1 - 7 + 3*t^-1")


def test_factor_content_and_multiplicity():
    a = LaurentPoly({0: 12}) * P("t^1 - 1") ** 2
    f = factor(a)
    assert f.content == 12 and f.sign == 1
    assert [(str(q), m) for q, m in f.factors] == [("1*t^1 - 1", 2)]


def test_factor_rejects_zero_and_rationals():
    with pytest.raises(ValueError):
        factor(LaurentPoly.zero())
    with pytest.raises(ValueError):
        factor(LaurentPoly({0: Fraction(1, 2)}))


# -- Fox-Milnor pairing --------------------------------------------------------


def test_fox_milnor_spec_yes_case():
    r = fox_milnor_pairing(P("t^4 - 3*t^2 + 1"))
    assert r.is_norm
    assert doteq(r.witness, P("t^2 - t - 1"))


def test_fox_milnor_spec_no_case_names_violator():
    a = P("3*t^2 - 7*t^1 + 3") * P("3*t^4 - 7*t^2 + 3")
    r = fox_milnor_pairing(a)
    assert not r.is_norm
    assert str(r.violating_factor) == "3*t^2 - 7*t^1 + 3"
    assert r.violating_multiplicity == 1


def test_fox_milnor_reciprocal_pair_case():
    a = P("t^1 - 2") * P("1 - 2*t^1")
    r = fox_milnor_pairing(a)
    assert r.is_norm
    assert doteq(r.witness, P("t^1 - 2"))


def test_fox_milnor_square_content_condition():
    # 2*(t-1)^2 pairs factors correctly but the content 2 is not a square.
    r = fox_milnor_pairing(LaurentPoly({0: 2}) * P("t^1 - 1") ** 2)
    assert not r.is_norm and r.violating_content == 2
    r = fox_milnor_pairing(LaurentPoly({0: 4}) * P("t^1 - 1") ** 2)
    assert r.is_norm


# -- brute-force oracle equivalence (shared oracle in _oracles.py) -------------


def test_fox_milnor_agrees_with_brute_force_on_200_products():
    from _oracles import fox_milnor_disagreements, fox_milnor_oracle_cases

    cases = fox_milnor_oracle_cases(20260818)
    assert len(cases) == 200
    assert not fox_milnor_disagreements(cases)


# -- property tests ------------------------------------------------------------

_small_laurent = st.dictionaries(
    st.integers(min_value=-4, max_value=4),
    st.integers(min_value=-9, max_value=9),
    max_size=6,
).map(LaurentPoly)

_nonzero_laurent = _small_laurent.filter(lambda p: not p.is_zero)


@given(_nonzero_laurent, st.integers(min_value=-3, max_value=3), st.sampled_from([1, -1]))
def test_doteq_ignores_units(a, k, s):
    assert doteq(a, a.shift(k) * s)


@given(_small_laurent)
def test_parse_str_round_trip(a):
    assert LaurentPoly.parse(str(a)) == a


@given(_nonzero_laurent, _nonzero_laurent, st.integers(min_value=1, max_value=4))
def test_substitute_power_is_multiplicative(a, b, k):
    assert substitute_power(a * b, k) == substitute_power(a, k) * substitute_power(b, k)


@settings(deadline=None, max_examples=60)
@given(_nonzero_laurent)
def test_factor_round_trip(a):
    assert factor(a).expand() == a


@settings(deadline=None, max_examples=60)
@given(_nonzero_laurent)
def test_norms_always_pass_fox_milnor(a):
    r = fox_milnor_pairing(a * a.reciprocal())
    assert r.is_norm
    assert doteq(a * a.reciprocal(), r.witness * r.witness.reciprocal())

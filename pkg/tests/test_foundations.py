from fractions import Fraction as Q

import pytest
from hypothesis import given
from hypothesis import strategies as st

from exact_integral.foundations import (
    UcFunQQ,
    clamp01,
    decimal_round,
    lipschitz_modulus,
    open_unit,
    ou_div,
    ou_section,
    pos,
    qball,
    rat,
)

from helpers import open_units, pos_rationals, rationals


@pytest.mark.parametrize(
    "eps, x, y, expected",
    [(Q(1), Q(0), Q(1), True), (Q(1, 2), Q(0), Q(1), False), (Q(1, 3), Q(-1, 3), Q(0), True)],
)
def test_qball_examples(eps, x, y, expected):
    assert qball(eps, x, y) is expected


@given(pos_rationals, rationals)
def test_qball_reflexive(eps, x):
    assert qball(eps, x, x)


@given(pos_rationals, rationals, rationals)
def test_qball_symmetric(eps, x, y):
    assert qball(eps, x, y) == qball(eps, y, x)


@given(pos_rationals, pos_rationals, rationals, rationals, rationals)
def test_qball_triangle(e1, e2, x, y, z):
    if qball(e1, x, y) and qball(e2, y, z):
        assert qball(e1 + e2, x, z)


@pytest.mark.parametrize(
    "a, o, expected", [(Q(1, 4), Q(1, 2), Q(1, 2)), (Q(1, 6), Q(1, 3), Q(1, 2)), (Q(1, 3), Q(2, 3), Q(1, 2))]
)
def test_ou_div_examples(a, o, expected):
    assert ou_div(a, o) == expected


@pytest.mark.parametrize(
    "a, o, expected", [(Q(3, 4), Q(1, 2), Q(1, 2)), (Q(2, 3), Q(1, 3), Q(1, 2)), (Q(5, 6), Q(1, 2), Q(2, 3))]
)
def test_ou_section_examples(a, o, expected):
    assert ou_section(a, o) == expected


def test_open_unit_preconditions():
    with pytest.raises(ValueError):
        ou_div(Q(1, 2), Q(1, 4))
    with pytest.raises(ValueError):
        ou_section(Q(1, 4), Q(1, 2))
    with pytest.raises(ValueError):
        ou_div(Q(1, 2), Q(1, 2))
    with pytest.raises(ValueError):
        open_unit(1)
    with pytest.raises(ValueError):
        pos(0)


@given(open_units, open_units)
def test_ou_outputs_stay_in_open_unit(a, o):
    if a < o:
        assert 0 < ou_div(a, o) < 1
    elif o < a:
        assert 0 < ou_section(a, o) < 1


@pytest.mark.parametrize(
    "x, n, text",
    [
        (Q(1, 3), 3, "0.333"),
        (Q(1, 2), 0, "1"),
        (Q(-1, 8), 2, "-0.13"),
        (Q(-1, 2), 0, "-1"),
        (Q(2, 3), 2, "0.67"),
        (Q(-1, 1000), 2, "0.00"),
        (Q(12345, 10), 1, "1234.5"),
        (Q(19995, 10000), 3, "2.000"),
    ],
)
def test_decimal_round(x, n, text):
    assert decimal_round(x, n) == text


@given(rationals, st.integers(min_value=0, max_value=6))
def test_decimal_round_is_nearest(x, n):
    text = decimal_round(x, n)
    assert abs(Q(text) - x) <= Q(1, 2 * 10**n)
    if n:
        assert len(text.split(".")[1]) == n


@given(rationals, rationals, rationals)
def test_rational_field_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c


def test_rat_refuses_floats():
    with pytest.raises(TypeError):
        rat(0.5)
    assert rat("3/4") == Q(3, 4)


def test_clamping_and_modulus():
    f = UcFunQQ(lambda x: x, lipschitz_modulus(Q(2)))
    assert f(Q(3, 2)) == 1
    assert f(Q(-1)) == 0
    assert f.modulus(Q(1, 10)) == Q(1, 20)
    assert clamp01(Q(1, 3)) == Q(1, 3)
    assert lipschitz_modulus(Q(0))(Q(1, 7)) == Q(1, 7)

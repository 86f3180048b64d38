from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from superjacobi.core import coeff_to_json, format_coeff, koszul_sign, parity, parse_coeff, sign

bits = st.integers(0, 1)


def test_koszul_sign_table():
    assert [koszul_sign(p, q) for p in (0, 1) for q in (0, 1)] == [1, 1, 1, -1]
    assert isinstance(koszul_sign(1, 1), Fraction)


@given(bits, bits, bits)
def test_koszul_sign_is_bimultiplicative(p, q, r):
    assert koszul_sign(p, q) == koszul_sign(q, p)
    assert koszul_sign((p + q) % 2, r) == koszul_sign(p, r) * koszul_sign(q, r)


@given(st.integers(-50, 50), st.integers(-50, 50))
def test_sign_adds_exponents(a, b):
    assert sign(a + b) == sign(a) * sign(b)


def test_parity_validation():
    assert parity(1) == 1
    with pytest.raises(ValueError):
        parity(2)


@pytest.mark.parametrize(
    "text, value",
    [("3", Fraction(3)), ("-2/4", Fraction(-1, 2)), (" 7/3 ", Fraction(7, 3)), (5, Fraction(5))],
)
def test_parse_coeff(text, value):
    assert parse_coeff(text) == value


@pytest.mark.parametrize("bad", ["", "1/0", "x", True, 1.5])
def test_parse_coeff_rejects(bad):
    with pytest.raises(ValueError):
        parse_coeff(bad)


@given(st.fractions(max_denominator=50))
def test_format_parse_round_trip(c):
    assert parse_coeff(format_coeff(c)) == c
    assert parse_coeff(coeff_to_json(c)) == c


def test_json_keeps_integers():
    assert coeff_to_json(Fraction(4, 2)) == 2
    assert coeff_to_json(Fraction(-1, 3)) == "-1/3"

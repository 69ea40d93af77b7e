from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from multidiag import field
from multidiag.errors import DivisionByZero, ModeMismatch
from multidiag.field import EXACT_FIELD, FLOAT_FIELD, Field, GaussianRational, format_scalar

from conftest import gaussians, rationals

I = GaussianRational(0, 1)


def test_rational_sum():
    assert field.add(Fraction(1, 2), Fraction(1, 3)) == Fraction(5, 6)


def test_complex_product():
    assert field.mul(2 + 0j, 1j) == 2j
    assert field.mul(Fraction(2), I) == GaussianRational(0, 2)


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        field.div(Fraction(3, 4), Fraction(0))
    with pytest.raises(DivisionByZero):
        field.div(1 + 0j, 1e-300 + 0j)


def test_mode_mismatch():
    with pytest.raises(ModeMismatch):
        field.add(Fraction(1), 1.0)
    with pytest.raises(ModeMismatch):
        EXACT_FIELD.coerce(0.5)


@pytest.mark.parametrize("x, expected", [
    (Fraction(0, 1), True),
    (1e-300, True),
    (Fraction(5, 7), False),
    (1e-6, False),
])
def test_is_zero(x, expected):
    assert field.is_zero(x) is expected


def test_is_zero_relative_scale():
    assert FLOAT_FIELD.is_zero(1e-5 + 0j, scale=1e8)
    assert not FLOAT_FIELD.is_zero(1e-5 + 0j)
    assert Field("float", zero_tol=1e-3).is_zero(1e-4 + 0j)


def test_gaussian_collapses_to_fraction():
    z = GaussianRational(1, 2)
    assert z * z.conjugate() == Fraction(5)
    assert isinstance(z * z.conjugate(), Fraction)
    assert I * I == -1


@pytest.mark.parametrize("x, text", [
    (Fraction(5, 6), "5/6"),
    (Fraction(-3), "-3"),
    (GaussianRational(Fraction(1, 2), -3), "1/2-3i"),
    (GaussianRational(0, 2), "0+2i"),
    (0.5 + 0j, "0.5"),
    (0.1 - 2j, "0.1-2.0i"),
    (-0.0 + 0j, "0.0"),
])
def test_format(x, text):
    assert format_scalar(x) == text


@pytest.mark.parametrize("text, x", [
    ("5/6", Fraction(5, 6)),
    ("1e-3", Fraction(1, 1000)),
    ("1/2-3i", GaussianRational(Fraction(1, 2), -3)),
    ("-i", GaussianRational(0, -1)),
    ("2/3+1/5i", GaussianRational(Fraction(2, 3), Fraction(1, 5))),
])
def test_parse_exact(text, x):
    assert EXACT_FIELD.parse(text) == x


def test_parse_float_exponent():
    assert FLOAT_FIELD.parse("1e-3+2.5e+2i") == complex(1e-3, 250)
    assert FLOAT_FIELD.parse("-4") == -4 + 0j


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        EXACT_FIELD.parse("abc")
    with pytest.raises(ValueError):
        EXACT_FIELD.parse("1/0")


@given(gaussians)
def test_exact_text_round_trip(x):
    assert EXACT_FIELD.parse(format_scalar(x)) == x


@given(st.complex_numbers(allow_nan=False, allow_infinity=False))
def test_float_text_round_trip(x):
    assert FLOAT_FIELD.parse(format_scalar(x)) == x


@given(gaussians, gaussians, gaussians)
def test_exact_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    if a != 0:
        assert a * (1 / a) == 1


@given(rationals, rationals)
def test_canonical_form(a, b):
    q = a / b if b else a
    assert q.denominator > 0
    assert (q == a) == (format_scalar(q) == format_scalar(a))

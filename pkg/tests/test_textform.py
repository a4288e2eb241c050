import pytest

from birlin import Form, GaussianRational, ParseError, form_to_text, parse_form

from conftest import XYZ, random_form, seeded


def test_parse_simple():
    p = parse_form("2/3*x^2*y - z + 1", XYZ)
    x, y, z = (Form.variable(XYZ, v) for v in XYZ)
    from fractions import Fraction

    expected = (x ** 2 * y).scale(Fraction(2, 3)) - z + Form.one(XYZ)
    assert p == expected


def test_parse_complex_coefficient():
    from fractions import Fraction

    p = parse_form("1/2+1/2*i", ("x",))
    assert p.constant_value() == GaussianRational(Fraction(1, 2), Fraction(1, 2))


def test_whitespace_insignificant():
    a = parse_form("x ^ 2 * y + 3 / 4", XYZ)
    b = parse_form("x^2*y+3/4", XYZ)
    assert a == b


def test_parse_errors():
    with pytest.raises(ParseError):
        parse_form("x + @", XYZ)
    with pytest.raises(ParseError):
        parse_form("w + x", XYZ)
    with pytest.raises(ParseError):
        parse_form("", XYZ)
    with pytest.raises(ParseError):
        parse_form("1/0", XYZ)


def test_round_trip_random():
    rng = seeded(3)
    for _ in range(40):
        p = random_form(rng, XYZ)
        assert parse_form(form_to_text(p), XYZ) == p


def test_round_trip_zero_and_constants():
    assert form_to_text(Form.zero(XYZ)) == "0"
    assert parse_form("0", XYZ).is_zero()
    p = Form.constant(XYZ, GaussianRational(0, -1))
    assert parse_form(form_to_text(p), XYZ) == p


def test_mixed_coefficient_splits_into_two_terms():
    from fractions import Fraction

    p = Form.monomial(XYZ, (2, 0, 0), GaussianRational(Fraction(1, 2), Fraction(3, 4)))
    text = form_to_text(p)
    assert text == "1/2*x^2 + 3/4*i*x^2"
    assert parse_form(text, XYZ) == p

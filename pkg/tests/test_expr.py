"""Polynomial text parsing and the parse/print round trip."""

import random
from fractions import Fraction

import pytest

from quatsurf.errors import ParseError, UnknownVariableError
from quatsurf.expr import poly_parse, tokenize, unipoly_parse
from quatsurf.poly import MultiPoly, poly_print
from quatsurf.selftest import random_multipoly


def test_tokenize_kinds_and_positions():
    tokens = tokenize("x^2 - 3/2*y")
    kinds = [t[0] for t in tokens]
    assert kinds == ["name", "^", "int", "-", "int", "/", "int", "*", "name"]
    positions = [t[2] for t in tokens]
    assert positions == sorted(positions)
    with pytest.raises(ParseError):
        tokenize("x @ y")


def test_parse_simple_forms():
    x = MultiPoly.variable("x")
    y = MultiPoly.variable("y")
    assert poly_parse("x") == x
    assert poly_parse("-x") == -x
    assert poly_parse("x + y") == x + y
    assert poly_parse("x - 2*y") == x - 2 * y
    assert poly_parse("3/2") == MultiPoly.constant(Fraction(3, 2))
    assert poly_parse("x^2*y^3") == x ** 2 * y ** 3
    assert poly_parse("(x + y)^2") == (x + y) ** 2
    assert poly_parse("x*(y - 1)") == x * y - x
    with pytest.raises(ParseError):
        poly_parse("2x")  # products need an explicit *


def test_parse_rational_coefficients():
    p = poly_parse("1/2*x - 3/4")
    assert p.coefficient_of("x", 1).constant_value() == Fraction(1, 2)
    assert p.coefficient_of("x", 0).constant_value() == Fraction(-3, 4)


def test_parse_respects_variable_restriction():
    poly_parse("u^2 + 1", variables={"u"})
    with pytest.raises(UnknownVariableError):
        poly_parse("u + t", variables={"u"})
    with pytest.raises(UnknownVariableError):
        poly_parse("q", variables={"q"})  # not in the alphabet at all


def test_parse_error_positions():
    with pytest.raises(ParseError) as info:
        poly_parse("x + + y")
    assert info.value.position == 4
    with pytest.raises(ParseError):
        poly_parse("")
    with pytest.raises(ParseError):
        poly_parse("x +")
    with pytest.raises(ParseError):
        poly_parse("(x + y")
    with pytest.raises(ParseError):
        poly_parse("x ^ y")  # exponent must be a literal integer
    with pytest.raises(ParseError):
        poly_parse("x y z !")


def test_unipoly_parse():
    p = unipoly_parse("u^2 - u - 1", "u")
    assert p.coeffs == (-1, -1, 1)
    assert unipoly_parse("5", "w").is_constant()
    with pytest.raises(UnknownVariableError):
        unipoly_parse("u + w", "u")


def test_parse_print_roundtrip_random():
    rng = random.Random(2024)
    for _ in range(150):
        poly = random_multipoly(rng, names=("x", "y", "z", "u", "w"))
        assert poly_parse(poly_print(poly)) == poly


def test_print_parse_canonical_fixed_point():
    # printing a parsed string is idempotent
    for text in ("w*y^2 + 1*w*z^2 - 1*x^2", "u^2 - 1*v^2", "0", "-3/2", "x - 1"):
        parsed = poly_parse(text)
        assert poly_print(parsed) == text
        assert poly_parse(poly_print(parsed)) == parsed

"""Exact rational and polynomial arithmetic."""

import random
from fractions import Fraction

import pytest

from quatsurf.errors import DomainError, ParseError
from quatsurf.poly import (
    MultiPoly,
    UniPoly,
    content_primitive,
    format_rational,
    parse_rational,
    poly_print,
    primitive_part,
    substitute_rational,
)


def test_parse_rational_values():
    assert parse_rational("3") == Fraction(3)
    assert parse_rational("-3/2") == Fraction(-3, 2)
    assert parse_rational("+4/6") == Fraction(2, 3)
    assert parse_rational(" 7 ") == Fraction(7)


def test_parse_rational_rejects_garbage():
    for bad in ("", "3/0", "x", "1/2/3", "1 2"):
        with pytest.raises(ParseError):
            parse_rational(bad)


def test_parse_rational_accepts_exact_decimals():
    assert parse_rational("1.5") == Fraction(3, 2)
    assert parse_rational("-0.25") == Fraction(-1, 4)


def test_format_rational_roundtrip():
    rng = random.Random(41)
    for _ in range(200):
        value = Fraction(rng.randint(-99, 99), rng.randint(1, 99))
        assert parse_rational(format_rational(value)) == value


def test_format_rational_integers_have_no_slash():
    assert format_rational(Fraction(4, 2)) == "2"
    assert format_rational(Fraction(-6, 3)) == "-2"


def x():
    return MultiPoly.variable("x")


def y():
    return MultiPoly.variable("y")


def z():
    return MultiPoly.variable("z")


def test_ring_axioms_on_random_polynomials():
    # spot-check associativity, commutativity, distributivity with a seed
    rng = random.Random(42)

    def rand_poly():
        p = MultiPoly.zero()
        for _ in range(rng.randint(0, 4)):
            exps = {n: rng.randint(0, 3) for n in ("x", "y")}
            p = p + MultiPoly.term(Fraction(rng.randint(-9, 9)), exps)
        return p

    for _ in range(60):
        p, q, r = rand_poly(), rand_poly(), rand_poly()
        assert p + q == q + p
        assert p * q == q * p
        assert (p + q) + r == p + (q + r)
        assert (p * q) * r == p * (q * r)
        assert p * (q + r) == p * q + p * r
        assert p - p == MultiPoly.zero()


def test_power_and_negation():
    p = x() + y()
    assert p ** 2 == x() ** 2 + 2 * x() * y() + y() ** 2
    assert -p == MultiPoly.zero() - p
    assert p ** 0 == MultiPoly.constant(1)


def test_zero_coefficients_are_dropped():
    p = x() + MultiPoly.constant(-1) * x()
    assert p.is_zero()
    assert p.terms() == []
    assert p.total_degree() == -1


def test_terms_are_graded_lex_descending():
    # same degree: x^2 before x*y before y^2; higher total degree first
    p = y() ** 2 + x() * y() + x() ** 2 + x() ** 3 + MultiPoly.constant(5)
    degrees = [sum(key) for key, _ in p.terms()]
    assert degrees == sorted(degrees, reverse=True)
    assert poly_print(p) == "x^3 + 1*x^2 + 1*x*y + 1*y^2 + 5"


def test_print_golden_strings():
    assert poly_print(MultiPoly.zero()) == "0"
    assert poly_print(MultiPoly.constant(Fraction(-3, 2))) == "-3/2"
    assert poly_print(x() - y()) == "x - 1*y"
    assert poly_print(2 * x()) == "2*x"
    assert poly_print(-x() + MultiPoly.constant(1)) == "-1*x + 1"
    # only a leading +1 is left implicit; later unit coefficients stay explicit
    q = z() ** 2 - x() ** 2 - y() ** 2
    assert poly_print(q) == "-1*x^2 - 1*y^2 + 1*z^2"
    assert poly_print(y() ** 2 + z() ** 2) == "y^2 + 1*z^2"


def test_leading_term_and_queries():
    p = 3 * x() * y() ** 2 + z()
    key, coeff = p.leading()
    assert coeff == 3
    assert p.total_degree() == 3
    assert p.degree_in("y") == 2
    assert p.degree_in("z") == 1
    assert p.variables() == {"x", "y", "z"}
    assert p.constant_value() is None
    assert MultiPoly.constant(7).constant_value() == 7


def test_coefficient_of_strips_the_variable():
    p = x() ** 2 * y() + 2 * x() ** 2 + y()
    c = p.coefficient_of("x", 2)
    assert c == y() + MultiPoly.constant(2)


def test_evaluate_exactly():
    p = x() ** 2 - 2 * y()
    assert p.evaluate({"x": Fraction(3, 2), "y": Fraction(1, 8)}) == Fraction(2)
    with pytest.raises(DomainError):
        p.evaluate({"x": 1})


def test_substitute_expands():
    p = x() ** 2 + y()
    q = p.substitute("x", y() + MultiPoly.constant(1))
    assert q == y() ** 2 + 3 * y() + MultiPoly.constant(1)
    r = p.substitute("x", Fraction(1, 2))
    assert r == y() + MultiPoly.constant(Fraction(1, 4))


def test_content_primitive_normalizes():
    p = MultiPoly.constant(Fraction(2, 3)) * x() + MultiPoly.constant(Fraction(4, 3))
    content, prim = content_primitive(p)
    assert content * prim == p
    assert prim == x() + MultiPoly.constant(2)
    # sign lives in the content, leading coefficient stays positive
    content, prim = content_primitive(-2 * x() - 4 * y())
    assert content == -2
    assert prim == x() + 2 * y()
    assert content_primitive(MultiPoly.zero()) == (0, MultiPoly.zero())
    assert primitive_part(6 * x()) == x()


def test_unipoly_basics():
    p = UniPoly("u", [1, 0, 1])  # u^2 + 1
    assert p.degree() == 2
    assert p(2) == 5
    assert p(Fraction(1, 2)) == Fraction(5, 4)
    assert not p.is_zero()
    assert p.leading_coefficient() == 1
    assert p.constant_coefficient() == 1
    assert UniPoly("u", []).is_zero()
    assert UniPoly("u", [3]).is_constant()


def test_unipoly_multipoly_roundtrip():
    p = UniPoly("w", [Fraction(-1, 2), 0, 1])
    m = p.to_multipoly()
    assert m.degree_in("w") == 2
    back = UniPoly.from_multipoly(m, "w")
    assert back.coeffs == p.coeffs
    with pytest.raises(DomainError):
        UniPoly.from_multipoly(MultiPoly.variable("x") * MultiPoly.variable("y"))


def test_unipoly_primitive():
    p = UniPoly("u", [Fraction(2, 3), Fraction(4, 3)])
    prim = p.primitive()
    assert prim.coeffs == (1, 2)
    neg = UniPoly("u", [2, -4]).primitive()
    assert neg.leading_coefficient() > 0
    assert neg.coeffs == (-1, 2)


def test_substitute_rational_clears_denominators():
    # p(num/den) scaled to a primitive integer polynomial in the remaining vars
    p = UniPoly("u", [1, 0, 1])  # u^2 + 1
    num = MultiPoly.variable("y") ** 2
    den = MultiPoly.variable("z") ** 2 - MultiPoly.variable("x") ** 2
    result = substitute_rational(p, num, den)
    # y^4 + (z^2 - x^2)^2, already primitive
    expected = num ** 2 + den ** 2
    assert result == expected


def test_substitute_rational_rejects_zero_denominator():
    p = UniPoly("u", [1, 1])
    with pytest.raises(DomainError):
        substitute_rational(p, MultiPoly.variable("x"), MultiPoly.zero())

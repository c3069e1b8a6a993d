"""Conic points, pencil parametrization, and the coordinate ring."""

import random
from fractions import Fraction

import pytest

from quatsurf.classify import TernaryForm
from quatsurf.conic import (
    Conic,
    ConicPoint,
    RationalParametrization,
    conic_from_form,
    conic_point_to_form_zero,
    coordinate_ring_normal_form,
    find_point,
    form_zero_to_conic_point,
    parametrize_from_point,
    symbolic_parametrization_check,
)
from quatsurf.errors import DomainError, PointSearchError
from quatsurf.expr import poly_parse
from quatsurf.poly import MultiPoly, content_primitive, poly_print
from quatsurf.selftest import random_multipoly


def test_conic_validation_and_residual():
    conic = Conic(Fraction(2), Fraction(-1))
    assert conic.residual(1, 1, 1) == 0
    assert conic.contains(1, 1, 1)
    assert conic.residual(1, 0, 0) == -2
    assert conic.residual(Fraction(1, 2), 0, Fraction(1, 2)) == Fraction(-1, 4)
    with pytest.raises(DomainError):
        Conic(0, 1)
    with pytest.raises(DomainError):
        Conic(1, Fraction(0))


def test_conic_point_validation():
    point = ConicPoint(0, 1, 1)
    assert point.triple() == (0, 1, 1)
    assert point.to_json() == {"x": "0", "y": "1", "z": "1"}
    with pytest.raises(DomainError):
        ConicPoint(2, 2, 2)
    with pytest.raises(DomainError):
        ConicPoint(0, 0, 0)
    with pytest.raises(DomainError):
        ConicPoint(Fraction(1, 2), 1, 1)


def test_conic_from_form_identity_correspondence():
    form = TernaryForm(Fraction(1), Fraction(1))
    conic = conic_from_form(form)
    assert (conic.a, conic.b) == (1, 1)
    form = TernaryForm(Fraction(2), Fraction(-3))
    conic = conic_from_form(form)
    assert conic.a == Fraction(-1, 3)
    assert conic.b == Fraction(1, 2)
    # a zero of the form is a point of the conic with the same coordinates
    form = TernaryForm(Fraction(1), Fraction(1))
    conic = conic_from_form(form)
    assert form.evaluate(0, 1, 1) == 0
    assert conic.contains(0, 1, 1)


def test_form_zero_conic_point_roundtrip():
    form = TernaryForm(Fraction(1), Fraction(1))
    point = form_zero_to_conic_point(form, (0, 2, 2))
    assert point == ConicPoint(0, 1, 1)
    assert conic_point_to_form_zero(form, point) == (0, 1, 1)
    with pytest.raises(DomainError):
        form_zero_to_conic_point(form, (1, 1, 1))
    with pytest.raises(DomainError):
        form_zero_to_conic_point(form, (0, 0, 0))
    other = TernaryForm(Fraction(2), Fraction(3))
    with pytest.raises(DomainError):
        conic_point_to_form_zero(other, point)


def test_find_point_goldens():
    assert find_point(Conic(1, 1)).triple() == (0, 1, 1)
    assert find_point(Conic(2, -1)).triple() == (1, 1, 1)
    point = find_point(Conic(5, -1), 1)  # forces one deepening round
    assert point.triple() == (1, 1, 2)
    assert Conic(5, -1).contains(*point.triple())


def test_find_point_refuses_division_conics():
    with pytest.raises(PointSearchError):
        find_point(Conic(-1, -1))
    with pytest.raises(PointSearchError):
        find_point(Conic(2, 3))
    with pytest.raises(DomainError):
        find_point(Conic(1, 1), 0)


def test_parametrization_golden_pythagorean():
    conic = Conic(1, 1)
    par = parametrize_from_point(conic, ConicPoint(0, 1, 1))
    assert poly_print(par.X) == "2*u*v"
    assert poly_print(par.Y) == "u^2 - 1*v^2"
    assert poly_print(par.Z) == "u^2 + 1*v^2"
    assert par.base_parameter == (-1, 0)
    # classic triple via u=2, v=1
    assert par.evaluate(2, 1) == (4, 3, 5)


def test_parametrization_identity_and_joint_scaling():
    rng = random.Random(601)
    split_pairs = [(1, 1), (2, -1), (5, -1), (1, -1), (Fraction(1, 2), Fraction(1, 2)),
                   (Fraction(9, 2), -2), (3, -2), (-1, 2)]
    for a, b in split_pairs:
        conic = Conic(Fraction(a), Fraction(b))
        point = find_point(conic)
        par = parametrize_from_point(conic, point)
        identity = par.Z ** 2 - conic.a * par.X ** 2 - conic.b * par.Y ** 2
        assert identity.is_zero()
        # components are integers with nothing common to all three
        contents = [content_primitive(c)[0] for c in par.components() if not c.is_zero()]
        assert all(c.denominator == 1 for c in contents)
        from math import gcd

        overall = 0
        for c in contents:
            overall = gcd(overall, abs(c.numerator))
        assert overall == 1
        # the base parameter recovers the base point projectively
        x, y, z = par.evaluate(*par.base_parameter)
        px, py, pz = point.triple()
        assert (x, y, z) != (0, 0, 0)
        assert x * py == y * px and y * pz == z * py and x * pz == z * px
        # random parameters stay on the conic
        for _ in range(10):
            u, v = rng.randint(-9, 9), rng.randint(-9, 9)
            x, y, z = par.evaluate(u, v)
            assert conic.residual(x, y, z) == 0


def test_parametrization_rejects_bad_input():
    conic = Conic(1, 1)
    with pytest.raises(DomainError):
        parametrize_from_point(conic, ConicPoint(1, 1, 1))
    u = MultiPoly.variable("u")
    v = MultiPoly.variable("v")
    with pytest.raises(DomainError):
        RationalParametrization(conic, u * v, u * v, u * v, (1, 0))


def test_parametrization_pivot_variants():
    # points with leading zeros exercise the plane index split
    conic = Conic(1, 1)
    for triple in ((0, 1, 1), (1, 0, 1), (3, 4, 5), (-3, 4, 5)):
        point = ConicPoint(*triple)
        assert conic.contains(*triple)
        par = parametrize_from_point(conic, point)
        x, y, z = par.evaluate(*par.base_parameter)
        px, py, pz = triple
        assert x * py == y * px and y * pz == z * py and x * pz == z * px


def test_symbolic_parametrization_check():
    assert symbolic_parametrization_check() is True
    assert symbolic_parametrization_check(-1, -1) is True
    assert symbolic_parametrization_check(2, 3) is True
    assert symbolic_parametrization_check(Fraction(-3, 2), Fraction(5, 7)) is True
    u = MultiPoly.variable("u")
    assert symbolic_parametrization_check(z_perturbation=u) is False
    assert symbolic_parametrization_check(-1, -1, z_perturbation=u) is False
    assert symbolic_parametrization_check(z_perturbation=MultiPoly.constant(1)) is False
    with pytest.raises(DomainError):
        symbolic_parametrization_check(0, 1)


def test_coordinate_ring_golden_and_fixed_points():
    form = TernaryForm(Fraction(-1), Fraction(-1))
    z3 = poly_parse("z^3")
    assert poly_print(coordinate_ring_normal_form(z3, form)) == "-1*x^2*z - 1*y^2*z"
    # the form itself is in the ideal
    assert coordinate_ring_normal_form(form.as_multipoly(), form).is_zero()
    # z-free polynomials are untouched
    p = poly_parse("x^2*y - 3*y + 1/2")
    assert coordinate_ring_normal_form(p, form) == p
    assert coordinate_ring_normal_form(MultiPoly.zero(), form).is_zero()


def test_coordinate_ring_is_linear_idempotent_and_kills_the_ideal():
    rng = random.Random(602)
    form = TernaryForm(Fraction(2), Fraction(-3))
    q = form.as_multipoly()
    for _ in range(40):
        p1 = random_multipoly(rng)
        p2 = random_multipoly(rng)
        n1 = coordinate_ring_normal_form(p1, form)
        n2 = coordinate_ring_normal_form(p2, form)
        combined = coordinate_ring_normal_form(p1 + p2, form)
        assert combined == n1 + n2
        assert coordinate_ring_normal_form(n1, form) == n1
        assert n1.degree_in("z") <= 1
        # multiples of the form vanish
        assert coordinate_ring_normal_form(p1 * q, form).is_zero()
        # reduction is the identity modulo the ideal: same values on the variety
        assert coordinate_ring_normal_form(p1 * q + p2, form) == n2


def test_coordinate_ring_preserves_values_on_the_variety():
    # (3,4,5) is a zero of the (1,1) form -x^2 - y^2 + z^2
    form = TernaryForm(Fraction(1), Fraction(1))
    assert form.evaluate(3, 4, 5) == 0
    rng = random.Random(603)
    at = {"x": 3, "y": 4, "z": 5}
    for _ in range(25):
        p = random_multipoly(rng)
        reduced = coordinate_ring_normal_form(p, form)
        assert reduced.evaluate(at) == p.evaluate(at)

"""Plane conics z^2 = a*x^2 + b*y^2 over the rationals.

Construction from the diagonal ternary form, exhaustive rational point
search, the pencil-of-lines parametrization through a known point, the
symbolic square-root parametrization identity, and normal forms modulo the
ideal generated by the form.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .classify import (
    TernaryForm,
    first_diagonal_zero,
    integer_diagonal,
    is_division,
)
from .errors import DomainError, PointSearchError
from .poly import VAR_INDEX, MultiPoly
from .quaternion import QuaternionAlgebra
from .tower import Tower


@dataclass(frozen=True)
class Conic:
    """The projective plane curve z^2 = a*x^2 + b*y^2."""

    a: Fraction
    b: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))
        if not self.a or not self.b:
            raise DomainError("conic coefficients a, b must be nonzero")

    def residual(self, x, y, z):
        """z^2 - a*x^2 - b*y^2; zero exactly on the curve."""
        x, y, z = Fraction(x), Fraction(y), Fraction(z)
        return z * z - self.a * x * x - self.b * y * y

    def contains(self, x, y, z):
        return self.residual(x, y, z) == 0


@dataclass(frozen=True)
class ConicPoint:
    """Primitive integer projective point."""

    x: int
    y: int
    z: int

    def __post_init__(self):
        if not all(isinstance(c, int) for c in (self.x, self.y, self.z)):
            raise DomainError("conic points have integer coordinates")
        if gcd(gcd(self.x, self.y), self.z) != 1:
            raise DomainError("conic points are primitive (gcd 1, not all zero)")

    def triple(self):
        return (self.x, self.y, self.z)

    def to_json(self):
        return {"x": str(self.x), "y": str(self.y), "z": str(self.z)}


def conic_from_form(form):
    """The conic whose rational points are the form's nontrivial zeros.

    Dividing -a*x^2 - b*y^2 + a*b*z^2 by a*b turns it into
    z^2 - x^2/b - y^2/a, so the conic has a' = 1/b, b' = 1/a and the
    coordinate correspondence is the identity.
    """
    return Conic(1 / form.b, 1 / form.a)


def form_zero_to_conic_point(form, triple):
    """Carry a zero of the form to the matching point of conic_from_form.

    The map is the identity on coordinates (only the equation is rescaled);
    the triple is reduced to a primitive point.
    """
    x, y, z = (int(c) for c in triple)
    if form.evaluate(x, y, z) != 0:
        raise DomainError("not a zero of the form")
    g = gcd(gcd(x, y), z)
    if g == 0:
        raise DomainError("the zero triple must be nontrivial")
    return ConicPoint(x // g, y // g, z // g)


def conic_point_to_form_zero(form, point):
    """Inverse direction of the identity correspondence, with a check."""
    if form.evaluate(*point.triple()) != 0:
        raise DomainError("point does not satisfy the form")
    return point.triple()


def find_point(conic, initial_bound=10):
    """First rational point in the fixed search order, by iterative deepening.

    Refuses division-algebra conics up front (they have no rational points);
    for split conics a point exists, so the deepening terminates.
    """
    if initial_bound < 1:
        raise DomainError("the search bound must be at least 1")
    if is_division(QuaternionAlgebra(conic.a, conic.b)):
        raise PointSearchError(
            "the conic has no rational points (division algebra)"
        )
    coeffs = integer_diagonal(conic.a, conic.b, Fraction(-1))
    bound = initial_bound
    while True:
        found = first_diagonal_zero(coeffs, bound)
        if found is not None:
            return ConicPoint(*found)
        bound *= 10


@dataclass(frozen=True)
class RationalParametrization:
    """Homogeneous degree-2 map (u,v) -> (X,Y,Z) landing on a conic.

    The defining identity Z^2 - a*X^2 - b*Y^2 = 0 is checked exactly at
    construction, as polynomials.  base_parameter marks the (u,v) at which
    the map returns the point the parametrization was built from.
    """

    conic: Conic
    X: MultiPoly
    Y: MultiPoly
    Z: MultiPoly
    base_parameter: tuple

    def __post_init__(self):
        identity = (
            self.Z * self.Z
            - self.conic.a * self.X * self.X
            - self.conic.b * self.Y * self.Y
        )
        if not identity.is_zero():
            raise DomainError("parametrization does not satisfy the conic")

    def evaluate(self, u_value, v_value):
        point = {"u": Fraction(u_value), "v": Fraction(v_value)}
        return (
            self.X.evaluate(point),
            self.Y.evaluate(point),
            self.Z.evaluate(point),
        )

    def components(self):
        return (self.X, self.Y, self.Z)


def _joint_integer_scale(components):
    # one common rescaling keeps the triple projectively the same
    num_gcd = 0
    den_lcm = 1
    for poly in components:
        for _, coeff in poly.terms():
            num_gcd = gcd(num_gcd, abs(coeff.numerator))
            den_lcm = den_lcm * coeff.denominator // gcd(den_lcm, coeff.denominator)
    scale = Fraction(den_lcm, num_gcd)
    return [poly * scale for poly in components]


def parametrize_from_point(conic, point):
    """Sweep the pencil of lines through a known rational point.

    The second intersection of the line through the point P and the moving
    point D = u*e_i1 + v*e_i2 is q(D)*P - 2*B(P,D)*D, where q is the conic's
    quadratic form and B its polar form.  The plane index split is chosen so
    P is not on the (i1,i2) coordinate plane, which makes the designated
    base parameter land exactly on P.
    """
    if not conic.contains(*point.triple()):
        raise DomainError("point is not on the conic")
    diag = (conic.a, conic.b, Fraction(-1))
    coords = point.triple()
    pivot = next(i for i in range(3) if coords[i])
    i1, i2 = (i for i in range(3) if i != pivot)
    u = MultiPoly.variable("u")
    v = MultiPoly.variable("v")
    q_of_d = diag[i1] * u * u + diag[i2] * v * v
    polar = diag[i1] * coords[i1] * u + diag[i2] * coords[i2] * v
    moving = {i1: u, i2: v}
    components = []
    for i in range(3):
        piece = q_of_d * coords[i]
        if i in moving:
            piece = piece - 2 * polar * moving[i]
        components.append(piece)
    components = _joint_integer_scale(components)
    base = (diag[i2] * coords[i2], -diag[i1] * coords[i1])
    return RationalParametrization(conic, *components, base_parameter=base)


def symbolic_parametrization_check(a_value=None, b_value=None, z_perturbation=None):
    """Verify the square-root parametrization of the conic symbolically.

    With s, t, m adjoined as square roots of -a, -b, -1, the map
    x = (u^2 - v^2)/s, y = 2uv/t, z = m(u^2 + v^2) should satisfy
    z^2 - a*x^2 - b*y^2 = 0.  The check clears the two inverses by
    multiplying through by (s*t)^2 and reduces in the quotient tower; by
    hand, the cleared identity is -(u^2+v^2)^2 + (u^2-v^2)^2 + 4u^2v^2 = 0.

    a and b stay symbolic (the free variables x and y stand in for them)
    unless rational values are supplied.  A nonzero z_perturbation must break
    the identity; that is the tamper detection path.
    """

    def parameter(value, name):
        if value is None:
            return MultiPoly.variable(name)
        value = Fraction(value)
        if not value:
            raise DomainError("parameters must be nonzero")
        return MultiPoly.constant(value)

    a_poly = parameter(a_value, "x")
    b_poly = parameter(b_value, "y")
    s = MultiPoly.variable("s")
    t = MultiPoly.variable("t")
    m = MultiPoly.variable("m")
    tower = Tower([("s", s * s + a_poly), ("t", t * t + b_poly), ("m", m * m + 1)])
    u = MultiPoly.variable("u")
    v = MultiPoly.variable("v")
    z_expr = m * (u * u + v * v)
    if z_perturbation is not None:
        z_expr = z_expr + z_perturbation
    cleared = (
        s * s * t * t * z_expr * z_expr
        - a_poly * t * t * (u * u - v * v) ** 2
        - 4 * b_poly * s * s * (u * v) ** 2
    )
    return tower.element(cleared).is_zero()


def coordinate_ring_normal_form(poly, form):
    """Normal form modulo the principal ideal of the ternary form.

    Every z^2 rewrites to (a*x^2 + b*y^2)/(a*b) until the z-degree drops
    below 2; the form itself reduces to zero and z-free input is fixed.
    The rewriting is linear over the coefficients, hence additive.
    """
    a, b = form.a, form.b
    rewrite = (MultiPoly.term(a, {"x": 2}) + MultiPoly.term(b, {"y": 2})) * (
        1 / (a * b)
    )
    z_index = VAR_INDEX["z"]
    powers = {0: MultiPoly.constant(1)}
    result = MultiPoly.zero()
    for key, coeff in poly.terms():
        half, parity = divmod(key[z_index], 2)
        if half not in powers:
            powers[half] = rewrite**half
        stripped = list(key)
        stripped[z_index] = parity
        result = result + MultiPoly({tuple(stripped): coeff}) * powers[half]
    return result

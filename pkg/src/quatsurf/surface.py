"""The parameter surface built from minimal polynomials of a and b.

Replacing the rational parameters of the diagonal form with variables u, w
gives the five-variable form -u*x^2 - w*y^2 + u*w*z^2.  Solving it for u
and for w produces two rational expressions; clearing each through the
minimal polynomial of the corresponding algebraic parameter produces the
two hypersurface equations presented here.  Specializing back to rational
parameters must recover the diagonal ternary form up to a rational unit,
and both equations must vanish identically in the quotient tower where u,
w, z satisfy their defining relations.
"""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .classify import TernaryForm, factorize
from .errors import DomainError, UnverifiedIrreducibilityWarning
from .poly import MultiPoly, UniPoly, poly_print, substitute_rational
from .tower import Tower


def minimal_poly_of_rational(value, variable="u"):
    """Primitive degree-1 minimal polynomial d*var - n of n/d in lowest terms."""
    value = Fraction(value)
    return UniPoly(variable, [-value.numerator, value.denominator])


def build_parametric_form():
    """-u*x^2 - w*y^2 + u*w*z^2: the diagonal form with parameters as variables."""
    return (
        MultiPoly.term(-1, {"u": 1, "x": 2})
        + MultiPoly.term(-1, {"w": 1, "y": 2})
        + MultiPoly.term(1, {"u": 1, "w": 1, "z": 2})
    )


def solved_expressions():
    """The form solved for u and for w, as (numerator, denominator) pairs.

    u = w*y^2 / (w*z^2 - x^2) and w = u*x^2 / (u*z^2 - y^2).  Each pair is
    valid away from its denominator's zero locus (w*z^2 = x^2, respectively
    u*z^2 = y^2); those loci are excluded, not resolved.
    """
    u_pair = (
        MultiPoly.term(1, {"w": 1, "y": 2}),
        MultiPoly.term(1, {"w": 1, "z": 2}) - MultiPoly.term(1, {"x": 2}),
    )
    w_pair = (
        MultiPoly.term(1, {"u": 1, "x": 2}),
        MultiPoly.term(1, {"u": 1, "z": 2}) - MultiPoly.term(1, {"y": 2}),
    )
    return u_pair, w_pair


def solved_expression_identity_check():
    """Both solved expressions clear the parametric form to the zero polynomial."""
    form = build_parametric_form()
    (u_num, u_den), (w_num, w_den) = solved_expressions()
    u_cleared = form.coefficient_of("u", 1) * u_num + form.coefficient_of("u", 0) * u_den
    w_cleared = form.coefficient_of("w", 1) * w_num + form.coefficient_of("w", 0) * w_den
    return u_cleared.is_zero() and w_cleared.is_zero()


def _divisors(n):
    values = [1]
    for prime, exponent in factorize(n).items():
        values = [d * prime**k for d in values for k in range(exponent + 1)]
    return sorted(values)


def _is_rational_square(value):
    if value < 0:
        return False
    num, den = value.numerator, value.denominator
    return isqrt(num) ** 2 == num and isqrt(den) ** 2 == den


def _check_irreducible(poly):
    """Cheap irreducibility screen over the rationals.

    Degrees 2 and 3 are decided exactly (a factorization would need a
    rational root: discriminant test, then root search over divisor
    candidates).  Higher degrees only get a warning; full factorization is
    out of scope.
    """
    degree = poly.degree()
    if degree == 1:
        return
    if degree == 2:
        c0, c1, c2 = poly.coeffs
        if _is_rational_square(c1 * c1 - 4 * c2 * c0):
            raise DomainError(f"{poly} factors over the rationals")
        return
    if degree == 3:
        constant = int(poly.coeffs[0])
        leading = int(poly.coeffs[-1])
        for n in _divisors(constant):
            for d in _divisors(leading):
                for root in (Fraction(n, d), Fraction(-n, d)):
                    if poly(root) == 0:
                        raise DomainError(
                            f"{poly} has the rational root {root}"
                        )
        return
    warnings.warn(
        f"irreducibility of {poly} (degree {degree}) was not verified",
        UnverifiedIrreducibilityWarning,
        stacklevel=3,
    )


def _validated_parameter(poly, variable):
    if not isinstance(poly, UniPoly):
        raise DomainError("parameter polynomials must be univariate")
    if poly.variable != variable:
        raise DomainError(
            f"expected a polynomial in {variable!r}, got {poly.variable!r}"
        )
    if poly.is_zero():
        raise DomainError("parameter polynomial is zero")
    if poly.is_constant():
        raise DomainError("parameter polynomial must be nonconstant")
    poly = poly.primitive()
    if not poly.constant_coefficient():
        # root 0 encodes the parameter 0, which is not an algebra parameter
        raise DomainError(f"{poly} vanishes at 0; the parameter must be nonzero")
    _check_irreducible(poly)
    return poly


@dataclass(frozen=True)
class SurfacePresentation:
    """The two hypersurface equations together with their provenance.

    eq1 lives in {x,y,z,w} with deg_w = deg(p); eq2 lives in {x,y,z,u} with
    deg_u = deg(q); both are primitive with positive leading coefficient.
    """

    p: UniPoly
    q: UniPoly
    parametric_form: MultiPoly
    eq1: MultiPoly
    eq2: MultiPoly

    def json_record(self):
        return {
            "p": str(self.p),
            "q": str(self.q),
            "eq1": poly_print(self.eq1),
            "eq2": poly_print(self.eq2),
        }


def build_surface(p, q):
    """Clear p(u) through u = w*y^2/(w*z^2 - x^2), and q(w) symmetrically."""
    p = _validated_parameter(p, "u")
    q = _validated_parameter(q, "w")
    (u_num, u_den), (w_num, w_den) = solved_expressions()
    return SurfacePresentation(
        p=p,
        q=q,
        parametric_form=build_parametric_form(),
        eq1=substitute_rational(p, u_num, u_den),
        eq2=substitute_rational(q, w_num, w_den),
    )


def _rational_multiple(candidate, target):
    if candidate.is_zero() or target.is_zero():
        return False
    return candidate * target.leading()[1] == target * candidate.leading()[1]


def specialize_check(a, b):
    """Substituting w = b into eq1 and u = a into eq2 recovers the form.

    Both specializations must be nonzero rational multiples of
    -a*x^2 - b*y^2 + a*b*z^2, exactly.
    """
    a = Fraction(a)
    b = Fraction(b)
    surface = build_surface(
        minimal_poly_of_rational(a, "u"), minimal_poly_of_rational(b, "w")
    )
    target = TernaryForm(a, b).as_multipoly()
    return _rational_multiple(
        surface.eq1.substitute("w", b), target
    ) and _rational_multiple(surface.eq2.substitute("u", a), target)


def tower_consistency_check(p, q):
    """Both equations vanish in the quotient ring they claim to cut out.

    The tower adjoins u with relation p, w with relation q, then z with
    u*w*z^2 = u*x^2 + w*y^2 (monic after inverting u*w, which the nonzero
    constant terms of p and q guarantee); x and y stay free.
    """
    surface = build_surface(p, q)
    z_relation = (
        MultiPoly.term(1, {"u": 1, "w": 1, "z": 2})
        - MultiPoly.term(1, {"u": 1, "x": 2})
        - MultiPoly.term(1, {"w": 1, "y": 2})
    )
    tower = Tower([("u", surface.p), ("w", surface.q), ("z", z_relation)])
    return (
        tower.element(surface.eq1).is_zero()
        and tower.element(surface.eq2).is_zero()
    )


_IDEAL_TEMPLATE = "ring R = QQ[x,y,z,u,w];\nideal I = ({eq1}, {eq2});\n"


def emit_record(record, format="text"):
    """Render a surface record; every format ends with one newline."""
    if format == "text":
        return f"{record['eq1']}\n{record['eq2']}\n"
    if format == "json":
        return json.dumps(record) + "\n"
    if format == "ideal":
        return _IDEAL_TEMPLATE.format(eq1=record["eq1"], eq2=record["eq2"])
    raise DomainError(f"unknown output format {format!r}")


def emit_surface(surface, format="text"):
    return emit_record(surface.json_record(), format)

"""Quaternion algebras (a,b over the rationals) and their arithmetic.

The algebra has basis 1, i, j, k with i^2 = a, j^2 = b, k = ij and ji = -ij,
which forces k^2 = -ab, ik = a*j, ki = -a*j, jk = -b*i, kj = b*i.  The
multiplication below hard-codes the resulting 4x4 table; the test suite
re-derives the table from the defining relations by word rewriting and
compares.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import AlgebraMismatchError, DomainError, ParseError, ZeroNormError
from .expr import tokenize
from .poly import format_rational

_BASIS = ("i", "j", "k")


@dataclass(frozen=True)
class QuaternionAlgebra:
    a: Fraction
    b: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))
        if not self.a or not self.b:
            raise DomainError("algebra parameters a, b must be nonzero")

    def element(self, x0=0, x=0, y=0, z=0):
        return Quaternion(self, Fraction(x0), Fraction(x), Fraction(y), Fraction(z))

    def one(self):
        return self.element(1)

    def i(self):
        return self.element(0, 1)

    def j(self):
        return self.element(0, 0, 1)

    def k(self):
        return self.element(0, 0, 0, 1)

    def from_text(self, text):
        return quaternion_parse(self, text)


@dataclass(frozen=True)
class Quaternion:
    """x0 + x*i + y*j + z*k with exact rational coordinates."""

    algebra: QuaternionAlgebra
    x0: Fraction
    x: Fraction
    y: Fraction
    z: Fraction

    def _coordinates(self):
        return (self.x0, self.x, self.y, self.z)

    def _same_algebra(self, other):
        if other.algebra != self.algebra:
            raise AlgebraMismatchError(
                "operands live in different quaternion algebras"
            )

    def __add__(self, other):
        if not isinstance(other, Quaternion):
            return NotImplemented
        self._same_algebra(other)
        return Quaternion(
            self.algebra,
            self.x0 + other.x0,
            self.x + other.x,
            self.y + other.y,
            self.z + other.z,
        )

    def __sub__(self, other):
        if not isinstance(other, Quaternion):
            return NotImplemented
        self._same_algebra(other)
        return Quaternion(
            self.algebra,
            self.x0 - other.x0,
            self.x - other.x,
            self.y - other.y,
            self.z - other.z,
        )

    def __neg__(self):
        return Quaternion(self.algebra, -self.x0, -self.x, -self.y, -self.z)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            r = Fraction(other)
            return Quaternion(self.algebra, self.x0 * r, self.x * r, self.y * r, self.z * r)
        if not isinstance(other, Quaternion):
            return NotImplemented
        self._same_algebra(other)
        a = self.algebra.a
        b = self.algebra.b
        s0, sx, sy, sz = self._coordinates()
        o0, ox, oy, oz = other._coordinates()
        return Quaternion(
            self.algebra,
            s0 * o0 + a * sx * ox + b * sy * oy - a * b * sz * oz,
            s0 * ox + sx * o0 + b * (sz * oy - sy * oz),
            s0 * oy + sy * o0 + a * (sx * oz - sz * ox),
            s0 * oz + sz * o0 + (sx * oy - sy * ox),
        )

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def conjugate(self):
        return Quaternion(self.algebra, self.x0, -self.x, -self.y, -self.z)

    def norm(self):
        """x0^2 - a x^2 - b y^2 + ab z^2, the multiplicative norm form."""
        a = self.algebra.a
        b = self.algebra.b
        return (
            self.x0 * self.x0
            - a * self.x * self.x
            - b * self.y * self.y
            + a * b * self.z * self.z
        )

    def inverse(self):
        n = self.norm()
        if not n:
            raise ZeroNormError("norm is zero, no inverse exists")
        conj = self.conjugate()
        return Quaternion(self.algebra, conj.x0 / n, conj.x / n, conj.y / n, conj.z / n)

    def is_zero(self):
        return not (self.x0 or self.x or self.y or self.z)

    def to_text(self):
        """Canonical form: all four components, explicit magnitudes."""
        parts = [format_rational(self.x0)]
        for coeff, symbol in ((self.x, "i"), (self.y, "j"), (self.z, "k")):
            sep = " - " if coeff < 0 else " + "
            parts.append(f"{sep}{format_rational(abs(coeff))}*{symbol}")
        return "".join(parts)

    def to_json(self):
        return {
            "a": format_rational(self.algebra.a),
            "b": format_rational(self.algebra.b),
            "x0": format_rational(self.x0),
            "x": format_rational(self.x),
            "y": format_rational(self.y),
            "z": format_rational(self.z),
        }

    def __str__(self):
        return self.to_text()


def quaternion_parse(algebra, text):
    """Parse 'x0 + x*i + y*j + z*k' style text (terms optional, any order)."""
    tokens = tokenize(text)
    if not tokens:
        raise ParseError("empty quaternion text", 0)
    coords = {"1": Fraction(0), "i": Fraction(0), "j": Fraction(0), "k": Fraction(0)}
    pos = 0

    def take():
        nonlocal pos
        token = tokens[pos] if pos < len(tokens) else ("end", None, None)
        pos += 1
        return token

    def peek():
        return tokens[pos] if pos < len(tokens) else ("end", None, None)

    sign = 1
    if peek()[0] in ("+", "-"):
        sign = -1 if take()[0] == "-" else 1
    while True:
        coeff, basis = _parse_quaternion_term(take, peek)
        coords[basis] += sign * coeff
        kind, _, position = take()
        if kind == "end":
            break
        if kind not in ("+", "-"):
            raise ParseError(f"expected '+' or '-', found {kind!r}", position)
        sign = -1 if kind == "-" else 1
    return algebra.element(coords["1"], coords["i"], coords["j"], coords["k"])


def _parse_quaternion_term(take, peek):
    kind, value, position = take()
    if kind == "int":
        coeff = Fraction(value)
        if peek()[0] == "/":
            take()
            dkind, dvalue, dposition = take()
            if dkind != "int" or dvalue == 0:
                raise ParseError("denominator must be a nonzero integer", dposition)
            coeff = Fraction(coeff, dvalue)
        if peek()[0] == "*":
            take()
            bkind, bvalue, bposition = take()
            if bkind != "name" or bvalue not in _BASIS:
                raise ParseError(f"expected i, j or k, found {bvalue!r}", bposition)
            return coeff, bvalue
        return coeff, "1"
    if kind == "name" and value in _BASIS:
        return Fraction(1), value
    raise ParseError(f"unexpected token {value!r} in quaternion", position)

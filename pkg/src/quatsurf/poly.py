"""Sparse exact polynomial arithmetic over a fixed variable alphabet.

Coefficients are arbitrary-precision rationals (``fractions.Fraction``).
The variable alphabet is fixed once and for all:

    x, y, z, u, w, v, s, t, m

and the canonical order on terms is graded lexicographic with
x > y > z > u > w > v > s > t > m.  All printing is done in that order,
descending, so equal polynomials always print identically.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import DomainError

ALPHABET = ("x", "y", "z", "u", "w", "v", "s", "t", "m")
VAR_INDEX = {name: i for i, name in enumerate(ALPHABET)}
_NVARS = len(ALPHABET)
_ZERO_KEY = (0,) * _NVARS

# Order in which variables are written inside one printed monomial.  The
# tower/parameter letters act like coefficients, so they come first; terms
# still *compare* by the alphabet order above.
_PRINT_ORDER = ("u", "w", "v", "s", "t", "m", "x", "y", "z")

_ONE = Fraction(1)


def parse_rational(text):
    """Exact rational from a string like '-3/2' or '7'."""
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError) as exc:
        from .errors import ParseError

        raise ParseError(f"not a rational number: {text!r}") from exc


def format_rational(value):
    return str(Fraction(value))


def _grlex_key(exps):
    return (sum(exps), exps)


def _as_coefficient(value):
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"cannot use {type(value).__name__} as a coefficient")


class MultiPoly:
    """Immutable sparse multivariate polynomial over the fixed alphabet.

    Terms are stored as {exponent 9-tuple: nonzero Fraction}.  Instances are
    value objects: hashable, comparable, and never mutated after creation.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for key, coeff in terms.items():
                coeff = _as_coefficient(coeff)
                if coeff:
                    key = tuple(key)
                    if len(key) != _NVARS or any(e < 0 for e in key):
                        raise DomainError(f"bad exponent key {key!r}")
                    clean[key] = coeff
        self._terms = clean

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def constant(cls, value):
        return cls({_ZERO_KEY: _as_coefficient(value)})

    @classmethod
    def variable(cls, name):
        if name not in VAR_INDEX:
            raise DomainError(f"unknown variable {name!r}")
        key = [0] * _NVARS
        key[VAR_INDEX[name]] = 1
        return cls({tuple(key): _ONE})

    @classmethod
    def term(cls, coeff, exponents=None):
        """Single term, e.g. ``MultiPoly.term(-2, {"u": 1, "x": 2})``."""
        key = [0] * _NVARS
        for name, e in (exponents or {}).items():
            if name not in VAR_INDEX:
                raise DomainError(f"unknown variable {name!r}")
            key[VAR_INDEX[name]] = e
        return cls({tuple(key): _as_coefficient(coeff)})

    # -- ring operations ---------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.constant(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        merged = dict(self._terms)
        for key, coeff in other._terms.items():
            total = merged.get(key, 0) + coeff
            if total:
                merged[key] = total
            else:
                merged.pop(key, None)
        out = MultiPoly.__new__(MultiPoly)
        out._terms = merged
        return out

    __radd__ = __add__

    def __neg__(self):
        out = MultiPoly.__new__(MultiPoly)
        out._terms = {key: -coeff for key, coeff in self._terms.items()}
        return out

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return MultiPoly.zero()
            out = MultiPoly.__new__(MultiPoly)
            out._terms = {k: c * other for k, c in self._terms.items()}
            return out
        if not isinstance(other, MultiPoly):
            return NotImplemented
        product = {}
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                key = tuple(a + b for a, b in zip(k1, k2))
                total = product.get(key, 0) + c1 * c2
                if total:
                    product[key] = total
                else:
                    product.pop(key, None)
        out = MultiPoly.__new__(MultiPoly)
        out._terms = product
        return out

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            raise DomainError("polynomial powers must be nonnegative integers")
        result = MultiPoly.constant(1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    # -- value-object protocol ----------------------------------------------

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __bool__(self):
        return bool(self._terms)

    def __repr__(self):
        return f"MultiPoly({poly_print(self)!r})"

    def __str__(self):
        return poly_print(self)

    # -- queries -------------------------------------------------------------

    def is_zero(self):
        return not self._terms

    def terms(self):
        """Terms as (exponent-tuple, coefficient), graded-lex descending."""
        return sorted(self._terms.items(), key=lambda kv: _grlex_key(kv[0]), reverse=True)

    def leading(self):
        """(exponents, coefficient) of the graded-lex largest term."""
        if not self._terms:
            raise DomainError("the zero polynomial has no leading term")
        key = max(self._terms, key=_grlex_key)
        return key, self._terms[key]

    def total_degree(self):
        if not self._terms:
            return -1
        return max(sum(key) for key in self._terms)

    def degree_in(self, name):
        """Largest exponent of ``name``; 0 for the zero polynomial."""
        idx = VAR_INDEX[name]
        if not self._terms:
            return 0
        return max(key[idx] for key in self._terms)

    def variables(self):
        used = set()
        for key in self._terms:
            for i, e in enumerate(key):
                if e:
                    used.add(ALPHABET[i])
        return used

    def constant_value(self):
        """The Fraction value if this polynomial is constant, else None."""
        if not self._terms:
            return Fraction(0)
        if len(self._terms) == 1 and _ZERO_KEY in self._terms:
            return self._terms[_ZERO_KEY]
        return None

    def coefficient_of(self, name, power):
        """Coefficient polynomial of name**power (the variable stripped out)."""
        idx = VAR_INDEX[name]
        picked = {}
        for key, coeff in self._terms.items():
            if key[idx] == power:
                stripped = list(key)
                stripped[idx] = 0
                picked[tuple(stripped)] = coeff
        out = MultiPoly.__new__(MultiPoly)
        out._terms = picked
        return out

    # -- evaluation and substitution ------------------------------------------

    def evaluate(self, values):
        """Exact value at a point; every variable that occurs must be given."""
        point = {}
        for name, val in values.items():
            if name not in VAR_INDEX:
                raise DomainError(f"unknown variable {name!r}")
            point[VAR_INDEX[name]] = Fraction(val)
        total = Fraction(0)
        for key, coeff in self._terms.items():
            term = coeff
            for i, e in enumerate(key):
                if e:
                    if i not in point:
                        raise DomainError(f"no value given for {ALPHABET[i]!r}")
                    term *= point[i] ** e
            total += term
        return total

    def substitute(self, name, replacement):
        """Replace a variable by a polynomial (or rational) and expand."""
        if not isinstance(replacement, MultiPoly):
            replacement = MultiPoly.constant(replacement)
        idx = VAR_INDEX[name]
        powers = {0: MultiPoly.constant(1)}
        result = MultiPoly.zero()
        for key, coeff in self._terms.items():
            e = key[idx]
            if e not in powers:
                powers[e] = replacement ** e
            rest = list(key)
            rest[idx] = 0
            monomial = MultiPoly({tuple(rest): coeff})
            result = result + monomial * powers[e]
        return result


def content_primitive(poly):
    """Split ``poly`` as content * primitive part.

    The primitive part has coprime integer coefficients and a positive
    graded-lex leading coefficient; the content is a rational carrying the
    sign.  The zero polynomial returns (0, 0).
    """
    if poly.is_zero():
        return Fraction(0), poly
    num_gcd = 0
    den_lcm = 1
    for coeff in poly._terms.values():
        num_gcd = math.gcd(num_gcd, abs(coeff.numerator))
        den_lcm = den_lcm * coeff.denominator // math.gcd(den_lcm, coeff.denominator)
    content = Fraction(num_gcd, den_lcm)
    if poly.leading()[1] < 0:
        content = -content
    return content, poly * (1 / content)


def primitive_part(poly):
    return content_primitive(poly)[1]


class UniPoly:
    """Dense univariate polynomial with exact rational coefficients.

    Coefficients are stored ascending with no trailing zeros, so
    ``degree == len(coeffs) - 1`` (and -1 for the zero polynomial).
    """

    __slots__ = ("variable", "coeffs")

    def __init__(self, variable, coeffs):
        if variable not in VAR_INDEX:
            raise DomainError(f"unknown variable {variable!r}")
        cleaned = [Fraction(c) for c in coeffs]
        while cleaned and not cleaned[-1]:
            cleaned.pop()
        self.variable = variable
        self.coeffs = tuple(cleaned)

    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def is_constant(self):
        return len(self.coeffs) <= 1

    def constant_coefficient(self):
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def leading_coefficient(self):
        if not self.coeffs:
            raise DomainError("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __call__(self, value):
        value = Fraction(value)
        total = Fraction(0)
        for coeff in reversed(self.coeffs):
            total = total * value + coeff
        return total

    def primitive(self):
        """Integer-coprime rescaling with positive leading coefficient."""
        if not self.coeffs:
            return self
        num_gcd = 0
        den_lcm = 1
        for coeff in self.coeffs:
            num_gcd = math.gcd(num_gcd, abs(coeff.numerator))
            den_lcm = den_lcm * coeff.denominator // math.gcd(den_lcm, coeff.denominator)
        scale = Fraction(den_lcm, num_gcd)
        if self.coeffs[-1] < 0:
            scale = -scale
        return UniPoly(self.variable, [c * scale for c in self.coeffs])

    def to_multipoly(self):
        idx = VAR_INDEX[self.variable]
        terms = {}
        for e, coeff in enumerate(self.coeffs):
            if coeff:
                key = [0] * _NVARS
                key[idx] = e
                terms[tuple(key)] = coeff
        return MultiPoly(terms)

    @classmethod
    def from_multipoly(cls, poly, variable=None):
        used = poly.variables()
        if variable is None:
            if len(used) > 1:
                raise DomainError(f"not univariate: uses {sorted(used)}")
            variable = next(iter(used)) if used else "u"
        elif used - {variable}:
            raise DomainError(
                f"not univariate in {variable!r}: uses {sorted(used)}"
            )
        idx = VAR_INDEX[variable]
        coeffs = [Fraction(0)] * (poly.degree_in(variable) + 1)
        for key, coeff in poly._terms.items():
            coeffs[key[idx]] = coeff
        return cls(variable, coeffs)

    def __eq__(self, other):
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.variable == other.variable and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.variable, self.coeffs))

    def __repr__(self):
        return f"UniPoly({poly_print(self.to_multipoly())!r})"

    def __str__(self):
        return poly_print(self.to_multipoly())


def substitute_rational(target, numerator, denominator):
    """Clear ``target(numerator/denominator)`` to a primitive polynomial.

    Computes denominator**deg(target) * target(numerator/denominator) by
    Horner's rule, then strips the content and normalizes the sign so the
    graded-lex leading coefficient is positive.
    """
    if not isinstance(target, UniPoly):
        raise DomainError("substitution target must be univariate")
    if target.is_zero():
        raise DomainError("cannot substitute into the zero polynomial")
    if denominator.is_zero():
        raise DomainError("denominator polynomial is zero")
    coeffs = target.coeffs
    result = MultiPoly.constant(coeffs[-1])
    den_power = MultiPoly.constant(1)
    for k in range(len(coeffs) - 2, -1, -1):
        den_power = den_power * denominator
        result = result * numerator + coeffs[k] * den_power
    return primitive_part(result)


def poly_print(poly):
    """Canonical text form: graded-lex descending, explicit '*' and '^'.

    The leading term drops a +1 coefficient ("x^2", not "1*x^2"); every
    other term keeps its coefficient explicit, so printing is injective on
    canonical forms and survives reparsing.
    """
    if poly.is_zero():
        return "0"
    pieces = []
    for position, (key, coeff) in enumerate(poly.terms()):
        names = []
        for name in _PRINT_ORDER:
            e = key[VAR_INDEX[name]]
            if e == 1:
                names.append(name)
            elif e > 1:
                names.append(f"{name}^{e}")
        monomial = "*".join(names)
        if position == 0:
            if not monomial:
                pieces.append(str(coeff))
            elif coeff == 1:
                pieces.append(monomial)
            else:
                pieces.append(f"{coeff}*{monomial}")
        else:
            sep = " + " if coeff > 0 else " - "
            magnitude = abs(coeff)
            if not monomial:
                pieces.append(f"{sep}{magnitude}")
            else:
                pieces.append(f"{sep}{magnitude}*{monomial}")
    return "".join(pieces)

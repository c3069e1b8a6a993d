"""Quotient-tower arithmetic: ordered symbols with monic defining relations.

A tower is a sequence of (symbol, relation) pairs.  Each relation is a
polynomial in its symbol whose coefficients may involve free variables and
strictly earlier tower symbols, e.g.::

    Tower([("s", s^2 + x), ("t", t^2 + y), ("m", m^2 + 1)])

models s = sqrt(-x), t = sqrt(-y), m = sqrt(-1) over the polynomial ring in
the remaining letters.  Relations are stored monic; a non-unit leading
coefficient is rescaled away when it is invertible (a rational, or a
monomial in symbols whose relations have nonzero constant term), otherwise
construction fails.  Reduction rewrites every symbol power below its
relation degree, giving a unique normal form.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DomainError, NotInvertibleError
from .poly import ALPHABET, VAR_INDEX, MultiPoly


class Tower:
    __slots__ = ("symbols", "relations", "_inverse_cache")

    def __init__(self, pairs):
        self.symbols = []
        self.relations = {}
        self._inverse_cache = {}
        for symbol, relation in pairs:
            self._attach(symbol, relation)
        # relations may not look ahead: earlier relations must not involve
        # symbols attached later
        for i, symbol in enumerate(self.symbols):
            later = set(self.symbols[i + 1 :])
            used = self.relations[symbol].variables() - {symbol}
            if used & later:
                raise DomainError(
                    f"relation for {symbol!r} uses later symbols {sorted(used & later)}"
                )

    def _attach(self, symbol, relation):
        if symbol not in VAR_INDEX:
            raise DomainError(f"unknown symbol {symbol!r}")
        if symbol in self.relations:
            raise DomainError(f"duplicate tower symbol {symbol!r}")
        if not isinstance(relation, MultiPoly):
            relation = relation.to_multipoly()
        relation = self.reduce(relation)
        degree = relation.degree_in(symbol)
        if degree < 1:
            raise DomainError(f"relation for {symbol!r} must involve it")
        lead = relation.coefficient_of(symbol, degree)
        lead_value = lead.constant_value()
        if lead_value is not None:
            relation = relation * (1 / lead_value)
        else:
            relation = self.reduce(relation * self.invert(lead))
            new_lead = relation.coefficient_of(symbol, degree).constant_value()
            if new_lead != 1:
                raise NotInvertibleError(
                    f"could not rescale the relation for {symbol!r} to monic form"
                )
        self.symbols.append(symbol)
        self.relations[symbol] = relation

    # -- reduction ---------------------------------------------------------

    def reduce(self, poly):
        """Normal form: every tower symbol's degree below its relation degree."""
        for symbol in reversed(self.symbols):
            poly = self._reduce_symbol(poly, symbol)
        return poly

    def _reduce_symbol(self, poly, symbol):
        relation = self.relations[symbol]
        degree = relation.degree_in(symbol)
        while True:
            current = poly.degree_in(symbol) if not poly.is_zero() else 0
            if current < degree:
                return poly
            head = poly.coefficient_of(symbol, current)
            shift = MultiPoly.term(1, {symbol: current - degree})
            poly = poly - head * shift * relation

    # -- inversion ----------------------------------------------------------

    def symbol_inverse(self, symbol):
        """Inverse of a tower symbol, from its own relation.

        With relation sum(c_i * sym^i) = 0 monic and c_0 invertible,
        sym^-1 = -c_0^-1 * sum_{i>=1} c_i * sym^(i-1).
        """
        if symbol in self._inverse_cache:
            return self._inverse_cache[symbol]
        if symbol not in self.relations:
            raise NotInvertibleError(f"{symbol!r} is not a tower symbol")
        relation = self.relations[symbol]
        constant = relation.coefficient_of(symbol, 0)
        if constant.is_zero():
            raise NotInvertibleError(
                f"{symbol!r} is a zero divisor: its relation has no constant term"
            )
        idx = VAR_INDEX[symbol]
        shifted = MultiPoly.zero()
        for key, coeff in relation._terms.items():
            if key[idx] >= 1:
                down = list(key)
                down[idx] -= 1
                shifted = shifted + MultiPoly({tuple(down): coeff})
        inverse = self.reduce(-1 * self.invert(constant) * shifted)
        check = self.reduce(inverse * MultiPoly.variable(symbol))
        if check != MultiPoly.constant(1):
            raise NotInvertibleError(f"inverse of {symbol!r} failed verification")
        self._inverse_cache[symbol] = inverse
        return inverse

    def invert(self, poly):
        """Invert a rational constant or a monomial in tower symbols.

        Anything else (sums, monomials containing free variables) raises
        NotInvertibleError; that is all the tower machinery here needs.
        """
        poly = self.reduce(poly)
        value = poly.constant_value()
        if value is not None:
            if not value:
                raise NotInvertibleError("zero is not invertible")
            return MultiPoly.constant(1 / value)
        if len(poly._terms) != 1:
            raise NotInvertibleError(
                "inversion is only supported for monomials in the tower symbols"
            )
        (key, coeff), = poly._terms.items()
        result = MultiPoly.constant(1 / coeff)
        for i, e in enumerate(key):
            if not e:
                continue
            name = ALPHABET[i]
            if name not in self.relations:
                raise NotInvertibleError(f"free variable {name!r} is not invertible")
            result = self.reduce(result * self.symbol_inverse(name) ** e)
        return result

    def element(self, poly):
        return TowerElement(self, poly)

    def __eq__(self, other):
        if not isinstance(other, Tower):
            return NotImplemented
        return self.symbols == other.symbols and self.relations == other.relations

    def __repr__(self):
        parts = ", ".join(f"{s}: {self.relations[s]}" for s in self.symbols)
        return f"Tower({parts})"


class TowerElement:
    """A value in the quotient ring, always kept in normal form."""

    __slots__ = ("tower", "value")

    def __init__(self, tower, value):
        if not isinstance(value, MultiPoly):
            value = MultiPoly.constant(value)
        self.tower = tower
        self.value = tower.reduce(value)

    def _check(self, other):
        if isinstance(other, TowerElement):
            if other.tower != self.tower:
                raise DomainError("elements live in different towers")
            return other.value
        if isinstance(other, (int, Fraction)):
            return MultiPoly.constant(other)
        if isinstance(other, MultiPoly):
            return other
        return None

    def __add__(self, other):
        value = self._check(other)
        if value is None:
            return NotImplemented
        return TowerElement(self.tower, self.value + value)

    __radd__ = __add__

    def __sub__(self, other):
        value = self._check(other)
        if value is None:
            return NotImplemented
        return TowerElement(self.tower, self.value - value)

    def __mul__(self, other):
        value = self._check(other)
        if value is None:
            return NotImplemented
        return TowerElement(self.tower, self.value * value)

    __rmul__ = __mul__

    def __neg__(self):
        return TowerElement(self.tower, -self.value)

    def is_zero(self):
        return self.value.is_zero()

    def __eq__(self, other):
        if isinstance(other, TowerElement):
            return self.tower == other.tower and self.value == other.value
        return NotImplemented

    def __hash__(self):
        return hash(("tower-element", self.value))

    def __repr__(self):
        return f"TowerElement({self.value})"


def tower_reduce(element):
    """Re-normalize a tower element (idempotent: elements stay reduced)."""
    return TowerElement(element.tower, element.value)

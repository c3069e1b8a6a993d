"""Parser for the polynomial text grammar.

Grammar (whitespace insignificant)::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := atom ['^' INT]
    atom   := NUMBER | VARIABLE | '(' expr ')'
    NUMBER := INT ['/' INT]

Coefficients are integers or rationals like ``-3/2``; powers are positive
integers; products need an explicit ``*``.  Variables come from the fixed
alphabet in :mod:`quatsurf.poly` unless a narrower set is requested.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ParseError, UnknownVariableError
from .poly import ALPHABET, MultiPoly, UniPoly

_OPERATORS = set("+-*/^()")


def tokenize(text):
    """(kind, value, position) triples; kind is 'int', 'name', or an operator."""
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            start = i
            while i < n and text[i].isdigit():
                i += 1
            tokens.append(("int", int(text[start:i]), start))
            continue
        if ch.isalpha():
            start = i
            while i < n and text[i].isalpha():
                i += 1
            tokens.append(("name", text[start:i], start))
            continue
        if ch in _OPERATORS:
            tokens.append((ch, ch, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    return tokens


class _Parser:
    def __init__(self, tokens, variables):
        self.tokens = tokens
        self.pos = 0
        self.variables = variables

    def peek(self):
        if self.pos < len(self.tokens):
            return self.tokens[self.pos]
        return ("end", None, None)

    def advance(self):
        token = self.peek()
        self.pos += 1
        return token

    def expect(self, kind):
        token = self.advance()
        if token[0] != kind:
            raise ParseError(f"expected {kind!r}, found {token[1]!r}", token[2])
        return token

    def parse_expr(self):
        sign = 1
        kind, _, _ = self.peek()
        if kind in ("+", "-"):
            self.advance()
            sign = -1 if kind == "-" else 1
        result = self.parse_term() * sign
        while True:
            kind, _, _ = self.peek()
            if kind not in ("+", "-"):
                return result
            self.advance()
            term = self.parse_term()
            result = result + term if kind == "+" else result - term

    def parse_term(self):
        result = self.parse_factor()
        while self.peek()[0] == "*":
            self.advance()
            result = result * self.parse_factor()
        return result

    def parse_factor(self):
        base = self.parse_atom()
        if self.peek()[0] == "^":
            self.advance()
            kind, value, position = self.advance()
            if kind != "int" or value < 1:
                raise ParseError("power must be a positive integer", position)
            base = base ** value
        return base

    def parse_atom(self):
        kind, value, position = self.advance()
        if kind == "int":
            # an integer may continue as a rational literal: INT '/' INT
            if self.peek()[0] == "/":
                self.advance()
                dkind, dvalue, dposition = self.advance()
                if dkind != "int" or dvalue == 0:
                    raise ParseError("denominator must be a nonzero integer", dposition)
                return MultiPoly.constant(Fraction(value, dvalue))
            return MultiPoly.constant(value)
        if kind == "name":
            if value not in self.variables:
                raise UnknownVariableError(f"unknown variable {value!r}", position)
            return MultiPoly.variable(value)
        if kind == "(":
            inner = self.parse_expr()
            self.expect(")")
            return inner
        raise ParseError(f"unexpected token {value!r}", position)


def poly_parse(text, variables=None):
    """Parse polynomial text into a MultiPoly.

    ``variables`` restricts the accepted variable names (default: the whole
    alphabet); anything outside it raises UnknownVariableError.
    """
    if variables is None:
        variables = set(ALPHABET)
    else:
        variables = set(variables)
        unknown = variables - set(ALPHABET)
        if unknown:
            raise UnknownVariableError(f"not in the alphabet: {sorted(unknown)}")
    tokens = tokenize(text)
    if not tokens:
        raise ParseError("empty polynomial text", 0)
    parser = _Parser(tokens, variables)
    result = parser.parse_expr()
    trailing = parser.peek()
    if trailing[0] != "end":
        raise ParseError(f"unexpected token {trailing[1]!r}", trailing[2])
    return result


def unipoly_parse(text, variable):
    """Parse text that must be univariate in ``variable``."""
    return UniPoly.from_multipoly(poly_parse(text, {variable}), variable)

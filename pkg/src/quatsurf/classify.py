"""Split/division classification for rational quaternion algebras.

The decision is local: compute the symbol of (a, b) at the real place and
at finitely many primes, collect the places where the symbol is -1 (always
an even number of them), and read everything else off that set.  Two slow,
independent oracles cross-check the closed-form symbols in the tests: an
exhaustive integer search for zeros of the diagonal ternary form, and a
digit-by-digit lifting search modulo prime powers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DomainError,
    FactorizationBudgetError,
    PrecisionBudgetError,
)
from .poly import MultiPoly, format_rational
from .quaternion import QuaternionAlgebra

TRIAL_DIVISION_BOUND = 10_000
POLLARD_ATTEMPTS = 48
POLLARD_ITERATIONS = 1 << 20
PADIC_MODULUS_BUDGET = 10**9
PADIC_STATE_BUDGET = 5_000_000

_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n):
    """Deterministic Miller-Rabin; exact for every n below 3.3e24."""
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for base in _MR_WITNESSES:
        x = pow(base, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n):
    # Brent's cycle variant; n is odd, composite, with no small factors.
    for c in range(1, POLLARD_ATTEMPTS + 1):
        y, r, q, g = 2, 1, 1, 1
        x = ys = y
        count = 0
        while g == 1 and count < POLLARD_ITERATIONS:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(128, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += 128
            r *= 2
            count += r
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if 1 < g < n:
            return g
    raise FactorizationBudgetError(f"failed to split {n} within the rho budget")


def factorize(n):
    """Prime factorization {p: exponent} of |n|; n must be nonzero."""
    n = abs(int(n))
    if n == 0:
        raise DomainError("cannot factor zero")
    factors = {}
    for p in (2, 3, 5):
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
    d = 7
    while d <= TRIAL_DIVISION_BOUND and d * d <= n:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += 2
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            factors[m] = factors.get(m, 0) + 1
            continue
        g = _pollard_rho(m)
        stack.append(g)
        stack.append(m // g)
    return factors


def square_class(r):
    """The unique squarefree integer s with r = s * t^2 for rational t."""
    r = Fraction(r)
    if not r:
        raise DomainError("zero has no square class")
    n = r.numerator * r.denominator
    result = -1 if n < 0 else 1
    for p, e in factorize(n).items():
        if e % 2:
            result *= p
    return result


# -- places and ramification -------------------------------------------------


@dataclass(frozen=True)
class Place:
    """A place of the rationals: the real place (prime None) or a prime."""

    prime: int | None

    def __post_init__(self):
        if self.prime is not None and not is_prime(self.prime):
            raise DomainError(f"not a prime: {self.prime}")

    @classmethod
    def real(cls):
        return cls(None)

    @classmethod
    def finite(cls, p):
        return cls(int(p))

    def is_real(self):
        return self.prime is None

    def sort_key(self):
        return (0, 0) if self.prime is None else (1, self.prime)

    def label(self):
        """JSON-friendly tag: the string 'inf' or the prime itself."""
        return "inf" if self.prime is None else self.prime

    def __repr__(self):
        return "Place(inf)" if self.prime is None else f"Place({self.prime})"


class RamificationSet:
    """Sorted set of places with symbol -1; always of even cardinality."""

    __slots__ = ("places",)

    def __init__(self, places):
        ordered = sorted(set(places), key=Place.sort_key)
        if len(ordered) % 2:
            raise DomainError(
                "ramification sets have even size; an odd set signals a bug"
            )
        self.places = tuple(ordered)

    def labels(self):
        return [v.label() for v in self.places]

    def __contains__(self, place):
        return place in self.places

    def __len__(self):
        return len(self.places)

    def __iter__(self):
        return iter(self.places)

    def __eq__(self, other):
        if not isinstance(other, RamificationSet):
            return NotImplemented
        return self.places == other.places

    def __hash__(self):
        return hash(self.places)

    def __repr__(self):
        inner = ", ".join(str(v.label()) for v in self.places)
        return f"RamificationSet({{{inner}}})"


def _legendre(u, p):
    # u coprime to p, p odd
    return -1 if pow(u % p, (p - 1) // 2, p) == p - 1 else 1


def _eps(u):
    return ((u - 1) // 2) % 2


def _omega(u):
    return ((u * u - 1) // 8) % 2


def _split_unit(s, p):
    """s squarefree, so v_p(s) is 0 or 1; return (valuation, unit part)."""
    return (1, s // p) if s % p == 0 else (0, s)


def hilbert_symbol(a, b, place):
    """+1 iff z^2 = a*x^2 + b*y^2 has a nontrivial zero locally at place.

    Only the square classes of a and b matter, so both are reduced to
    squarefree integers first; the finite-place values then come from the
    standard closed formulas on unit parts and valuations.
    """
    a = Fraction(a)
    b = Fraction(b)
    if not a or not b:
        raise DomainError("hilbert symbol needs nonzero arguments")
    if place.is_real():
        return -1 if a < 0 and b < 0 else 1
    sa = square_class(a)
    sb = square_class(b)
    p = place.prime
    alpha, u = _split_unit(sa, p)
    beta, v = _split_unit(sb, p)
    if p == 2:
        exponent = _eps(u) * _eps(v) + alpha * _omega(v) + beta * _omega(u)
        return -1 if exponent % 2 else 1
    sign = -1 if (alpha * beta * _eps(p)) % 2 else 1
    if beta:
        sign *= _legendre(u, p)
    if alpha:
        sign *= _legendre(v, p)
    return sign


def candidate_places(a, b):
    """The real place, 2, and odd primes dividing either square class.

    The symbol is +1 at every place outside this list, so it carries the
    whole classification.
    """
    sa = square_class(a)
    sb = square_class(b)
    odd = sorted(
        p
        for p in set(factorize(sa)) | set(factorize(sb))
        if p != 2
    )
    return [Place.real(), Place.finite(2)] + [Place.finite(p) for p in odd]


def ramified_places(algebra):
    """All places where the algebra's symbol is -1, as a canonical set."""
    return RamificationSet(
        v
        for v in candidate_places(algebra.a, algebra.b)
        if hilbert_symbol(algebra.a, algebra.b, v) == -1
    )


def is_division(algebra):
    """True iff the algebra is a division algebra (ramified somewhere)."""
    return len(ramified_places(algebra)) > 0


def are_isomorphic(first, second):
    """Isomorphism test: equality of ramification sets."""
    return ramified_places(first) == ramified_places(second)


def classification_record(algebra):
    return {
        "a": format_rational(algebra.a),
        "b": format_rational(algebra.b),
        "division": is_division(algebra),
        "ramified": ramified_places(algebra).labels(),
    }


# -- the ternary form and the integer oracle ----------------------------------


@dataclass(frozen=True)
class TernaryForm:
    """Q(x,y,z) = -a*x^2 - b*y^2 + a*b*z^2, the pure-part norm form."""

    a: Fraction
    b: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))
        if not self.a or not self.b:
            raise DomainError("form parameters a, b must be nonzero")

    def diagonal(self):
        return (-self.a, -self.b, self.a * self.b)

    def evaluate(self, x, y, z):
        ca, cb, cab = self.diagonal()
        x, y, z = Fraction(x), Fraction(y), Fraction(z)
        return ca * x * x + cb * y * y + cab * z * z

    def as_multipoly(self):
        ca, cb, cab = self.diagonal()
        return (
            MultiPoly.term(ca, {"x": 2})
            + MultiPoly.term(cb, {"y": 2})
            + MultiPoly.term(cab, {"z": 2})
        )


def form_from_algebra(algebra):
    """The ternary form whose zeros are the norm-zero pure quaternions."""
    return TernaryForm(algebra.a, algebra.b)


def form_eval(form, x, y, z):
    return form.evaluate(x, y, z)


def algebra_from_form(form):
    return QuaternionAlgebra(form.a, form.b)


def _component_rank(c):
    # fixed order on each coordinate: 0 < 1 < -1 < 2 < -2 < ...
    return 2 * c - 1 if c > 0 else -2 * c


def triple_key(triple):
    """Total order on integer triples: height first, then coordinatewise."""
    x, y, z = triple
    return (
        max(abs(x), abs(y), abs(z)),
        _component_rank(x),
        _component_rank(y),
        _component_rank(z),
    )


def integer_diagonal(c0, c1, c2):
    """Scale rational diagonal coefficients to coprime integers."""
    den = 1
    for c in (c0, c1, c2):
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in (c0, c1, c2)]
    g = math.gcd(math.gcd(abs(ints[0]), abs(ints[1])), abs(ints[2]))
    return tuple(v // g for v in ints)


def first_diagonal_zero(coeffs, bound):
    """First primitive zero of A*x^2 + B*y^2 + C*z^2 in the fixed order.

    C must be nonzero: the scan runs over (|x|, |y|) pairs and solves for
    the last coordinate, so a search up to the height bound costs O(bound^2)
    instead of O(bound^3).  Returns None when no zero exists in the box.
    """
    A, B, C = coeffs
    if C == 0:
        raise DomainError("the z^2 coefficient must be nonzero")
    best = None
    best_key = None
    for x in range(bound + 1):
        if best is not None and x > best_key[0]:
            break
        ax = A * x * x
        for y in range(bound + 1):
            remainder = -(ax + B * y * y)
            if remainder % C:
                continue
            square = remainder // C
            if square < 0:
                continue
            t = math.isqrt(square)
            if t * t != square or t > bound:
                continue
            if x == 0 and y == 0 and t == 0:
                continue
            if math.gcd(math.gcd(x, y), t) != 1:
                continue
            for sx in ((x, -x) if x else (0,)):
                for sy in ((y, -y) if y else (0,)):
                    for sz in ((t, -t) if t else (0,)):
                        key = triple_key((sx, sy, sz))
                        if best_key is None or key < best_key:
                            best = (sx, sy, sz)
                            best_key = key
    return best


def isotropy_oracle(form, height_bound):
    """First primitive integer zero of the form up to the height bound.

    Exhaustive over the box max(|x|,|y|,|z|) <= bound in the fixed total
    order (height, then the coordinatewise rank); None when the form has no
    zero there.  Slow by design: this is the ground truth the fast local
    classification is tested against.
    """
    if height_bound < 1:
        return None
    coeffs = integer_diagonal(*form.diagonal())
    return first_diagonal_zero(coeffs, height_bound)


# -- the p-adic oracle ---------------------------------------------------------


def _valuation(n, p):
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def _valuation_capped(n, p, cap):
    # 0 gets the cap, matching "divisible as far as we can see"
    v = 0
    while v < cap and n % p == 0:
        n //= p
        v += 1
    return v


def padic_solvability_oracle(a, b, p, *, modulus_budget=PADIC_MODULUS_BUDGET):
    """Decide solvability of z^2 = a*x^2 + b*y^2 over the p-adics.

    Digit-by-digit search: keep every primitive zero modulo p^level, stop
    with +1 as soon as one lifts by Newton's iteration (value divisible to
    more than twice the gradient's valuation), extend the rest one digit and
    repeat.  Non-lifting survivors have gradient divisible by p, so an
    extension survives either for all p^3 digit choices or for none.  The
    precision 2*v_p(4ABC) + 3 is past the worst case, so the loop always
    resolves; independent of the closed-form symbol by construction.
    """
    a = Fraction(a)
    b = Fraction(b)
    if not a or not b:
        raise DomainError("solvability needs nonzero arguments")
    if not is_prime(p):
        raise DomainError(f"not a prime: {p}")
    A, B, C = integer_diagonal(a, b, Fraction(-1))
    precision = 2 * _valuation(4 * A * B * C, p) + 3
    if p**precision > modulus_budget:
        raise PrecisionBudgetError(
            f"modulus {p}^{precision} exceeds the budget {modulus_budget}"
        )

    def value(x, y, z):
        return A * x * x + B * y * y + C * z * z

    states = [
        (x, y, z)
        for x in range(p)
        for y in range(p)
        for z in range(p)
        if (x or y or z) and value(x, y, z) % p == 0
    ]
    modulus = p
    for level in range(1, precision + 1):
        step = modulus * p
        survivors = []
        for x, y, z in states:
            m = min(
                _valuation_capped(2 * A * x, p, level),
                _valuation_capped(2 * B * y, p, level),
                _valuation_capped(2 * C * z, p, level),
            )
            if level >= 2 * m + 1:
                return 1
            if value(x, y, z) % step:
                continue
            if 2 * m <= level:
                # every one-digit extension lifts at the next level
                return 1
            for dx in range(p):
                nx = x + modulus * dx
                for dy in range(p):
                    ny = y + modulus * dy
                    for dz in range(p):
                        survivors.append((nx, ny, z + modulus * dz))
            if len(survivors) > PADIC_STATE_BUDGET:
                raise PrecisionBudgetError(
                    f"more than {PADIC_STATE_BUDGET} residue states at {p}^{level}"
                )
        if not survivors:
            return -1
        states = survivors
        modulus = step
    raise AssertionError("digit lifting must resolve within the precision bound")

"""Built-in verification suites.

Each suite checks one family of exact identities on fixed or seeded-random
inputs and reports pass/fail plus how many checks ran.  The quick depth
keeps the whole run under a few seconds; full widens every range.  All
randomness is seeded, so both depths are deterministic.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .classify import (
    TernaryForm,
    candidate_places,
    hilbert_symbol,
    is_division,
    isotropy_oracle,
    padic_solvability_oracle,
    ramified_places,
    square_class,
)
from .conic import (
    conic_from_form,
    coordinate_ring_normal_form,
    find_point,
    parametrize_from_point,
    symbolic_parametrization_check,
)
from .expr import poly_parse, unipoly_parse
from .poly import MultiPoly, poly_print
from .quaternion import Quaternion, QuaternionAlgebra
from .surface import (
    solved_expression_identity_check,
    specialize_check,
    tower_consistency_check,
)

TOWER_SUITE = (
    ("u+1", "w+1"),
    ("u^2-2", "w+1"),
    ("u^2+1", "w^2+2"),
    ("u^2-u-1", "w+2"),
)


@dataclass(frozen=True)
class SuiteResult:
    name: str
    ok: bool
    checks: int
    detail: str = ""


def random_rational(rng, height):
    return Fraction(rng.randint(-height, height), rng.randint(1, height))


def random_nonzero_rational(rng, height):
    while True:
        value = random_rational(rng, height)
        if value:
            return value


def random_quaternion(rng, algebra, height):
    return Quaternion(
        algebra,
        random_rational(rng, height),
        random_rational(rng, height),
        random_rational(rng, height),
        random_rational(rng, height),
    )


def random_multipoly(rng, names=("x", "y", "z"), max_terms=4, max_degree=3, height=9):
    poly = MultiPoly.zero()
    for _ in range(rng.randint(1, max_terms)):
        exponents = {name: rng.randint(0, max_degree) for name in names}
        poly = poly + MultiPoly.term(rng.randint(-height, height), exponents)
    return poly


def squarefree_values(limit):
    return [n for n in range(-limit, limit + 1) if n and square_class(n) == n]


def _norm_multiplicativity(depth):
    rng = random.Random(1101)
    rounds = 1000 if depth == "full" else 200
    algebras = [
        QuaternionAlgebra(
            random_nonzero_rational(rng, 100), random_nonzero_rational(rng, 100)
        )
        for _ in range(10)
    ]
    for index in range(rounds):
        algebra = algebras[index % len(algebras)]
        left = random_quaternion(rng, algebra, 100)
        right = random_quaternion(rng, algebra, 100)
        if (left * right).norm() != left.norm() * right.norm():
            return False, index, f"norm broke at {left} times {right}"
    return True, rounds, ""


def _hamilton_case(_depth):
    algebra = QuaternionAlgebra(-1, -1)
    if not is_division(algebra):
        return False, 0, "(-1,-1) must be a division algebra"
    if ramified_places(algebra).labels() != ["inf", 2]:
        return False, 1, "(-1,-1) must ramify exactly at inf and 2"
    if isotropy_oracle(TernaryForm(-1, -1), 50) is not None:
        return False, 2, "the definite form has no integer zeros"
    return True, 3, ""


def _reciprocity(depth):
    limit = 30 if depth == "full" else 10
    values = squarefree_values(limit)
    checks = 0
    for a in values:
        for b in values:
            product = 1
            for place in candidate_places(a, b):
                product *= hilbert_symbol(a, b, place)
            if product != 1:
                return False, checks, f"symbol product is {product} at ({a},{b})"
            ramified_places(QuaternionAlgebra(a, b))  # parity enforced inside
            checks += 1
    return True, checks, ""


def _oracle_agreement(depth):
    limit = 15 if depth == "full" else 5
    bound = 200 if depth == "full" else 50
    checks = 0
    for a in squarefree_values(limit):
        for b in squarefree_values(limit):
            for place in candidate_places(a, b):
                if place.is_real():
                    continue
                fast = hilbert_symbol(a, b, place)
                slow = padic_solvability_oracle(a, b, place.prime)
                if fast != slow:
                    return False, checks, f"symbol mismatch at ({a},{b}) p={place.prime}"
                checks += 1
            form = TernaryForm(a, b)
            division = is_division(QuaternionAlgebra(a, b))
            zero = isotropy_oracle(form, bound)
            if zero is not None and form.evaluate(*zero) != 0:
                return False, checks, f"oracle returned a non-zero at ({a},{b})"
            if zero is not None and division:
                return False, checks, f"division verdict contradicted at ({a},{b})"
            if zero is None and not division:
                return False, checks, f"no integer zero up to {bound} at split ({a},{b})"
            checks += 1
    return True, checks, ""


def _parametrization_identity(_depth):
    if not symbolic_parametrization_check():
        return False, 0, "the symbolic identity failed"
    if not symbolic_parametrization_check(-1, -1):
        return False, 1, "the specialized identity failed"
    if symbolic_parametrization_check(z_perturbation=MultiPoly.variable("u")):
        return False, 2, "a perturbed identity went undetected"
    if not solved_expression_identity_check():
        return False, 3, "the solved expressions do not clear the form"
    return True, 4, ""


def _coordinate_ring(depth):
    rounds = 100 if depth == "full" else 30
    rng = random.Random(3103)
    form = TernaryForm(-1, -1)
    if not coordinate_ring_normal_form(form.as_multipoly(), form).is_zero():
        return False, 0, "the form must reduce to zero"
    checks = 1
    for _ in range(rounds):
        a = random_nonzero_rational(rng, 6)
        b = random_nonzero_rational(rng, 6)
        shape = TernaryForm(a, b)
        f = random_multipoly(rng, max_degree=4)
        g = random_multipoly(rng, max_degree=4)
        reduced = coordinate_ring_normal_form(f, shape)
        if coordinate_ring_normal_form(reduced, shape) != reduced:
            return False, checks, f"not idempotent on {f}"
        together = coordinate_ring_normal_form(f + g, shape)
        apart = reduced + coordinate_ring_normal_form(g, shape)
        if together != apart:
            return False, checks, f"not additive on {f} and {g}"
        checks += 1
    return True, checks, ""


def _specialization(depth):
    rounds = 25 if depth == "full" else 10
    rng = random.Random(4104)
    pairs = [(Fraction(-1), Fraction(-1)), (Fraction(2), Fraction(3)), (Fraction(-1), Fraction(3, 2))]
    while len(pairs) < rounds:
        pairs.append(
            (random_nonzero_rational(rng, 9), random_nonzero_rational(rng, 9))
        )
    for a, b in pairs:
        if not specialize_check(a, b):
            return False, len(pairs), f"specialization failed at ({a},{b})"
    return True, len(pairs), ""


def _tower_consistency(depth):
    suite = TOWER_SUITE if depth == "full" else TOWER_SUITE[:2]
    for p_text, q_text in suite:
        p = unipoly_parse(p_text, "u")
        q = unipoly_parse(q_text, "w")
        if not tower_consistency_check(p, q):
            return False, len(suite), f"tower check failed at ({p_text},{q_text})"
    return True, len(suite), ""


def _split_conics(depth):
    limit = 10 if depth == "full" else 5
    checks = 0
    for a in squarefree_values(limit):
        for b in squarefree_values(limit):
            form = TernaryForm(a, b)
            if is_division(QuaternionAlgebra(a, b)):
                continue
            conic = conic_from_form(form)
            point = find_point(conic)
            if not conic.contains(*point.triple()):
                return False, checks, f"point off the conic at ({a},{b})"
            if form.evaluate(*point.triple()) != 0:
                return False, checks, f"point misses the form at ({a},{b})"
            parametrize_from_point(conic, point)  # identity enforced inside
            checks += 1
    return True, checks, ""


def _parse_print_roundtrip(depth):
    rounds = 100 if depth == "full" else 50
    rng = random.Random(5105)
    names = ("x", "y", "z", "u", "w", "v", "s", "t", "m")
    for index in range(rounds):
        width = rng.randint(1, 4)
        chosen = tuple(rng.sample(names, width))
        poly = random_multipoly(rng, chosen, max_terms=6, max_degree=5, height=30)
        if poly_parse(poly_print(poly)) != poly:
            return False, index, f"round trip failed on {poly_print(poly)}"
    return True, rounds, ""


_SUITES = (
    ("norm-multiplicativity", _norm_multiplicativity),
    ("hamilton-classification", _hamilton_case),
    ("hilbert-reciprocity", _reciprocity),
    ("oracle-agreement", _oracle_agreement),
    ("parametrization-identity", _parametrization_identity),
    ("coordinate-ring", _coordinate_ring),
    ("surface-specialization", _specialization),
    ("tower-consistency", _tower_consistency),
    ("split-conics", _split_conics),
    ("parse-print-roundtrip", _parse_print_roundtrip),
)


def run_selftest(depth="quick"):
    if depth not in ("quick", "full"):
        raise ValueError(f"unknown selftest depth {depth!r}")
    results = []
    for name, suite in _SUITES:
        try:
            ok, checks, detail = suite(depth)
        except Exception as exc:  # a crash is a failure, not an abort
            ok, checks, detail = False, 0, f"{type(exc).__name__}: {exc}"
        results.append(SuiteResult(name, ok, checks, detail))
    return results


def all_passed(results):
    return all(result.ok for result in results)


def report_lines(results):
    lines = []
    for result in results:
        if result.ok:
            lines.append(f"PASS {result.name} ({result.checks} checks)")
        else:
            lines.append(f"FAIL {result.name}: {result.detail}")
    lines.append("ok" if all_passed(results) else "failed")
    return lines

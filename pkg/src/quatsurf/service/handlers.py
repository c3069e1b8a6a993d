"""Operation handlers: request model in, response model out.

The CLI calls these directly for in-process execution; the HTTP app mounts
the same functions.  All domain failures surface as package errors, which
the two front-ends translate to exit codes or HTTP status themselves.
"""

from __future__ import annotations

from .. import __version__
from ..classify import TernaryForm, classification_record, are_isomorphic
from ..conic import Conic, coordinate_ring_normal_form, find_point, parametrize_from_point
from ..errors import DomainError
from ..expr import poly_parse, unipoly_parse
from ..poly import format_rational, parse_rational, poly_print
from ..quaternion import QuaternionAlgebra, quaternion_parse
from ..selftest import all_passed, run_selftest
from ..surface import build_surface, specialize_check, tower_consistency_check
from . import schemas


def _algebra(a_text, b_text):
    return QuaternionAlgebra(parse_rational(a_text), parse_rational(b_text))


def norm(req: schemas.NormRequest) -> schemas.NormResponse:
    algebra = _algebra(req.a, req.b)
    element = quaternion_parse(algebra, req.element)
    return schemas.NormResponse(norm=format_rational(element.norm()))


def mul(req: schemas.MulRequest) -> schemas.QuaternionModel:
    algebra = _algebra(req.a, req.b)
    left = quaternion_parse(algebra, req.elements[0])
    right = quaternion_parse(algebra, req.elements[1])
    return schemas.QuaternionModel(**(left * right).to_json())


def inverse(req: schemas.InverseRequest) -> schemas.QuaternionModel:
    algebra = _algebra(req.a, req.b)
    element = quaternion_parse(algebra, req.element)
    return schemas.QuaternionModel(**element.inverse().to_json())


def classify(req: schemas.ClassifyRequest) -> schemas.ClassificationResponse:
    return schemas.ClassificationResponse(
        **classification_record(_algebra(req.a, req.b))
    )


def isomorphic(req: schemas.IsomorphicRequest) -> schemas.IsomorphicResponse:
    first = _algebra(req.a, req.b)
    second = _algebra(req.a2, req.b2)
    return schemas.IsomorphicResponse(
        a=format_rational(first.a),
        b=format_rational(first.b),
        a2=format_rational(second.a),
        b2=format_rational(second.b),
        isomorphic=are_isomorphic(first, second),
    )


def conic_point(req: schemas.ConicPointRequest) -> schemas.ConicPointResponse:
    conic = Conic(parse_rational(req.a), parse_rational(req.b))
    point = find_point(conic, req.bound)
    return schemas.ConicPointResponse(**point.to_json())


def parametrize(req: schemas.ParametrizeRequest) -> schemas.ParametrizeResponse:
    conic = Conic(parse_rational(req.a), parse_rational(req.b))
    point = find_point(conic, req.bound)
    par = parametrize_from_point(conic, point)
    return schemas.ParametrizeResponse(
        point=schemas.ConicPointResponse(**point.to_json()),
        X=poly_print(par.X),
        Y=poly_print(par.Y),
        Z=poly_print(par.Z),
        base=[format_rational(c) for c in par.base_parameter],
    )


def ring_reduce(req: schemas.RingReduceRequest) -> schemas.RingReduceResponse:
    form = TernaryForm(parse_rational(req.a), parse_rational(req.b))
    poly = poly_parse(req.poly, variables={"x", "y", "z"})
    reduced = coordinate_ring_normal_form(poly, form)
    return schemas.RingReduceResponse(
        input=poly_print(poly), reduced=poly_print(reduced)
    )


def avatar_build(req: schemas.AvatarBuildRequest) -> schemas.AvatarBuildResponse:
    surface = build_surface(unipoly_parse(req.p, "u"), unipoly_parse(req.q, "w"))
    return schemas.AvatarBuildResponse(**surface.json_record())


def avatar_check(req: schemas.AvatarCheckRequest) -> schemas.AvatarCheckResponse:
    if req.p is not None or req.q is not None:
        if req.p is None or req.q is None:
            raise DomainError("the tower check needs both p and q")
        ok = tower_consistency_check(
            unipoly_parse(req.p, "u"), unipoly_parse(req.q, "w")
        )
        return schemas.AvatarCheckResponse(check="tower-consistency", ok=ok)
    if req.a is not None and req.b is not None:
        ok = specialize_check(parse_rational(req.a), parse_rational(req.b))
        return schemas.AvatarCheckResponse(check="specialization", ok=ok)
    raise DomainError("pass p and q (tower check) or a and b (specialization)")


def selftest(req: schemas.SelftestRequest) -> schemas.SelftestResponse:
    results = run_selftest(req.depth)
    return schemas.SelftestResponse(
        depth=req.depth,
        ok=all_passed(results),
        results=[
            schemas.SuiteResultModel(
                name=r.name, ok=r.ok, checks=r.checks, detail=r.detail
            )
            for r in results
        ],
    )


def health() -> schemas.HealthResponse:
    return schemas.HealthResponse(status="ok", version=__version__)

"""Command-line front-end.

Each subcommand builds the same request model the HTTP service accepts and
either runs the handler in-process or, with --url, posts it to a running
service.  Output is byte-identical either way.  Exit codes: 0 success,
1 domain failure (or a failed check), 2 usage and parse errors.

Negative rationals need the '=' form for option values: -a=-3/2.
Plain integers work bare: -a -1.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import Error, ParseError
from .poly import parse_rational
from .quaternion import QuaternionAlgebra
from .service import handlers, schemas
from .surface import emit_record

_USAGE_ERROR_CODES = frozenset({"parse-error", "unknown-variable"})


def _print_json(model):
    print(json.dumps(model.model_dump()))


def _quaternion_text(model):
    algebra = QuaternionAlgebra(parse_rational(model.a), parse_rational(model.b))
    element = algebra.element(
        parse_rational(model.x0),
        parse_rational(model.x),
        parse_rational(model.y),
        parse_rational(model.z),
    )
    return element.to_text()


def _remote(url, path, request, response_cls):
    import httpx

    target = url.rstrip("/") + "/v1" + path
    try:
        reply = httpx.post(target, json=request.model_dump(), timeout=600.0)
    except httpx.HTTPError as exc:
        error = Error(f"could not reach service at {target}: {exc}")
        error.code = "transport-error"
        raise error from exc
    if reply.status_code == 200:
        return response_cls.model_validate(reply.json())
    try:
        record = reply.json()["error"]
        error = Error(str(record.get("message", "remote error")))
        error.code = str(record.get("code", "error"))
    except (ValueError, KeyError, TypeError):
        error = Error(f"service returned status {reply.status_code}")
        error.code = "transport-error"
    raise error


def _invoke(args, path, request, response_cls, local):
    if getattr(args, "url", None):
        return _remote(args.url, path, request, response_cls)
    return local(request)


def _cmd_norm(args):
    request = schemas.NormRequest(a=args.a, b=args.b, element=args.e)
    resp = _invoke(args, "/norm", request, schemas.NormResponse, handlers.norm)
    if args.json:
        _print_json(resp)
    else:
        print(resp.norm)
    return 0


def _cmd_mul(args):
    if len(args.e) != 2:
        raise ParseError("mul needs exactly two -e elements")
    request = schemas.MulRequest(a=args.a, b=args.b, elements=list(args.e))
    resp = _invoke(args, "/mul", request, schemas.QuaternionModel, handlers.mul)
    if args.json:
        _print_json(resp)
    else:
        print(_quaternion_text(resp))
    return 0


def _cmd_inverse(args):
    request = schemas.InverseRequest(a=args.a, b=args.b, element=args.e)
    resp = _invoke(
        args, "/inverse", request, schemas.QuaternionModel, handlers.inverse
    )
    if args.json:
        _print_json(resp)
    else:
        print(_quaternion_text(resp))
    return 0


def _cmd_is_division(args):
    request = schemas.ClassifyRequest(a=args.a, b=args.b)
    resp = _invoke(
        args, "/is-division", request, schemas.ClassificationResponse,
        handlers.classify,
    )
    if args.json:
        _print_json(resp)
    else:
        print("true" if resp.division else "false")
    return 0


def _cmd_ramified(args):
    request = schemas.ClassifyRequest(a=args.a, b=args.b)
    resp = _invoke(
        args, "/ramified", request, schemas.ClassificationResponse,
        handlers.classify,
    )
    if args.json:
        _print_json(resp)
    else:
        print(" ".join(str(label) for label in resp.ramified))
    return 0


def _cmd_isomorphic(args):
    request = schemas.IsomorphicRequest(a=args.a, b=args.b, a2=args.a2, b2=args.b2)
    resp = _invoke(
        args, "/isomorphic", request, schemas.IsomorphicResponse,
        handlers.isomorphic,
    )
    if args.json:
        _print_json(resp)
    else:
        print("true" if resp.isomorphic else "false")
    return 0


def _cmd_conic_point(args):
    request = schemas.ConicPointRequest(a=args.a, b=args.b, bound=args.bound)
    resp = _invoke(
        args, "/conic-point", request, schemas.ConicPointResponse,
        handlers.conic_point,
    )
    if args.json:
        _print_json(resp)
    else:
        print(f"{resp.x} {resp.y} {resp.z}")
    return 0


def _cmd_parametrize(args):
    request = schemas.ParametrizeRequest(a=args.a, b=args.b, bound=args.bound)
    resp = _invoke(
        args, "/parametrize", request, schemas.ParametrizeResponse,
        handlers.parametrize,
    )
    if args.json:
        _print_json(resp)
    else:
        point = resp.point
        print(f"point: {point.x} {point.y} {point.z}")
        print(f"X: {resp.X}")
        print(f"Y: {resp.Y}")
        print(f"Z: {resp.Z}")
        print(f"base: {resp.base[0]} {resp.base[1]}")
    return 0


def _cmd_ring_reduce(args):
    request = schemas.RingReduceRequest(a=args.a, b=args.b, poly=args.p)
    resp = _invoke(
        args, "/ring-reduce", request, schemas.RingReduceResponse,
        handlers.ring_reduce,
    )
    if args.json:
        _print_json(resp)
    else:
        print(resp.reduced)
    return 0


def _cmd_avatar_build(args):
    request = schemas.AvatarBuildRequest(p=args.p, q=args.q)
    resp = _invoke(
        args, "/avatar-build", request, schemas.AvatarBuildResponse,
        handlers.avatar_build,
    )
    format = "json" if args.json else args.format
    sys.stdout.write(emit_record(resp.model_dump(), format))
    return 0


def _cmd_avatar_check(args):
    request = schemas.AvatarCheckRequest(p=args.p, q=args.q, a=args.a, b=args.b)
    resp = _invoke(
        args, "/avatar-check", request, schemas.AvatarCheckResponse,
        handlers.avatar_check,
    )
    if args.json:
        _print_json(resp)
    else:
        print("ok" if resp.ok else "failed")
    return 0 if resp.ok else 1


def _cmd_selftest(args):
    request = schemas.SelftestRequest(depth=args.depth)
    resp = _invoke(
        args, "/selftest", request, schemas.SelftestResponse, handlers.selftest
    )
    if args.json:
        _print_json(resp)
    else:
        for result in resp.results:
            if result.ok:
                print(f"PASS {result.name} ({result.checks} checks)")
            else:
                print(f"FAIL {result.name}: {result.detail}")
        print("ok" if resp.ok else "failed")
    return 0 if resp.ok else 1


def _cmd_serve(args):
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(), host=args.host, port=args.port)
    return 0


def _algebra_flags(parser, required=True):
    parser.add_argument(
        "-a", required=required,
        help="first structure constant, a rational like -a 2 or -a=-3/2",
    )
    parser.add_argument(
        "-b", required=required,
        help="second structure constant, same syntax as -a",
    )


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="quatsurf",
        description=(
            "Exact arithmetic, classification, conic parametrization, and "
            "surface presentations for rational quaternion algebras."
        ),
    )
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument(
        "--json", action="store_true", help="emit a JSON record instead of text"
    )
    shared.add_argument(
        "--url", metavar="URL",
        help="send the request to a running service at this base URL",
    )
    sub = parser.add_subparsers(dest="command", metavar="command")

    def command(name, help_text, func, parents=(shared,)):
        p = sub.add_parser(name, help=help_text, parents=list(parents))
        p.set_defaults(func=func)
        return p

    p = command("norm", "reduced norm of a quaternion", _cmd_norm)
    _algebra_flags(p)
    p.add_argument(
        "-e", required=True, metavar="ELEMENT",
        help="quaternion like '1 + 2*i - 1/2*j + 0*k'",
    )

    p = command("mul", "product of two quaternions", _cmd_mul)
    _algebra_flags(p)
    p.add_argument(
        "-e", action="append", required=True, metavar="ELEMENT",
        help="factor; pass exactly twice, left factor first",
    )

    p = command("inverse", "multiplicative inverse of a quaternion", _cmd_inverse)
    _algebra_flags(p)
    p.add_argument("-e", required=True, metavar="ELEMENT", help="quaternion to invert")

    p = command(
        "is-division", "whether the algebra is a division algebra", _cmd_is_division
    )
    _algebra_flags(p)

    p = command("ramified", "places where the algebra ramifies", _cmd_ramified)
    _algebra_flags(p)

    p = command(
        "isomorphic", "whether two algebras are isomorphic", _cmd_isomorphic
    )
    _algebra_flags(p)
    p.add_argument("--a2", required=True, help="first constant of the second algebra")
    p.add_argument("--b2", required=True, help="second constant of the second algebra")

    p = command(
        "conic-point", "integer point on z^2 = a*x^2 + b*y^2", _cmd_conic_point
    )
    _algebra_flags(p)
    p.add_argument(
        "--bound", type=int, default=10,
        help="initial search height, deepened automatically (default 10)",
    )

    p = command(
        "parametrize", "rational parametrization of the conic", _cmd_parametrize
    )
    _algebra_flags(p)
    p.add_argument(
        "--bound", type=int, default=10,
        help="initial search height for the base point (default 10)",
    )

    p = command(
        "ring-reduce", "normal form in the conic coordinate ring", _cmd_ring_reduce
    )
    _algebra_flags(p)
    p.add_argument(
        "-p", required=True, metavar="POLY",
        help="polynomial in x, y, z to reduce",
    )

    p = command("avatar-build", "build the surface presentation", _cmd_avatar_build)
    p.add_argument("-p", required=True, metavar="POLY", help="polynomial in u")
    p.add_argument("-q", required=True, metavar="POLY", help="polynomial in w")
    p.add_argument(
        "--format", choices=("text", "json", "ideal"), default="text",
        help="output format (default text)",
    )

    p = command(
        "avatar-check",
        "verify a surface presentation (tower or specialization)",
        _cmd_avatar_check,
    )
    p.add_argument("-p", metavar="POLY", help="polynomial in u (tower check)")
    p.add_argument("-q", metavar="POLY", help="polynomial in w (tower check)")
    _algebra_flags(p, required=False)

    p = command("selftest", "run the built-in verification suites", _cmd_selftest)
    p.add_argument(
        "--depth", choices=("quick", "full"), default="quick",
        help="quick trims iteration counts; full runs everything (default quick)",
    )

    p = command("serve", "run the HTTP service", _cmd_serve, parents=())
    p.add_argument("--host", default="127.0.0.1", help="bind address (default 127.0.0.1)")
    p.add_argument("--port", type=int, default=8000, help="port (default 8000)")

    return parser


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    if not getattr(args, "command", None):
        parser.print_usage(sys.stderr)
        return 2
    try:
        return args.func(args)
    except Error as exc:
        sys.stderr.write(json.dumps(exc.record()) + "\n")
        return 2 if exc.code in _USAGE_ERROR_CODES else 1

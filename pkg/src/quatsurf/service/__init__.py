"""HTTP front-end wrapping the handler layer.

Every operation is a POST endpoint under /v1 taking and returning the
pydantic models from `schemas`.  Domain failures become HTTP 400 with the
same error record the CLI prints, so remote and local behavior match.
"""

from __future__ import annotations

from .. import __version__
from ..errors import Error
from . import handlers, schemas

__all__ = ["create_app"]


def create_app():
    from fastapi import FastAPI, Request
    from fastapi.responses import JSONResponse

    app = FastAPI(title="quatsurf", version=__version__)

    @app.exception_handler(Error)
    async def _domain_error(_request: Request, exc: Error) -> JSONResponse:
        return JSONResponse(status_code=400, content=exc.record())

    def post(path, handler, response_model):
        app.add_api_route(
            "/v1" + path, handler, methods=["POST"], response_model=response_model
        )

    post("/norm", handlers.norm, schemas.NormResponse)
    post("/mul", handlers.mul, schemas.QuaternionModel)
    post("/inverse", handlers.inverse, schemas.QuaternionModel)
    post("/is-division", handlers.classify, schemas.ClassificationResponse)
    post("/ramified", handlers.classify, schemas.ClassificationResponse)
    post("/isomorphic", handlers.isomorphic, schemas.IsomorphicResponse)
    post("/conic-point", handlers.conic_point, schemas.ConicPointResponse)
    post("/parametrize", handlers.parametrize, schemas.ParametrizeResponse)
    post("/ring-reduce", handlers.ring_reduce, schemas.RingReduceResponse)
    post("/avatar-build", handlers.avatar_build, schemas.AvatarBuildResponse)
    post("/avatar-check", handlers.avatar_check, schemas.AvatarCheckResponse)
    post("/selftest", handlers.selftest, schemas.SelftestResponse)
    app.add_api_route(
        "/v1/health",
        handlers.health,
        methods=["GET"],
        response_model=schemas.HealthResponse,
    )
    return app

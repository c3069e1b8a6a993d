"""Request/response models for the HTTP service and the CLI.

Every number travels as an exact decimal string (integer or rational);
nothing is ever a float.  The CLI reuses these models verbatim, so local
and remote invocations serialize identically.
"""

from __future__ import annotations

from typing import Literal, Optional, Union

from pydantic import BaseModel, Field


class QuaternionModel(BaseModel):
    """Exact coordinates of x0 + x*i + y*j + z*k in the algebra (a, b)."""

    a: str
    b: str
    x0: str
    x: str
    y: str
    z: str


class NormRequest(BaseModel):
    a: str
    b: str
    element: str


class NormResponse(BaseModel):
    norm: str


class MulRequest(BaseModel):
    a: str
    b: str
    elements: list[str] = Field(min_length=2, max_length=2)


class InverseRequest(BaseModel):
    a: str
    b: str
    element: str


class ClassifyRequest(BaseModel):
    a: str
    b: str


class ClassificationResponse(BaseModel):
    a: str
    b: str
    division: bool
    ramified: list[Union[int, str]]


class IsomorphicRequest(BaseModel):
    a: str
    b: str
    a2: str
    b2: str


class IsomorphicResponse(BaseModel):
    a: str
    b: str
    a2: str
    b2: str
    isomorphic: bool


class ConicPointRequest(BaseModel):
    a: str
    b: str
    bound: int = 10


class ConicPointResponse(BaseModel):
    x: str
    y: str
    z: str


class ParametrizeRequest(BaseModel):
    a: str
    b: str
    bound: int = 10


class ParametrizeResponse(BaseModel):
    point: ConicPointResponse
    X: str
    Y: str
    Z: str
    base: list[str] = Field(min_length=2, max_length=2)


class RingReduceRequest(BaseModel):
    a: str
    b: str
    poly: str


class RingReduceResponse(BaseModel):
    input: str
    reduced: str


class AvatarBuildRequest(BaseModel):
    p: str
    q: str


class AvatarBuildResponse(BaseModel):
    p: str
    q: str
    eq1: str
    eq2: str


class AvatarCheckRequest(BaseModel):
    p: Optional[str] = None
    q: Optional[str] = None
    a: Optional[str] = None
    b: Optional[str] = None


class AvatarCheckResponse(BaseModel):
    check: Literal["tower-consistency", "specialization"]
    ok: bool


class SelftestRequest(BaseModel):
    depth: Literal["quick", "full"] = "quick"


class SuiteResultModel(BaseModel):
    name: str
    ok: bool
    checks: int
    detail: str = ""


class SelftestResponse(BaseModel):
    depth: str
    ok: bool
    results: list[SuiteResultModel]


class HealthResponse(BaseModel):
    status: str
    version: str

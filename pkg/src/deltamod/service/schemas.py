"""Request and response models for the HTTP service.

Matrices travel as the shared text format ("<rows> <cols>" header line,
then rows of integers); certificates and normalization records stay
schemaless dicts because their shape depends on the certified structure.
"""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, Field


class MatrixPayload(BaseModel):
    matrix: str = Field(description="matrix in the shared text format")


class DeltaRequest(MatrixPayload):
    limit: int | None = Field(default=None, description="test |det| <= limit instead")


class SpikeRequest(MatrixPayload):
    tip: int


class StackRequest(MatrixPayload):
    parts: list[list[int]]
    m: int


class VconnRequest(MatrixPayload):
    s: int


class DecomposeRequest(BaseModel):
    vector: list[int]


class ConstructRequest(BaseModel):
    family: str
    params: list[int] = Field(default_factory=list)
    matrices: list[str] = Field(
        default_factory=list, description="summand matrices, direct_sum only"
    )


class Rank2SearchRequest(BaseModel):
    delta: int
    box_scale: int = 1


class ExactSearchRequest(BaseModel):
    rank: int
    delta: int
    budget: int | None = None


class VerifyRequest(BaseModel):
    prop: Literal["prop1", "prop2", "prop3"]
    delta: int
    rank: int | None = None


class DeltaResponse(BaseModel):
    rank: int
    delta: int
    witness_rows: list[int]
    witness_cols: list[int]


class ModularityResponse(BaseModel):
    rank: int
    limit: int
    within_limit: bool


class PointsResponse(BaseModel):
    points: int
    classes: list[list[int]]
    loops: list[int]


class CertificateResponse(BaseModel):
    kind: str
    indices: dict
    verified: bool
    reason: str


class VconnResponse(BaseModel):
    s: int
    connected: bool


class ConstructResponse(BaseModel):
    rows: int
    cols: int
    matrix: str


class SearchResponse(BaseModel):
    rank: int
    delta_bound: int
    maximum: int
    witness: list[list[int]]
    normalization: dict
    nodes_explored: int
    exhaustive: bool


class BoundsResponse(BaseModel):
    delta: int
    rank: int
    lpsx: int
    main: int
    final: int
    rank2: dict


class CheckItem(BaseModel):
    label: str
    passed: bool
    observed: str


class VerdictResponse(BaseModel):
    name: str
    passed: bool
    skipped: bool
    reason: str
    checks: list[CheckItem]
    certificates: list[dict]


class HealthResponse(BaseModel):
    status: str
    version: str

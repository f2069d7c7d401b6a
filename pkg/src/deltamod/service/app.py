"""FastAPI app wrapping the core package, one endpoint per operation.

Exit-code conventions of the CLI map onto HTTP statuses here: domain
errors (unparsable matrices, exceeded budgets, degenerate inputs) give
400, out-of-range indices and bad parameter values give 422.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..bounds import bound_final, bound_lpsx, bound_main, rank2_bounds
from ..certificates import (
    check_spike,
    check_stack,
    span_decompose,
    verify_extension_bound,
    verify_spike_bound,
    verify_stack_bound,
)
from ..errors import DomainError
from ..families import construct_family, direct_sum
from ..linalg import delta_of, is_delta_modular, rank
from ..matrix import emit_matrix, parallel_classes, parse_matrix
from ..matroid import MinorView, is_vertically_s_connected
from ..search import exact_maximum, rank2_maximum
from . import schemas


def create_app() -> FastAPI:
    api = FastAPI(title="deltamod", version=__version__)

    @api.exception_handler(DomainError)
    async def _domain_error(_request: Request, exc: DomainError) -> JSONResponse:
        return JSONResponse(status_code=400, content={"detail": str(exc)})

    @api.exception_handler(ValueError)
    async def _value_error(_request: Request, exc: ValueError) -> JSONResponse:
        return JSONResponse(status_code=422, content={"detail": str(exc)})

    @api.exception_handler(IndexError)
    async def _index_error(_request: Request, exc: IndexError) -> JSONResponse:
        return JSONResponse(status_code=422, content={"detail": str(exc)})

    @api.get("/health", response_model=schemas.HealthResponse)
    def health() -> dict:
        return {"status": "ok", "version": __version__}

    @api.post(
        "/delta",
        response_model=schemas.DeltaResponse | schemas.ModularityResponse,
    )
    def delta(req: schemas.DeltaRequest) -> dict:
        a = parse_matrix(req.matrix)
        if req.limit is None:
            return delta_of(a).as_dict()
        return {
            "rank": rank(a),
            "limit": req.limit,
            "within_limit": is_delta_modular(a, req.limit),
        }

    @api.post("/points", response_model=schemas.PointsResponse)
    def points(req: schemas.MatrixPayload) -> dict:
        pc = parallel_classes(parse_matrix(req.matrix))
        return {
            "points": pc.points,
            "classes": [list(c) for c in pc.classes],
            "loops": list(pc.loops),
        }

    @api.post("/check/spike", response_model=schemas.CertificateResponse)
    def spike(req: schemas.SpikeRequest) -> dict:
        return check_spike(parse_matrix(req.matrix), req.tip).as_dict()

    @api.post("/check/stack", response_model=schemas.CertificateResponse)
    def stack(req: schemas.StackRequest) -> dict:
        view = MinorView(parse_matrix(req.matrix))
        return check_stack(view, req.parts, req.m).as_dict()

    @api.post("/check/vconn", response_model=schemas.VconnResponse)
    def vconn(req: schemas.VconnRequest) -> dict:
        view = MinorView(parse_matrix(req.matrix))
        return {"s": req.s, "connected": is_vertically_s_connected(view, req.s)}

    @api.post("/decompose", response_model=schemas.CertificateResponse)
    def decompose(req: schemas.DecomposeRequest) -> dict:
        return span_decompose(tuple(req.vector)).as_dict()

    @api.post("/construct", response_model=schemas.ConstructResponse)
    def construct(req: schemas.ConstructRequest) -> dict:
        if req.family == "direct_sum":
            if not req.matrices:
                raise ValueError("direct_sum takes one or more matrices")
            built = direct_sum(*(parse_matrix(m) for m in req.matrices))
        else:
            if req.matrices:
                raise ValueError("matrices apply to direct_sum only")
            built = construct_family(req.family, req.params)
        return {"rows": built.rows, "cols": built.cols, "matrix": emit_matrix(built)}

    @api.post("/search/rank2", response_model=schemas.SearchResponse)
    def search_rank2(req: schemas.Rank2SearchRequest) -> dict:
        return rank2_maximum(req.delta, box_scale=req.box_scale).as_dict()

    @api.post("/search/exact", response_model=schemas.SearchResponse)
    def search_exact(req: schemas.ExactSearchRequest) -> dict:
        return exact_maximum(req.rank, req.delta, budget=req.budget).as_dict()

    @api.get("/bounds", response_model=schemas.BoundsResponse)
    def bounds(delta: int, rank: int) -> dict:
        return {
            "delta": delta,
            "rank": rank,
            "lpsx": bound_lpsx(delta, rank),
            "main": bound_main(delta, rank),
            "final": bound_final(delta, rank),
            "rank2": rank2_bounds(delta).as_dict(),
        }

    @api.post("/verify", response_model=schemas.VerdictResponse)
    def verify(req: schemas.VerifyRequest) -> dict:
        if req.rank is not None and req.prop != "prop3":
            raise ValueError("rank applies to prop3 only")
        if req.prop == "prop1":
            verdict = verify_spike_bound(req.delta)
        elif req.prop == "prop2":
            verdict = verify_stack_bound(req.delta)
        elif req.rank is not None:
            verdict = verify_extension_bound(req.delta, req.rank)
        else:
            verdict = verify_extension_bound(req.delta)
        return verdict.as_dict()

    return api


app = create_app()

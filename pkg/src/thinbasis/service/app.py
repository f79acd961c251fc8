"""FastAPI application wrapping the command handlers."""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__, handlers
from ..errors import DomainError, InvalidParamsError, ResourceLimitError
from .models import (
    CompareRequest,
    ConstructRequest,
    DecomposeRequest,
    EnumerateRequest,
    Envelope,
    ProfileRequest,
    VerifyRequest,
)


def create_app() -> FastAPI:
    app = FastAPI(title="thinbasis", version=__version__)

    @app.exception_handler(InvalidParamsError)
    @app.exception_handler(DomainError)
    async def _bad_params(request: Request, exc: Exception) -> JSONResponse:
        return JSONResponse(status_code=400, content={"detail": str(exc)})

    @app.exception_handler(ResourceLimitError)
    async def _over_cap(request: Request, exc: ResourceLimitError) -> JSONResponse:
        return JSONResponse(
            status_code=507,
            content={
                "detail": str(exc),
                "required_bytes": exc.required_bytes,
                "cap_bytes": exc.cap_bytes,
            },
        )

    @app.get("/v1/health")
    async def health() -> dict:
        return {"status": "ok", "version": __version__}

    @app.post("/v1/construct", response_model=Envelope)
    async def construct(req: ConstructRequest) -> dict:
        return handlers.handle_construct(**req.construction_kwargs())

    @app.post("/v1/decompose", response_model=Envelope)
    async def decompose(req: DecomposeRequest) -> dict:
        return handlers.handle_decompose(req.n, **req.construction_kwargs())

    @app.post("/v1/enumerate", response_model=Envelope)
    async def enumerate_elements(req: EnumerateRequest) -> dict:
        return handlers.handle_enumerate(req.x, **req.construction_kwargs())

    @app.post("/v1/verify", response_model=Envelope)
    async def verify(req: VerifyRequest) -> dict:
        return handlers.handle_verify(
            req.N, jobs=req.jobs, seed=req.seed, **req.construction_kwargs()
        )

    @app.post("/v1/profile", response_model=Envelope)
    async def profile(req: ProfileRequest) -> dict:
        return handlers.handle_profile(req.x, **req.construction_kwargs())

    @app.post("/v1/compare", response_model=Envelope)
    async def compare(req: CompareRequest) -> dict:
        return handlers.handle_compare(req.x, **req.construction_kwargs())

    return app


app = create_app()

"""HTTP wiring: one route per pipeline stage.

Stabgraph errors become 422 responses with a stable ``error`` code (the
exception class name) so clients can branch without parsing messages.
"""

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from ..errors import StabgraphError
from . import handlers
from .models import (
    BoundaryIn,
    BoundaryOut,
    ConstructOut,
    ContactIn,
    ContactOut,
    EnumerateIn,
    EnumerateOut,
    GraphIn,
    PathsOut,
    VerifyIn,
    VerifyOut,
)


def create_app() -> FastAPI:
    app = FastAPI(title="stabgraph", version="1.0.0")

    @app.exception_handler(StabgraphError)
    async def on_stabgraph_error(request: Request, exc: StabgraphError):
        return JSONResponse(
            status_code=422,
            content={"error": exc.code, "message": str(exc)},
        )

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok"}

    @app.post("/construct", response_model=ConstructOut)
    def construct(body: GraphIn) -> ConstructOut:
        return handlers.handle_construct(body)

    @app.post("/contact", response_model=ContactOut)
    def contact(req: ContactIn) -> ContactOut:
        return handlers.handle_contact(req)

    @app.post("/boundary", response_model=BoundaryOut)
    def boundary(req: BoundaryIn) -> BoundaryOut:
        return handlers.handle_boundary(req)

    @app.get("/paths/{n}", response_model=PathsOut)
    def paths(n: int) -> PathsOut:
        return handlers.handle_paths(n)

    @app.post("/enumerate", response_model=EnumerateOut)
    def enumerate_classes(req: EnumerateIn) -> EnumerateOut:
        return handlers.handle_enumerate(req)

    @app.post("/verify", response_model=VerifyOut)
    def verify(req: VerifyIn) -> VerifyOut:
        return handlers.handle_verify(req)

    return app

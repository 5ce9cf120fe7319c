from collections.abc import AsyncIterator
from contextlib import asynccontextmanager

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from prometheus_fastapi_instrumentator import Instrumentator

from app.api import router as api_router
from app.api.common import status_for
from app.core.config import Settings
from app.core.config import settings as default_settings
from app.core.errors import ChromaCoverError
from app.logging import configure_logging, get_logger

logger = get_logger(__name__)


@asynccontextmanager
async def lifespan(app: FastAPI) -> AsyncIterator[None]:
    s: Settings = app.state.settings
    logger.info(
        "service started",
        exact_vertex_limit=s.exact_vertex_limit,
        allow_large=s.allow_large,
        switching_class_limit=s.switching_class_limit,
        seed=s.seed,
    )
    yield
    logger.info("service stopped")


async def chromacover_error_handler(request: Request, exc: Exception) -> JSONResponse:
    """Domain errors raised outside `handle_service_errors`, e.g. in dependencies."""
    assert isinstance(exc, ChromaCoverError)
    status = status_for(exc)
    logger.warning("request rejected", path=request.url.path, status=status, error=str(exc))
    return JSONResponse(status_code=status, content={"detail": str(exc)})


def create_app(settings: Settings | None = None, *, expose_metrics: bool = True) -> FastAPI:
    """
    Build the HTTP service.

    `settings` defaults to the environment-loaded singleton; routes read it
    back from `app.state.settings`. Only one app per process should expose
    metrics, since the collectors live in the default registry.
    """
    s = settings or default_settings
    configure_logging(level=s.log_level, compact=s.log_compact)

    app = FastAPI(title="chromacover", version="0.1.0", lifespan=lifespan)
    app.state.settings = s
    app.include_router(api_router)
    app.add_exception_handler(ChromaCoverError, chromacover_error_handler)

    app.add_middleware(
        CORSMiddleware,
        allow_origins=s.cors_origins,
        allow_credentials=True,
        allow_methods=["*"],
        allow_headers=["*"],
    )

    if expose_metrics:
        Instrumentator().instrument(app).expose(app, endpoint="/metrics")

    return app


app = create_app()

"""
CSA Routing Simulator - HTTP Entry Point
FastAPI surface over the topology / alignment / routing / harness library
"""

import logging
from contextlib import asynccontextmanager

from fastapi import FastAPI, Request
from fastapi.exception_handlers import http_exception_handler
from fastapi.responses import JSONResponse
from starlette.exceptions import HTTPException as StarletteHTTPException

from src.api import health_routes, simulation_routes
from src.config.settings import settings
from src.errors import InvariantViolationError, SimulationError
from src.utils.logging_helper import configure_logging

configure_logging(settings.LOG_LEVEL)
logger = logging.getLogger(__name__)

VERSION = "1.0.0"


@asynccontextmanager
async def lifespan(app: FastAPI):
    """Manage application lifecycle"""
    logger.info("=" * 60)
    logger.info("Starting CSA Routing Simulator...")
    logger.info(f"Environment: {'Development' if settings.DEBUG else 'Production'}")
    logger.info(
        f"TTL factor {settings.DEFAULT_TTL_FACTOR} | "
        f"strict invariants {'on' if settings.STRICT_INVARIANTS else 'off'}"
    )
    logger.info("=" * 60)
    yield
    logger.info("Shutting down CSA Routing Simulator...")


app = FastAPI(
    title="CSA Routing Simulator",
    description="Greedy/perimeter geographic routing over physical vs connectivity-aligned coordinates",
    version=VERSION,
    lifespan=lifespan,
)


# Global error handling: simulator errors are the caller's input problem (422),
# anything else is logged in full and returned as a generic 500.

@app.exception_handler(InvariantViolationError)
async def invariant_violation_handler(request: Request, exc: InvariantViolationError):
    logger.error(f"Invariant violated on {request.method} {request.url.path}: {exc}")
    return JSONResponse(status_code=500, content={"detail": "Internal server error"})


@app.exception_handler(SimulationError)
async def simulation_error_handler(request: Request, exc: SimulationError):
    logger.warning(f"⚠️ {type(exc).__name__} on {request.method} {request.url.path}: {exc}")
    return JSONResponse(status_code=422, content={"detail": str(exc), "error": type(exc).__name__})


@app.exception_handler(StarletteHTTPException)
async def safe_http_exception_handler(request: Request, exc: StarletteHTTPException):
    if exc.status_code >= 500:
        logger.error(f"{exc.status_code} on {request.method} {request.url.path}: {exc.detail}")
        if not settings.DEBUG:
            return JSONResponse(status_code=exc.status_code, content={"detail": "Internal server error"})
    return await http_exception_handler(request, exc)


@app.exception_handler(Exception)
async def unhandled_exception_handler(request: Request, exc: Exception):
    logger.error(f"Unhandled error on {request.method} {request.url.path}", exc_info=True)
    return JSONResponse(status_code=500, content={"detail": "Internal server error"})


app.include_router(health_routes.router, tags=["health"])
app.include_router(simulation_routes.router, tags=["simulation"])


@app.get("/")
async def root():
    """Root endpoint"""
    return {
        "name": "CSA Routing Simulator",
        "version": VERSION,
        "status": "running",
        "endpoints": {
            "generate": "/api/topology/generate",
            "align": "/api/align",
            "route": "/api/route",
            "compare": "/api/compare",
            "health": "/api/health/",
            "docs": "/docs",
        },
    }


if __name__ == "__main__":
    import uvicorn

    uvicorn.run(
        "main:app",
        host=settings.API_HOST,
        port=settings.API_PORT,
        reload=settings.DEBUG,
    )

"""
Health Check Routes

Liveness for the simulator service; no external components to check.
"""

import logging
import time
from typing import Any, Dict

from fastapi import APIRouter

from src.config.settings import settings

logger = logging.getLogger(__name__)

router = APIRouter(prefix="/api/health", tags=["health"])


@router.get("/")
async def get_system_health() -> Dict[str, Any]:
    """
    Service status and the settings that change simulation results

    Returns:
        {"timestamp": ..., "overall_status": "healthy", "settings": {...}}
    """
    logger.info("Health check requested")
    return {
        "timestamp": int(time.time()),
        "overall_status": "healthy",
        "settings": {
            "default_ttl_factor": settings.DEFAULT_TTL_FACTOR,
            "experiment_workers": settings.EXPERIMENT_WORKERS,
            "strict_invariants": settings.STRICT_INVARIANTS,
        },
    }


@router.get("/ping")
async def ping() -> Dict[str, Any]:
    """
    Simple ping endpoint for basic uptime monitoring

    Returns:
        {"status": "ok", "timestamp": 1234567890}
    """
    return {"status": "ok", "timestamp": int(time.time())}

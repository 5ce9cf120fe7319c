from fastapi import APIRouter

from .analysis import router as analysis_router
from .health import router as health_router

# Unified API router to be mounted by the application
router = APIRouter()

router.include_router(analysis_router, prefix="/api")

# Non-versioned operational endpoints (health/metrics-style)
router.include_router(health_router)

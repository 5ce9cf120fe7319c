"""
Common utilities for API endpoints.

Domain errors are ValueErrors carrying an exit code; the decorator below maps
them onto HTTP statuses.
"""

import functools
from collections.abc import Callable
from typing import Any, TypeVar

from fastapi import HTTPException

from app.core.errors import ChromaCoverError
from app.logging import get_logger
from app.models.enums import ExitCode

logger = get_logger(__name__)

F = TypeVar("F", bound=Callable[..., Any])

_STATUS_BY_EXIT_CODE = {
    ExitCode.SIZE_GUARD: 413,
    ExitCode.MISMATCH: 422,
}


def status_for(error: ValueError) -> int:
    if isinstance(error, ChromaCoverError):
        return _STATUS_BY_EXIT_CODE.get(error.exit_code, 400)
    return 400


def handle_service_errors(func: F) -> F:
    """
    Decorator converting service exceptions to HTTP responses.

    Maps:
    - SizeLimitError -> 413
    - SubgraphMismatchError -> 422
    - Other ValueErrors (every domain error) -> 400
    - Other exceptions -> 500

    Endpoints are synchronous; FastAPI runs them in its thread pool.
    """

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except ValueError as e:
            status = status_for(e)
            logger.warning("request rejected", endpoint=func.__name__, status=status, error=str(e))
            raise HTTPException(status_code=status, detail=str(e)) from e
        except Exception as e:
            logger.error("internal error", endpoint=func.__name__, error=str(e))
            raise HTTPException(status_code=500, detail=str(e)) from e

    return wrapper  # type: ignore[return-value]

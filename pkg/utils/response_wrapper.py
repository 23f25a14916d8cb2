from typing import Any, Optional

from fastapi import HTTPException
from fastapi.concurrency import run_in_threadpool

from utils.exceptions import (
    AlignmentError,
    GraphFormatError,
    PfaffianError,
    SizeLimitExceeded,
    SpliceError,
    VerificationError,
)


def api_response(data: Any = None, message: str = "Success", status: bool = True, error: Optional[str] = None):
    return {
        "status": status,
        "message": message,
        "data": data,
        "error": error
    }


def error_detail(exc: PfaffianError) -> dict:
    """Envelope for a failed request, used as the HTTPException detail."""
    return api_response(message="Failed", status=False, error=str(exc))


def status_code_for(exc: PfaffianError) -> int:
    """HTTP status for a service error: 400 bad input, 413 too large, 422 precondition, 500 internal."""
    if isinstance(exc, GraphFormatError):
        return 400
    if isinstance(exc, SizeLimitExceeded):
        return 413
    if isinstance(exc, (AlignmentError, SpliceError, VerificationError)):
        return 500
    return 422


async def run_service(func, *args):
    """Run a CPU-bound service call in the threadpool, mapping its errors to HTTP errors."""
    try:
        return await run_in_threadpool(func, *args)
    except PfaffianError as exc:
        raise HTTPException(status_code=status_code_for(exc), detail=error_detail(exc))

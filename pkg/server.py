"""FastAPI application exposing the spectral filter pipeline."""
from contextlib import asynccontextmanager
from typing import List, Optional

from fastapi import FastAPI, Query, Request
from fastapi.responses import JSONResponse

from dotenv import load_dotenv
load_dotenv()

from src import __version__
from src.data_loader import DataLoader
from src.exceptions import BaseAppException, DataValidationError, NumericalError, PlanValidationError
from src.logger import get_logger
from src.models.plan_models import FilterRequest, FilterResponse, SignalPayload, SynthRequest
from src.services import FilterService, SynthService, VerifyService

logger = get_logger(__name__)


@asynccontextmanager
async def lifespan(app: FastAPI):
    """Handle application startup and shutdown."""
    logger.info(f"Spectral filter service {__version__} starting up...")
    yield
    logger.info("Application shutting down...")


app = FastAPI(
    title="Spectral Filter Service",
    description="Hermite/Laguerre projection, subspace filtering and fractional Fourier transforms",
    version=__version__,
    lifespan=lifespan,
)

data_loader = DataLoader()
filter_service = FilterService()
synth_service = SynthService()

# Rejections of the caller's input rather than server faults
_CLIENT_ERRORS = (NumericalError, PlanValidationError, DataValidationError)


@app.exception_handler(BaseAppException)
async def app_exception_handler(request: Request, exc: BaseAppException):
    """Handle application-specific exceptions."""
    status_code = 422 if isinstance(exc, _CLIENT_ERRORS) else 500
    log = logger.warning if status_code == 422 else logger.error
    log(f"Application error on {request.url.path}: {exc}")
    return JSONResponse(
        status_code=status_code,
        content={
            "error": str(exc),
            "type": exc.__class__.__name__
        }
    )


@app.exception_handler(Exception)
async def general_exception_handler(request: Request, exc: Exception):
    """Handle general exceptions."""
    logger.error(f"Unexpected error: {exc}", exc_info=True)
    return JSONResponse(
        status_code=500,
        content={
            "error": "Internal server error",
            "detail": str(exc)
        }
    )


@app.get("/health")
async def health_check():
    """Health check endpoint."""
    logger.info("Health check requested")
    return {"status": "healthy", "version": __version__}


@app.post("/v1/filter", response_model=FilterResponse)
def filter_signal(request_data: FilterRequest):
    """
    Project the samples onto the plan's basis, apply its steps and reconstruct.

    The samples must sit on a uniform t grid; the response carries the filtered
    samples on the same grid and the energy report.
    """
    logger.info(f"Filter request: {len(request_data.signal.t)} samples, {len(request_data.plan.steps)} step(s)")
    signal = data_loader.signal_from_payload(request_data.signal)
    filtered, report = filter_service.filter_signal(request_data.plan, signal)
    return FilterResponse(signal=data_loader.payload_from_signal(filtered), report=report)


@app.post("/v1/synth", response_model=SignalPayload)
def synth_signal(request_data: SynthRequest):
    """Generate a synthetic test signal."""
    logger.info(f"Synth request: {request_data.kind.value}, n={request_data.n}")
    signal, comment = synth_service.synth_signal(
        request_data.kind, request_data.n, request_data.t0, request_data.dt,
        mix=request_data.mix, base=request_data.base, snr_db=request_data.snr_db, seed=request_data.seed,
    )
    if comment:
        logger.info(f"Synth provenance: {comment}")
    return data_loader.payload_from_signal(signal)


@app.get("/v1/verify")
def verify(check: Optional[List[str]] = Query(None)):
    """Run the embedded invariant suite (or the named checks)."""
    service = VerifyService()
    unknown = [name for name in check or [] if name not in service.checks]
    if unknown:
        return JSONResponse(
            status_code=404,
            content={"error": f"Unknown check(s): {', '.join(unknown)}", "available": list(service.checks)},
        )
    results = service.run_all(check)
    return {
        "passed": all(r.passed for r in results),
        "checks": [r.to_dict() for r in results],
    }

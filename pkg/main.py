from typing import Any, Callable, Dict
import uvicorn
from fastapi import FastAPI
import asyncio
from concurrent.futures import ThreadPoolExecutor
import logging
import os
import time

# Configure for serverless first, before the config values are read by handlers
from app.utils.serverless_utils import configure_for_serverless, is_serverless_environment, get_serverless_info
configure_for_serverless()

# Import from our application structure
from app.algebra.phase import HomogeneousPhase
from app.config.env_config import config
from app.models.request_models import PhaseRequest, PittRequest, HealthResponse
from app.operators.fractional import pitt_report
from app.tools.analysis.analyze_tool import analyze_phase
from app.tools.analysis.factor_tool import FactorTool
from app.tools.analysis.newton_tool import newton_report
from app.models.experiment_config import ExperimentConfig
from app.utils.report_utils import PACKAGE_VERSION
from app.utils.response_utils import create_response, http_error

# Configure logging
logging.basicConfig(
    level=config.logging_level,
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
)

# Create logger for the FastAPI app
logger = logging.getLogger(__name__)

# Create FastAPI app
app = FastAPI(
    title="Phase Lab API",
    description="Exact analysis of homogeneous polynomial phases: L^p ranges, Newton polyhedra, Hessian factorization and Pitt exponents",
    version=PACKAGE_VERSION
)
executor = ThreadPoolExecutor(max_workers=4)

# Record startup time
startup_time = time.time()


async def run_blocking(label: str, fn: Callable[[], Any]) -> Dict[str, Any]:
    """
    Run an exact computation on the thread pool and wrap it in the response envelope.

    Args:
        label: Endpoint name for the logs
        fn: Zero-argument callable returning a pydantic model

    Returns:
        The standardized response
    """
    try:
        loop = asyncio.get_event_loop()
        result = await loop.run_in_executor(executor, fn)
        return create_response(result.model_dump())
    except Exception as e:
        logger.error(f"Error in {label}: {e}")
        raise http_error(e)


@app.post("/analyze")
async def analyze(payload: PhaseRequest):
    """Sharp range, Newton data, Hessian normal form and damping factor of a phase."""
    logger.debug(f"Analyzing phase: {payload.phase}")
    return await run_blocking("analyze", lambda: analyze_phase(HomogeneousPhase.parse(payload.phase)))


@app.post("/factor")
async def factor(payload: PhaseRequest):
    """Certified factorization of S''_xy."""
    return await run_blocking(
        "factor", lambda: FactorTool()(ExperimentConfig(command="factor", phase=payload.phase)))


@app.post("/newton")
async def newton(payload: PhaseRequest):
    """Reduced Newton polyhedron and endpoint table."""
    return await run_blocking("newton", lambda: newton_report(payload.phase))


@app.post("/pitt")
async def pitt(payload: PittRequest):
    """Pitt verdict and monomial-kernel exponents."""
    return await run_blocking(
        "pitt", lambda: pitt_report(payload.n_dim, payload.p, payload.q, payload.alpha, payload.beta))


@app.get("/health", response_model=HealthResponse)
async def health_check():
    """Health check with uptime and budget details."""
    details = {
        "uptime_seconds": time.time() - startup_time,
        "is_serverless": is_serverless_environment(),
        "res_cap": config.res_cap,
    }
    if is_serverless_environment():
        details["serverless_info"] = get_serverless_info()
    return HealthResponse(status="ok", version=PACKAGE_VERSION, details=details)


# Startup and shutdown events
@app.on_event("startup")
async def startup_event():
    """Run on application startup."""
    logger.info(f"Application starting up. Serverless environment: {is_serverless_environment()}")


@app.on_event("shutdown")
async def shutdown_event():
    """Run on application shutdown."""
    logger.info("Application shutting down")
    executor.shutdown(wait=False)


# ------------------------------------------------------------
# Main Function
# ------------------------------------------------------------
if __name__ == "__main__":
    port = int(os.environ.get("PORT", 8000))
    uvicorn.run("main:app", host="0.0.0.0", port=port)

"""
Utilities for running the application in serverless environments like Vercel.
These functions handle the read-only filesystem and the smaller memory budget.
"""

import os
import logging
import tempfile

from app.config.env_config import config

logger = logging.getLogger(__name__)

SERVERLESS_RES_CAP = 1024


def is_serverless_environment() -> bool:
    """Check if the application is running in a serverless environment."""
    return os.environ.get("VERCEL") == "1" or os.environ.get("AWS_LAMBDA_FUNCTION_NAME") is not None


def configure_for_serverless() -> bool:
    """
    Configure the application for running in serverless environments.

    This handles:
    - Pointing the report directory at a writable temp dir
    - Lowering the resolution cap

    Returns:
        bool: True if configuration was successful
    """
    try:
        is_vercel = os.environ.get("VERCEL") == "1"
        is_aws_lambda = os.environ.get("AWS_LAMBDA_FUNCTION_NAME") is not None
        if not (is_vercel or is_aws_lambda):
            return True

        logger.info(f"Detected serverless environment: Vercel={is_vercel}, AWS Lambda={is_aws_lambda}")
        tmp_dir = tempfile.mkdtemp(prefix="phase_lab_")
        config.out_dir = tmp_dir
        logger.info(f"Set report directory to {tmp_dir}")

        if config.res_cap > SERVERLESS_RES_CAP:
            config.res_cap = SERVERLESS_RES_CAP
            logger.info(f"Lowered resolution cap to {SERVERLESS_RES_CAP}")
        return True

    except Exception as e:
        logger.error(f"Failed to configure for serverless: {e}")
        return False


def get_serverless_info() -> dict:
    """Get information about the serverless environment."""
    return {
        "is_vercel": os.environ.get("VERCEL") == "1",
        "is_aws_lambda": os.environ.get("AWS_LAMBDA_FUNCTION_NAME") is not None,
        "region": os.environ.get("VERCEL_REGION", "unknown"),
        "res_cap": config.res_cap,
        "out_dir": config.out_dir,
    }

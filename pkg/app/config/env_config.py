"""Environment configuration module."""

import os
import logging
from dotenv import load_dotenv

# Set up logger
logger = logging.getLogger(__name__)

# Load environment variables from .env file - only once at module import time
load_dotenv()


def _int_from_env(name: str, default: int) -> int:
    try:
        return int(os.environ.get(name, str(default)))
    except ValueError:
        logger.warning(f"{name} is not an integer, using {default}")
        return default


def _float_from_env(name: str, default: float) -> float:
    try:
        return float(os.environ.get(name, str(default)))
    except ValueError:
        logger.warning(f"{name} is not a number, using {default}")
        return default


class Config:
    """
    Configuration class for the application.
    This centralized config ensures environment variables are loaded consistently
    across the library, the CLI and the API.
    """

    def __init__(self):
        # Application settings
        self.debug = os.environ.get('DEBUG', '0') == '1'
        self.log_level = os.environ.get('LOG_LEVEL', 'INFO').upper()

        # Numerical budgets
        self.res_cap = _int_from_env('PHASE_LAB_RES_CAP', 4096)
        self.eval_cap = _int_from_env('PHASE_LAB_EVAL_CAP', 2 ** 24)
        self.max_iter = _int_from_env('PHASE_LAB_MAX_ITER', 10000)
        self.tol = _float_from_env('PHASE_LAB_TOL', 1e-6)
        self.workers = _int_from_env('PHASE_LAB_WORKERS', 2)

        # Reports
        self.out_dir = os.environ.get('PHASE_LAB_OUT_DIR', 'reports')

        # Validate critical configuration
        self._validate_config()

    @property
    def logging_level(self) -> int:
        if self.debug:
            return logging.DEBUG
        return getattr(logging, self.log_level, logging.INFO)

    def _validate_config(self):
        """Validate numeric settings and fall back to defaults with a warning."""
        if self.res_cap < 16:
            logger.warning(f"PHASE_LAB_RES_CAP={self.res_cap} is too small, using 4096")
            self.res_cap = 4096
        if self.eval_cap < 1024:
            logger.warning(f"PHASE_LAB_EVAL_CAP={self.eval_cap} is too small, using 2^24")
            self.eval_cap = 2 ** 24
        if self.max_iter < 1:
            logger.warning(f"PHASE_LAB_MAX_ITER={self.max_iter} must be positive, using 10000")
            self.max_iter = 10000
        if not self.tol > 0:
            logger.warning(f"PHASE_LAB_TOL={self.tol} must be positive, using 1e-6")
            self.tol = 1e-6
        if self.workers < 1:
            logger.warning(f"PHASE_LAB_WORKERS={self.workers} must be positive, using 1")
            self.workers = 1
        if self.log_level not in ('DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL'):
            logger.warning(f"LOG_LEVEL={self.log_level} is not a logging level, using INFO")
            self.log_level = 'INFO'


# Create a global config instance - to be imported by other modules
config = Config()

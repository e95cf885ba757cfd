import logging
from abc import ABC, abstractmethod
from typing import Any, List, Optional, Sequence, Tuple

from pydantic import BaseModel

from app.errors import ExperimentAssertionError
from app.models.experiment_config import ExperimentConfig

logger = logging.getLogger(__name__)


class BaseTool(ABC):
    """Abstract base class for all tools; one tool per CLI subcommand."""

    def __init__(self, name: str, description: str):
        """
        Initialize the tool.

        Args:
            name: Name of the tool, which is also its subcommand.
            description: Description of what the tool does.
        """
        self.name = name
        self.description = description

    @abstractmethod
    def __call__(self, settings: ExperimentConfig) -> BaseModel:
        """
        Execute the tool's functionality.

        Returns:
            The report model of the run.
        """
        pass

    def csv_table(self, report: BaseModel) -> Optional[Tuple[Sequence[str], List[Sequence[Any]]]]:
        """Header and rows of the CSV companion file, if the tool writes one."""
        return None

    def check(self, report: BaseModel, settings: ExperimentConfig) -> List[str]:
        """Failed --assert conditions, as messages."""
        return []

    def assert_report(self, report: BaseModel, settings: ExperimentConfig):
        """
        Raise if any --assert condition fails.

        Raises:
            ExperimentAssertionError: listing the failed conditions.
        """
        failures = self.check(report, settings)
        if failures:
            for failure in failures:
                logger.error(f"{self.name}: {failure}")
            raise ExperimentAssertionError("; ".join(failures))
        logger.info(f"{self.name}: all assertions hold")

import logging
from typing import List

from app.models.experiment_config import ExperimentConfig
from app.models.report_models import WitnessReport
from app.operators.witness import unboundedness_witness
from app.tools.base_tool import BaseTool

logger = logging.getLogger(__name__)

WITNESS_SLOPE = 0.5


class WitnessTool(BaseTool):
    """Tool for the unboundedness witness of the β = 0 damping factor."""

    def __init__(self):
        super().__init__(
            name="witness",
            description="Growth of min|Wf| along translated indicators; a slope of 1/2 shows W is unbounded on L^2."
        )

    def __call__(self, settings: ExperimentConfig) -> WitnessReport:
        offsets = [2.0 ** e for e in range(settings.lambda_lo, settings.lambda_hi + 1)]
        return unboundedness_witness(settings.n, offsets)

    def csv_table(self, report: WitnessReport):
        rows = list(zip(report.offsets, report.min_abs, report.l2_ratios))
        return ("offset", "min_abs", "l2_ratio"), rows

    def check(self, report: WitnessReport, settings: ExperimentConfig) -> List[str]:
        tol = settings.assert_tol if settings.assert_tol is not None else 0.1
        if abs(report.slope - WITNESS_SLOPE) > tol:
            return [f"witness slope {report.slope:.4f} is not within {tol:g} of {WITNESS_SLOPE}"]
        return []

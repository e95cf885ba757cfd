import logging
from typing import List

from app.algebra.rational import format_rational
from app.exponents.pitt import fractional_mapping
from app.models.experiment_config import ExperimentConfig
from app.models.report_models import ScalingReport
from app.operators.fractional import INTERPRETATION, fractional_scaling_sweep
from app.tools.base_tool import BaseTool

logger = logging.getLogger(__name__)


class FractionalTool(BaseTool):
    """Tool for the dilation sweep of the fractional integral W_{a,b}."""

    def __init__(self):
        super().__init__(
            name="fractional",
            description="Sweep dilations of ||W_{a,b} f_t||_q / ||f_t||_p; constant exactly when 1/p = 1/q + (b-a)/b."
        )

    def __call__(self, settings: ExperimentConfig) -> ScalingReport:
        q = settings.q if settings.q is not None else format_rational(
            fractional_mapping(settings.a, settings.b, settings.p))
        logger.info(f"Fractional kernel read as {INTERPRETATION}")
        return fractional_scaling_sweep(settings.a, settings.b, settings.p, q)

    def csv_table(self, report: ScalingReport):
        return ("t", "ratio"), list(zip(report.t_values, report.ratios))

    def check(self, report: ScalingReport, settings: ExperimentConfig) -> List[str]:
        tol = settings.assert_tol if settings.assert_tol is not None else 1e-2
        if report.relation_holds and report.drift >= tol:
            return [f"relation holds but drift {report.drift:.3e} >= {tol:g}"]
        if not report.relation_holds and report.drift < tol:
            return [f"relation fails but drift {report.drift:.3e} < {tol:g}"]
        return []

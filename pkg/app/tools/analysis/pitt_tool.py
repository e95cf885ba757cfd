import logging
from typing import List

from app.errors import InputError, OutOfRange
from app.models.experiment_config import ExperimentConfig
from app.models.report_models import PittReport
from app.operators.fractional import pitt_dilation_sweep, pitt_report
from app.tools.base_tool import BaseTool

logger = logging.getLogger(__name__)


class PittTool(BaseTool):
    """Tool for the Pitt exponent verdict and, on the line, its Gaussian dilation sweep."""

    def __init__(self):
        super().__init__(
            name="pitt",
            description="Check n/p + n/q + β - α = n with the side conditions; in dimension one also sweep Gaussian dilates."
        )

    def __call__(self, settings: ExperimentConfig) -> PittReport:
        if settings.q is None:
            raise InputError("pitt needs --q")
        report = pitt_report(settings.n_dim, settings.p, settings.q, settings.alpha, settings.beta)
        if settings.n_dim == 1:
            try:
                report = pitt_dilation_sweep(settings.p, settings.q, settings.alpha, settings.beta)
            except OutOfRange as e:
                logger.warning(f"Skipping the dilation sweep: {e}")
        logger.info(f"Pitt verdict: {report.verdict}")
        return report

    def check(self, report: PittReport, settings: ExperimentConfig) -> List[str]:
        if report.drift is None:
            return []
        tol = settings.assert_tol if settings.assert_tol is not None else 1e-6
        balanced = report.verdict["balance"] == "0"
        if balanced and report.drift > tol:
            return [f"balanced exponents but dilation drift {report.drift:.3e} > {tol:g}"]
        if not balanced and report.drift <= tol:
            return [f"unbalanced exponents but dilation drift {report.drift:.3e} <= {tol:g}"]
        return []

import logging
from typing import List

from app.errors import UndefinedExponent
from app.factorization.hessian import analyze_hessian
from app.models.experiment_config import ExperimentConfig
from app.models.report_models import DecayReport
from app.operators.decay import decay_fit
from app.operators.grid import ResolutionPolicy
from app.tools.analysis.analyze_tool import require_phase
from app.tools.base_tool import BaseTool
from app.utils.report_utils import LADDER_HEADER, ladder_rows

logger = logging.getLogger(__name__)


class DecayTool(BaseTool):
    """Tool for fitting the decay exponent of ‖T_λ‖ along a dyadic λ ladder."""

    def __init__(self):
        super().__init__(
            name="decay",
            description="Fit log-log slopes of operator norms along a lambda ladder and compare with the predicted rate."
        )

    def __call__(self, settings: ExperimentConfig) -> DecayReport:
        phase = require_phase(settings)
        damping = None
        if settings.damped:
            analysis = analyze_hessian(phase)
            if analysis["damping"] is None:
                raise UndefinedExponent(analysis["damping_error"])
            damping = analysis["damping"]
        estimator = "singular_value" if settings.p_exact == 2 else "trial_lower_bound"
        logger.info(f"Decay run for {phase}: p={settings.p}, {estimator}, ladder 2^{settings.lambda_lo}..2^{settings.lambda_hi}")
        return decay_fit(
            phase,
            settings.p_exact,
            settings.lambdas(),
            damping=damping,
            estimator=estimator,
            policy=ResolutionPolicy.default(settings.res_cap),
            tol=settings.tol,
            workers=settings.workers,
        )

    def csv_table(self, report: DecayReport):
        return LADDER_HEADER, ladder_rows(report)

    def check(self, report: DecayReport, settings: ExperimentConfig) -> List[str]:
        tol = settings.assert_tol if settings.assert_tol is not None else 0.05
        gap = abs(report.slope - report.theory_slope_value)
        if gap > tol:
            return [f"slope {report.slope:.4f} is {gap:.4f} from {report.theory_slope} (tolerance {tol:g})"]
        return []

import logging

from app.algebra.phase import mixed_hessian
from app.factorization.hessian import classify_phase, factor_hessian
from app.models.experiment_config import ExperimentConfig
from app.models.report_models import FactorReport
from app.tools.analysis.analyze_tool import require_phase
from app.tools.base_tool import BaseTool

logger = logging.getLogger(__name__)


class FactorTool(BaseTool):
    """Tool for the certified factorization of the mixed Hessian."""

    def __init__(self):
        super().__init__(
            name="factor",
            description="Factor S''_xy into monomial, real linear and irreducible non-real parts with Sturm certificates."
        )

    def __call__(self, settings: ExperimentConfig) -> FactorReport:
        phase = require_phase(settings)
        fact = factor_hessian(phase)
        case = classify_phase(fact, phase.degree)
        logger.info(f"Factored the Hessian of {phase}: {fact.m} real lines, {fact.s} non-real blocks, {case.value}")
        return FactorReport(
            phase=str(phase),
            hessian=str(mixed_hessian(phase.to_polynomial())),
            factorization=fact.to_dict(),
            case=case.value,
            degree_bookkeeping=fact.degree_bookkeeping(),
        )

import logging

from app.algebra.phase import HomogeneousPhase, k_extremes
from app.algebra.rational import format_rational
from app.errors import InputError, OutOfHypothesis
from app.exponents.newton import newton_endpoint_table, reduced_newton_polyhedron
from app.exponents.ranges import l2_source_exponent, sharp_lp_range
from app.factorization.hessian import analyze_hessian
from app.models.experiment_config import ExperimentConfig
from app.models.report_models import AnalysisReport
from app.tools.base_tool import BaseTool

logger = logging.getLogger(__name__)


def require_phase(settings: ExperimentConfig) -> HomogeneousPhase:
    if not settings.phase:
        raise InputError(f"{settings.command} needs --phase")
    return HomogeneousPhase.parse(settings.phase)


def analyze_phase(phase: HomogeneousPhase) -> AnalysisReport:
    """
    Exact analysis of a homogeneous phase.

    Raises:
        DegeneratePhase: when no mixed coefficient is nonzero.
    """
    k_min, k_max = k_extremes(phase)
    lp_range = sharp_lp_range(phase)
    try:
        l2_source = format_rational(l2_source_exponent(phase))
    except OutOfHypothesis:
        l2_source = None
    poly = phase.to_polynomial()
    hessian = analyze_hessian(phase) if phase.degree >= 3 else None
    logger.info(f"Analyzed {phase}: n={phase.degree}, k=({k_min}, {k_max}), range {lp_range}")
    return AnalysisReport(
        phase=str(phase),
        n=phase.degree,
        k_min=k_min,
        k_max=k_max,
        lp_range=lp_range.to_list(),
        l2_source_exponent=l2_source,
        newton_vertices=reduced_newton_polyhedron(poly).to_list(),
        newton_table=newton_endpoint_table(poly),
        factorization=hessian["factorization"].to_dict() if hessian else None,
        hessian_case=hessian["case"].value if hessian else None,
        damping=hessian["damping"].to_dict() if hessian and hessian["damping"] else None,
        damping_error=hessian["damping_error"] if hessian else None,
    )


class AnalyzeTool(BaseTool):
    """Tool for the exact analysis of a phase: ranges, Newton data, Hessian and damping."""

    def __init__(self):
        super().__init__(
            name="analyze",
            description="Sharp L^p range, reduced Newton polyhedron, Hessian normal form and damping factor of a phase."
        )

    def __call__(self, settings: ExperimentConfig) -> AnalysisReport:
        return analyze_phase(require_phase(settings))

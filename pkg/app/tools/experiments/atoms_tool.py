import logging
from typing import List

from app.algebra.parser import parse_phase
from app.models.experiment_config import ExperimentConfig
from app.models.report_models import AtomReport
from app.operators.atoms import KernelClass, atom_uniformity_experiment
from app.tools.base_tool import BaseTool

logger = logging.getLogger(__name__)

ATOM_RATIO_BOUND = 10.0


class AtomsTool(BaseTool):
    """Tool for the uniformity of ‖T_P a‖₁ over twisted atoms."""

    def __init__(self):
        super().__init__(
            name="atoms",
            description="Measure ||T_P a||_1 for twisted atoms on fifty cubes with the kernel |x-y|^(-1/2)|x+y|^(-1/2)."
        )

    def __call__(self, settings: ExperimentConfig) -> AtomReport:
        P = parse_phase(settings.phase or "x*y")
        return atom_uniformity_experiment(KernelClass.two_lines(), P, seed=settings.seed)

    def csv_table(self, report: AtomReport):
        rows = [("atom", r.center, r.half_width, r.l1_norm, r.tail_estimate, r.moment) for r in report.atoms]
        rows += [("control", r.center, r.half_width, r.l1_norm, r.tail_estimate, r.moment)
                 for r in report.control or []]
        return ("family", "center", "half_width", "l1_norm", "tail", "moment"), rows

    def check(self, report: AtomReport, settings: ExperimentConfig) -> List[str]:
        bound = settings.assert_tol if settings.assert_tol is not None else ATOM_RATIO_BOUND
        if report.ratio > bound:
            return [f"atom norm ratio {report.ratio:.3f} > {bound:g}"]
        return []

import logging

from app.algebra.parser import parse_phase
from app.algebra.rational import format_rational
from app.errors import InputError
from app.exponents.newton import newton_distance, newton_endpoint_table, reduced_newton_polyhedron
from app.models.experiment_config import ExperimentConfig
from app.models.report_models import NewtonReport
from app.tools.base_tool import BaseTool

logger = logging.getLogger(__name__)


def newton_report(text: str) -> NewtonReport:
    """Newton data of any polynomial; homogeneity is not required."""
    poly = parse_phase(text)
    polyhedron = reduced_newton_polyhedron(poly)
    delta = newton_distance(polyhedron)
    return NewtonReport(
        polynomial=str(poly),
        vertices=polyhedron.to_list(),
        table=newton_endpoint_table(poly),
        newton_distance=format_rational(delta),
        l2_decay=format_rational(1 / (2 * delta)),
    )


class NewtonTool(BaseTool):
    """Tool for the reduced Newton polyhedron and its endpoint table."""

    def __init__(self):
        super().__init__(
            name="newton",
            description="Reduced Newton polyhedron, endpoint L^p estimates and the Newton distance of a polynomial."
        )

    def __call__(self, settings: ExperimentConfig) -> NewtonReport:
        if not settings.phase:
            raise InputError("newton needs --phase")
        report = newton_report(settings.phase)
        logger.info(f"Newton polyhedron of {report.polynomial}: {len(report.vertices)} vertices")
        return report

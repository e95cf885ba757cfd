import logging
from typing import List

from scipy import special

from app.errors import OutOfRange
from app.models.experiment_config import ExperimentConfig
from app.models.report_models import VdcReport
from app.quadrature.cutoffs import psi
from app.quadrature.oscillatory import vdc_check
from app.tools.base_tool import BaseTool

logger = logging.getLogger(__name__)


def vdc_reference(k: int) -> float:
    """lim λ^{1/k}|∫_0^∞ e^{iλt^k} a(t) dt| = Γ(1 + 1/k) for a(0) = 1."""
    return float(special.gamma(1 + 1 / k))


def run_vdc(k: int, lambdas, tol=None) -> VdcReport:
    """t^k on [0, 1] against the cutoff ψ(2t), which is 1 near the stationary point."""
    if k < 2:
        raise OutOfRange(f"the stationary-phase check needs k >= 2, got {k}")
    return vdc_check(
        lambda t: t ** k,
        k,
        lambdas,
        lambda t: psi(2 * t),
        interval=(0.0, 1.0),
        reference=vdc_reference(k),
        tol=tol,
        phase_derivative=lambda t: k * t ** (k - 1),
    )


class VdcTool(BaseTool):
    """Tool for the scalar van der Corput check on t^k."""

    def __init__(self):
        super().__init__(
            name="vdc",
            description="Scaled oscillatory integrals lambda^(1/k)|I(lambda)| for the phase t^k and their stationary-phase limit."
        )

    def __call__(self, settings: ExperimentConfig) -> VdcReport:
        return run_vdc(settings.k, settings.lambdas(), settings.tol)

    def csv_table(self, report: VdcReport):
        return ("lambda", "scaled"), list(zip(report.lambdas, report.scaled))

    def check(self, report: VdcReport, settings: ExperimentConfig) -> List[str]:
        tol = settings.assert_tol if settings.assert_tol is not None else 0.02
        failures = []
        if report.terminal_variation > tol:
            failures.append(f"terminal variation {report.terminal_variation:.4f} > {tol:g}")
        if report.reference_error is not None and report.reference_error > tol:
            failures.append(f"last value is {report.reference_error:.4f} from {report.reference:.6f}")
        return failures

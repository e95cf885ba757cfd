from pydantic import BaseModel, Field
from typing import Optional, Dict, Any, List


class QuadratureResult(BaseModel):
    """Value of a one-dimensional oscillatory integral."""
    value_real: float = Field(..., description="Real part of the integral")
    value_imag: float = Field(..., description="Imaginary part of the integral")
    estimated_error: float = Field(..., description="Difference between the last two refinements")
    evaluations: int = Field(..., description="Integrand evaluations spent")
    panels: int = Field(..., description="Panel count of the final rule")

    @property
    def value(self) -> complex:
        return complex(self.value_real, self.value_imag)


class VdcReport(BaseModel):
    """Scaled oscillatory integrals λ^{1/k}|I(λ)| along a λ ladder."""
    k: int = Field(..., description="Order of the derivative lower bound")
    lambdas: List[float] = Field(..., description="Frequency ladder")
    scaled: List[float] = Field(..., description="λ^{1/k}|I(λ)| per ladder point")
    sup_scaled: float = Field(..., description="Supremum of the scaled values")
    terminal_variation: float = Field(..., description="Relative spread of the scaled values over the last decade")
    reference: Optional[float] = Field(None, description="Expected limit of the scaled values")
    reference_error: Optional[float] = Field(None, description="Relative distance of the last value from the reference")
    evaluations: int = Field(..., description="Total integrand evaluations")


class NormEstimate(BaseModel):
    """An operator norm estimate with its provenance."""
    p: str = Field(..., description="Lebesgue exponent as p/q")
    value: float = Field(..., description="Estimated norm")
    method: str = Field(..., description="singular_value, schur or trial_lower_bound")
    iterations: int = Field(0, description="Power iterations or trials used")
    residual: float = Field(0.0, description="Relative change of the last iteration")
    converged: bool = Field(True, description="False when the iteration cap was hit")
    resolution: List[int] = Field(default_factory=list, description="Row and column grid counts")


class DecayReport(BaseModel):
    """Least-squares fit of log‖T_λ‖ against log λ."""
    phase: str = Field(..., description="Canonical phase text")
    p: str = Field(..., description="Lebesgue exponent")
    estimator: str = Field(..., description="Norm estimator")
    damping: Optional[Dict[str, Any]] = Field(None, description="Damping factor, if any")
    lambdas: List[float] = Field(..., description="Frequency ladder")
    norms: List[float] = Field(..., description="Norm estimate per ladder point")
    resolutions: List[List[int]] = Field(..., description="Grid counts per ladder point")
    converged: List[bool] = Field(..., description="Convergence flag per ladder point")
    slope: float = Field(..., description="Fitted log-log slope")
    intercept: float = Field(..., description="Fitted log-log intercept")
    stderr: float = Field(..., description="Standard error of the slope")
    theory_slope: str = Field(..., description="Predicted slope as p/q")
    theory_slope_value: float = Field(..., description="Predicted slope as a float")


class ImaginarySweepReport(BaseModel):
    """Damped operator norms for several Im z at fixed Re z."""
    lam: float = Field(..., description="Frequency")
    re_z: str = Field(..., description="Real part of the damping exponent")
    z_im: List[float] = Field(..., description="Imaginary parts swept")
    norms: List[float] = Field(..., description="L² norm per Im z")
    base_norm: float = Field(..., description="Norm at Im z = 0")
    ratios: List[float] = Field(..., description="norm / ((1+|Im z|)² · base_norm)")
    max_ratio: float = Field(..., description="Largest ratio")


class AtomCubeResult(BaseModel):
    center: float = Field(..., description="Cube center c_Q")
    half_width: float = Field(..., description="Cube half-width r")
    l1_norm: float = Field(..., description="‖T_P f‖₁ over the resolved domain plus tail")
    tail_estimate: float = Field(..., description="Envelope estimate of the truncated tail")
    moment: float = Field(..., description="|∫ e^{iP(c_Q,y)} f(y) dy|")


class AtomReport(BaseModel):
    """‖T_P a‖₁ across a family of twisted atoms, with a no-cancellation control."""
    kernel: Dict[str, Any] = Field(..., description="Kernel class parameters")
    polynomial: str = Field(..., description="Twisting polynomial P")
    atoms: List[AtomCubeResult] = Field(..., description="Per-cube atom results")
    ratio: float = Field(..., description="max/min of the atom norms")
    control: Optional[List[AtomCubeResult]] = Field(None, description="Per-cube control results")
    control_ratio: Optional[float] = Field(None, description="max/min of the control norms")


class WitnessReport(BaseModel):
    """Growth of |Wf| for the β = 0 misuse of the alternate damping factor."""
    n: int = Field(..., description="Degree of the phase (x-y)^n")
    offsets: List[float] = Field(..., description="Translation ladder N")
    min_abs: List[float] = Field(..., description="min |Wf(x)| over the test window")
    f_l2: List[float] = Field(..., description="‖f‖₂ per N")
    l2_ratios: List[float] = Field(..., description="Lower bounds for ‖Wf‖₂/‖f‖₂")
    slope: float = Field(..., description="Fitted slope of log min|Wf| against log N")
    intercept: float = Field(..., description="Fitted intercept")
    stderr: float = Field(..., description="Standard error of the slope")


class ScalingReport(BaseModel):
    """Dilation sweep of ‖W_{a,b} f_t‖_q / ‖f_t‖_p."""
    a: float = Field(..., description="Inner power")
    b: float = Field(..., description="Kernel exponent denominator")
    p: float = Field(..., description="Source exponent")
    q: float = Field(..., description="Target exponent")
    interpretation: str = Field(..., description="How the kernel notation was read")
    t_values: List[float] = Field(..., description="Dilation parameters")
    ratios: List[float] = Field(..., description="Norm ratio per dilation")
    drift: float = Field(..., description="(max - min)/min of the ratios")
    relation_holds: bool = Field(..., description="Whether 1/p = 1/q + (b-a)/b")


class PittReport(BaseModel):
    """Pitt exponent verdict and the Gaussian dilation sweep."""
    n_dim: int = Field(..., description="Dimension")
    p: str = Field(..., description="Source exponent")
    q: str = Field(..., description="Target exponent")
    alpha: str = Field(..., description="Frequency-side weight power")
    beta: str = Field(..., description="Space-side weight power")
    verdict: Dict[str, Any] = Field(..., description="Validity verdict")
    monomial_exponents: Optional[List[str]] = Field(None, description="(a, b) of the monomial kernel")
    t_values: List[float] = Field(default_factory=list, description="Dilation parameters")
    ratios: List[float] = Field(default_factory=list, description="Weighted norm ratio per dilation")
    drift: Optional[float] = Field(None, description="(max - min)/min of the ratios")
    closed_form_error: Optional[float] = Field(None, description="Largest relative gap between quadrature and Gamma-function norms")


class AnalysisReport(BaseModel):
    """Exact analysis of a homogeneous phase."""
    phase: str = Field(..., description="Canonical phase text")
    n: int = Field(..., description="Degree")
    k_min: int = Field(..., description="Least mixed index")
    k_max: int = Field(..., description="Greatest mixed index")
    lp_range: List[str] = Field(..., description="Sharp L^p range")
    l2_source_exponent: Optional[str] = Field(None, description="p with T: L^p → L², when k_min ≤ n/2")
    newton_vertices: List[List[str]] = Field(..., description="Reduced Newton polyhedron vertices")
    newton_table: List[Dict[str, Any]] = Field(..., description="Endpoint estimates per mixed monomial")
    factorization: Optional[Dict[str, Any]] = Field(None, description="Hessian normal form")
    hessian_case: Optional[str] = Field(None, description="Case tag of the Hessian")
    damping: Optional[Dict[str, Any]] = Field(None, description="Damping factor and exponents")
    damping_error: Optional[str] = Field(None, description="Why no damping exponent exists")


class SuiteRow(BaseModel):
    name: str = Field(..., description="Acceptance criterion")
    passed: bool = Field(..., description="Whether the criterion held")
    measured: Optional[float] = Field(None, description="Measured quantity")
    expected: Optional[str] = Field(None, description="Expected value or bound")
    detail: str = Field("", description="Diagnostic text")


class SuiteSummary(BaseModel):
    rows: List[SuiteRow] = Field(..., description="One row per criterion")
    passed: int = Field(..., description="Rows that passed")
    failed: int = Field(..., description="Rows that failed")


class FactorReport(BaseModel):
    """Hessian normal form c x^γ y^β Π(y - α_j x)^{m_j} ΠQ_j of a phase."""
    phase: str = Field(..., description="Canonical phase text")
    hessian: str = Field(..., description="The mixed Hessian S''_xy")
    factorization: Dict[str, Any] = Field(..., description="Normal form data")
    case: str = Field(..., description="Case tag")
    degree_bookkeeping: int = Field(..., description="γ + β + Σm_j + Σ complex degrees; equals n - 2")


class NewtonReport(BaseModel):
    """Reduced Newton polyhedron of a polynomial with its endpoint estimates."""
    polynomial: str = Field(..., description="Canonical polynomial text")
    vertices: List[List[str]] = Field(..., description="Vertices in (x-power, y-power) coordinates")
    table: List[Dict[str, Any]] = Field(..., description="Endpoint estimate per mixed monomial")
    newton_distance: str = Field(..., description="δ with (δ, δ) on the boundary")
    l2_decay: str = Field(..., description="Decay rate 1/(2δ) at p = 2")

from pydantic import BaseModel, Field
from typing import Optional, Dict, Any


class PhaseRequest(BaseModel):
    """Model for requests carrying a homogeneous phase."""
    phase: str = Field(..., description="Phase text, e.g. x^3*y + x*y^3")


class PittRequest(BaseModel):
    """Model for Pitt exponent requests; exponents as p/q strings."""
    n_dim: int = Field(1, description="Dimension")
    p: str = Field(..., description="Source exponent")
    q: str = Field(..., description="Target exponent")
    alpha: str = Field("0", description="Frequency-side weight power")
    beta: str = Field("0", description="Space-side weight power")


class HealthResponse(BaseModel):
    """Model for health check response."""
    status: str = Field(..., description="The status of the API")
    version: str = Field(..., description="The version of the API")
    details: Optional[Dict[str, Any]] = None

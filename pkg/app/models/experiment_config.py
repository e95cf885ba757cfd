import logging
from pathlib import Path
from typing import Any, Dict, Optional, Union

from pydantic import BaseModel, Field, ValidationError, field_validator, model_validator

from app.algebra.rational import parse_rational
from app.config.env_config import config
from app.errors import ConfigError
from app.operators.decay import dyadic_ladder

logger = logging.getLogger(__name__)

COMMANDS = ("analyze", "factor", "newton", "decay", "vdc", "atoms", "pitt", "fractional", "witness", "suite")

# Config-file spellings of flags whose attribute name differs
KEY_ALIASES = {"assert": "assertions"}


class ExperimentConfig(BaseModel):
    """Validated settings for one CLI run; echoed into every report."""
    command: str = Field(..., description="Subcommand to run")
    phase: Optional[str] = Field(None, description="Phase text, e.g. x^3*y + x*y^3")
    p: str = Field("2", description="Lebesgue exponent as p/q")
    q: Optional[str] = Field(None, description="Target exponent for pitt and fractional")
    alpha: str = Field("0", description="Frequency-side weight power for pitt")
    beta: str = Field("0", description="Space-side weight power for pitt")
    a: str = Field("3", description="Inner power of the fractional kernel")
    b: str = Field("4", description="Kernel exponent denominator of the fractional kernel")
    n: int = Field(3, description="Degree for the witness experiment")
    k: int = Field(2, description="Derivative order for the van der Corput check")
    n_dim: int = Field(1, description="Dimension for the pitt verdict")
    lambda_lo: int = Field(4, description="Base-2 exponent of the smallest lambda")
    lambda_hi: int = Field(12, description="Base-2 exponent of the largest lambda")
    steps: Optional[int] = Field(None, description="Ladder points; one per octave when omitted")
    damped: bool = Field(False, description="Insert the damping factor of the phase in decay runs")
    res_cap: int = Field(default_factory=lambda: config.res_cap, description="Grid count cap per axis")
    tol: float = Field(default_factory=lambda: config.tol, description="Relative tolerance")
    assertions: bool = Field(False, description="Check the run against its expected values")
    assert_tol: Optional[float] = Field(None, description="Tolerance for the checks; each tool has a default")
    out: str = Field(default_factory=lambda: config.out_dir, description="Output directory")
    seed: int = Field(0, description="Seed for randomized inputs")
    workers: int = Field(default_factory=lambda: config.workers, description="Ladder worker threads")

    @field_validator("command")
    @classmethod
    def _known_command(cls, value: str) -> str:
        if value not in COMMANDS:
            raise ValueError(f"unknown command {value!r}")
        return value

    @field_validator("p", "q", "alpha", "beta", "a", "b")
    @classmethod
    def _rational(cls, value: Optional[str]) -> Optional[str]:
        if value is None:
            return value
        try:
            parse_rational(str(value))
        except ZeroDivisionError:
            raise ValueError(f"zero denominator in {value!r}")
        return str(value).strip()

    @field_validator("p")
    @classmethod
    def _p_above_one(cls, value: str) -> str:
        if parse_rational(value) <= 1:
            raise ValueError("p must exceed 1")
        return value

    @field_validator("res_cap", "workers", "n_dim")
    @classmethod
    def _positive(cls, value: int) -> int:
        if value < 1:
            raise ValueError("must be positive")
        return value

    @field_validator("tol")
    @classmethod
    def _positive_tol(cls, value: float) -> float:
        if not value > 0:
            raise ValueError("tol must be positive")
        return value

    @model_validator(mode="after")
    def _ladder(self) -> "ExperimentConfig":
        if self.lambda_hi <= self.lambda_lo:
            raise ValueError("lambda_hi must exceed lambda_lo")
        minimum = 5 if self.command == "decay" else 3
        points = self.steps if self.steps is not None else self.lambda_hi - self.lambda_lo + 1
        if points < minimum:
            raise ValueError(f"{self.command} needs at least {minimum} ladder points, got {points}")
        return self

    @property
    def p_exact(self):
        return parse_rational(self.p)

    def lambdas(self) -> list:
        return dyadic_ladder(self.lambda_lo, self.lambda_hi, self.steps)

    @staticmethod
    def read_key_value_file(path: Union[str, Path]) -> Dict[str, str]:
        """`key = value` per line; `#` starts a comment; dashes in keys become underscores.

        Keys are spelled like the long flags, so `assert` sets `assertions`.

        Raises:
            ConfigError: for unreadable files or lines without '='.
        """
        try:
            text = Path(path).read_text(encoding="utf-8")
        except OSError as e:
            raise ConfigError(f"cannot read config file {path}: {e}")
        values: Dict[str, str] = {}
        for number, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ConfigError(f"{path}:{number}: expected 'key = value'")
            key, value = (part.strip() for part in line.split("=", 1))
            key = key.replace("-", "_")
            values[KEY_ALIASES.get(key, key)] = value
        return values

    @classmethod
    def from_key_value_file(cls, path: Union[str, Path], **overrides: Any) -> "ExperimentConfig":
        """File values under explicit overrides (the CLI flags)."""
        return cls.from_sources(cls.read_key_value_file(path), overrides)

    @classmethod
    def from_sources(cls, file_values: Optional[Dict[str, Any]], flags: Dict[str, Any]) -> "ExperimentConfig":
        """Flags over file values over Config defaults.

        Raises:
            ConfigError: when validation fails.
        """
        merged = dict(file_values or {})
        merged.update({key: value for key, value in flags.items() if value is not None})
        unknown = set(merged) - set(cls.model_fields)
        if unknown:
            raise ConfigError(f"unknown configuration keys: {', '.join(sorted(unknown))}")
        try:
            return cls(**merged)
        except ValidationError as e:
            logger.error(f"Invalid configuration: {e}")
            raise ConfigError(f"invalid configuration: {e.errors()[0]['loc']}: {e.errors()[0]['msg']}")
        except ValueError as e:
            raise ConfigError(f"invalid configuration: {e}")

"""Uniform midpoint grids and the resolution policy for oscillatory kernels."""

import logging
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from app.config.env_config import config
from app.errors import MemoryBudget, ResolutionTooCoarse

logger = logging.getLogger(__name__)

NYQUIST_MARGIN = math.pi / 4


def next_power_of_two(value: float) -> int:
    return 1 << max(0, math.ceil(math.log2(max(value, 1.0))))


@dataclass(frozen=True)
class Grid1D:
    """Midpoints of `count` equal cells on [lo, hi]; count is a power of two."""

    lo: float
    hi: float
    count: int

    def __post_init__(self):
        if not self.hi > self.lo:
            raise ValueError("grid needs hi > lo")
        if self.count < 1 or self.count & (self.count - 1):
            raise ValueError(f"grid count must be a power of two, got {self.count}")

    @property
    def weight(self) -> float:
        return (self.hi - self.lo) / self.count

    @property
    def spacing(self) -> float:
        return self.weight

    @property
    def points(self) -> np.ndarray:
        return self.lo + (np.arange(self.count) + 0.5) * self.weight

    def norm(self, values: np.ndarray, p: float = 2.0) -> float:
        """Weighted discrete L^p norm, approximating the continuum norm."""
        values = np.abs(np.asarray(values))
        if math.isinf(p):
            return float(values.max(initial=0.0))
        return float((self.weight * np.sum(values ** p)) ** (1.0 / p))

    def to_dict(self) -> dict:
        return {"lo": self.lo, "hi": self.hi, "count": self.count}


@dataclass(frozen=True)
class ResolutionPolicy:
    """spacing · λ · max|∂S| ≤ margin in each variable, with counts capped at res_cap."""

    res_cap: int
    margin: float = NYQUIST_MARGIN
    min_count: int = 64

    @classmethod
    def default(cls, res_cap: Optional[int] = None) -> "ResolutionPolicy":
        return cls(res_cap=config.res_cap if res_cap is None else res_cap)

    def required_count(self, length: float, lam: float, gradient: float) -> int:
        needed = length * abs(lam) * gradient / self.margin
        return max(self.min_count, next_power_of_two(needed))

    def grid(self, lo: float, hi: float, lam: float, gradient: float, count: Optional[int] = None) -> Grid1D:
        """A grid meeting the policy, or the requested one after checking it.

        Raises:
            ResolutionTooCoarse: if an explicit count violates the policy.
            MemoryBudget: if the required count exceeds res_cap.
        """
        required = self.required_count(hi - lo, lam, gradient)
        if count is not None:
            grid = Grid1D(lo, hi, count)
            if grid.spacing * abs(lam) * gradient > self.margin:
                raise ResolutionTooCoarse(
                    f"{count} cells on [{lo}, {hi}] alias at lambda={lam}; at least {required} needed")
        else:
            grid = Grid1D(lo, hi, required)
        if grid.count > self.res_cap:
            raise MemoryBudget(f"grid of {grid.count} cells exceeds the resolution cap {self.res_cap}")
        return grid

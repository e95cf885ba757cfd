"""Smooth compactly supported cutoffs and the dyadic partition of unity."""

import functools
import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np
from scipy import integrate

from app.errors import NonpositiveArgument

logger = logging.getLogger(__name__)

_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(64)


def bump(t, center: float = 0.0, radius: float = 1.0):
    """exp(-1/(1-u²)) for |u| < 1 and 0 otherwise, u = (t - center)/radius."""
    if radius <= 0:
        raise ValueError("radius must be positive")
    u = (np.asarray(t, dtype=float) - center) / radius
    inside = np.abs(u) < 1
    out = np.zeros_like(u)
    out[inside] = np.exp(-1.0 / (1.0 - u[inside] ** 2))
    return out if out.ndim else float(out)


def bump_derivative(t, center: float = 0.0, radius: float = 1.0):
    """d/dt bump = -2u/(1-u²)² · bump / radius."""
    u = (np.asarray(t, dtype=float) - center) / radius
    inside = np.abs(u) < 1
    out = np.zeros_like(u)
    ui = u[inside]
    out[inside] = -2 * ui / (1 - ui ** 2) ** 2 * np.exp(-1.0 / (1.0 - ui ** 2)) / radius
    return out if out.ndim else float(out)


@functools.lru_cache(maxsize=None)
def bump_integral() -> float:
    """∫ bump over [-1, 1] ≈ 0.443994."""
    value, _ = integrate.quad(lambda s: bump(s), -1.0, 1.0, epsabs=1e-15, epsrel=1e-14, limit=200)
    return value


def smoothstep(u):
    """Normalized ∫_{-1}^{u} bump; 0 for u ≤ -1 and 1 for u ≥ 1."""
    u = np.clip(np.asarray(u, dtype=float), -1.0, 1.0)
    half = (u + 1.0) / 2.0
    nodes = np.multiply.outer(half, _GL_NODES + 1.0) - 1.0
    values = bump(nodes) @ _GL_WEIGHTS
    out = values * half / bump_integral()
    out = np.where(u <= -1.0, 0.0, np.where(u >= 1.0, 1.0, out))
    return out if out.ndim else float(out)


def psi(x):
    """1 on (-∞, 1], 0 on [2, ∞), smooth in between."""
    x = np.asarray(x, dtype=float)
    out = 1.0 - smoothstep(2.0 * x - 3.0)
    return out


def dyadic_phi(x):
    """Φ(x) = ψ(x) - ψ(2x), supported in [1/2, 2]."""
    x = np.asarray(x, dtype=float)
    return psi(x) - psi(2.0 * x)


@dataclass(frozen=True)
class SmoothCutoff:
    """A bump on an interval, or a tensor product of bumps on a box."""

    kind: str
    centers: Tuple[float, ...]
    radii: Tuple[float, ...]

    def __post_init__(self):
        expected = {"bump": 1, "tensor_bump": 2}.get(self.kind)
        if expected is None:
            raise ValueError(f"unknown cutoff kind {self.kind!r}")
        if len(self.centers) != expected or len(self.radii) != expected:
            raise ValueError(f"{self.kind} needs {expected} center(s) and radius(es)")
        if any(r <= 0 for r in self.radii):
            raise ValueError("radii must be positive")

    @classmethod
    def tensor(cls, cx: float = 0.0, cy: float = 0.0, rx: float = 0.6, ry: Optional[float] = None):
        return cls(kind="tensor_bump", centers=(cx, cy), radii=(rx, rx if ry is None else ry))

    @classmethod
    def interval(cls, center: float = 0.0, radius: float = 1.0):
        return cls(kind="bump", centers=(center,), radii=(radius,))

    def support(self) -> Tuple[Tuple[float, float], ...]:
        return tuple((c - r, c + r) for c, r in zip(self.centers, self.radii))

    def __call__(self, x, y=None):
        if self.kind == "bump":
            return bump(x, self.centers[0], self.radii[0])
        return bump(x, self.centers[0], self.radii[0]) * bump(y, self.centers[1], self.radii[1])

    def grid_values(self, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
        """Tensor cutoff on xs × ys."""
        if self.kind != "tensor_bump":
            raise ValueError("grid values need a tensor_bump cutoff")
        return np.multiply.outer(bump(xs, self.centers[0], self.radii[0]),
                                 bump(ys, self.centers[1], self.radii[1]))

    def to_dict(self) -> dict:
        return {"kind": self.kind, "centers": list(self.centers), "radii": list(self.radii)}


@dataclass(frozen=True)
class DyadicPartition:
    """Φ_j(x) = Φ(2^{-j} x) for j_lo ≤ j ≤ j_hi, summing to 1 on [2^{j_lo}, 2^{j_hi}]."""

    j_lo: int
    j_hi: int

    def __post_init__(self):
        if self.j_lo > self.j_hi:
            raise ValueError("j_lo must not exceed j_hi")

    def window(self, j: int, x) -> np.ndarray:
        return dyadic_phi(np.ldexp(np.asarray(x, dtype=float), -j))

    def total(self, x) -> np.ndarray:
        """Closed form of the truncated sum: ψ(2^{-j_hi} x) - ψ(2^{1-j_lo} x)."""
        x = np.asarray(x, dtype=float)
        return psi(np.ldexp(x, -self.j_hi)) - psi(np.ldexp(x, 1 - self.j_lo))

    def active(self, x: float) -> List[int]:
        """Indices j with Φ_j(x) possibly nonzero: 2^{-j} x in (1/2, 2)."""
        centre = int(np.floor(np.log2(x)))
        return [j for j in (centre - 1, centre, centre + 1) if self.j_lo <= j <= self.j_hi]


def dyadic_values(partition: DyadicPartition, x: float) -> List[Tuple[int, float]]:
    """Nonzero (j, Φ_j(x)); at most two entries.

    Raises:
        NonpositiveArgument: for x ≤ 0.
    """
    if x <= 0:
        raise NonpositiveArgument(f"dyadic values need x > 0, got {x}")
    values = []
    for j in partition.active(x):
        value = float(partition.window(j, x))
        if value != 0.0:
            values.append((j, value))
    return values


def dyadic_sum(partition: DyadicPartition, xs: Sequence[float]) -> np.ndarray:
    """Σ_j Φ_j(x) computed term by term, for partition-of-unity checks."""
    xs = np.asarray(xs, dtype=float)
    total = np.zeros_like(xs)
    for j in range(partition.j_lo, partition.j_hi + 1):
        total += partition.window(j, xs)
    return total

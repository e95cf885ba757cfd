"""Twisted H¹ atoms and the uniformity of ‖T_P a‖₁ over them.

T_P f(x) = ∫ e^{iP(x,y)} K(x,y) f(y) dy with K in the class
|K(x,y)| ≤ |x|^{-θ0} Π |x - α_k y|^{-θ_k}, θ0 + Σθ_k = 1.
"""

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import numpy as np

from app.algebra.polynomial import BivariatePolynomial
from app.algebra.rational import format_rational, to_rational
from app.errors import OutOfRange
from app.models.report_models import AtomCubeResult, AtomReport
from app.quadrature.cutoffs import bump

logger = logging.getLogger(__name__)

_GL16 = np.polynomial.legendre.leggauss(16)
_PROFILE_SAMPLES = 4097
_MAX_INNER_NODES = 4096
_CHUNK_ENTRIES = 1 << 22

WINDOW_CONSTANT = 32.0
GRADING_LEVELS = 10


@dataclass(frozen=True)
class KernelClass:
    """|x|^{-θ0} Π |x - α_k y|^{-θ_k} with θ ≥ 0, θ0 + Σθ_k = 1 and distinct nonzero α_k."""

    theta0: Fraction
    thetas: Tuple[Fraction, ...]
    alphas: Tuple[Fraction, ...]

    def __post_init__(self):
        theta0 = to_rational(self.theta0)
        thetas = tuple(to_rational(t) for t in self.thetas)
        alphas = tuple(to_rational(a) for a in self.alphas)
        if len(thetas) != len(alphas):
            raise OutOfRange("thetas and alphas must have the same length")
        if theta0 < 0 or any(t < 0 for t in thetas):
            raise OutOfRange("exponents must be nonnegative")
        if theta0 + sum(thetas) != 1:
            raise OutOfRange("theta0 + sum(thetas) must equal 1")
        if any(a == 0 for a in alphas) or len(set(alphas)) != len(alphas):
            raise OutOfRange("alphas must be distinct and nonzero")
        object.__setattr__(self, "theta0", theta0)
        object.__setattr__(self, "thetas", thetas)
        object.__setattr__(self, "alphas", alphas)

    @classmethod
    def two_lines(cls) -> "KernelClass":
        """|x - y|^{-1/2} |x + y|^{-1/2}."""
        return cls(Fraction(0), (Fraction(1, 2), Fraction(1, 2)), (Fraction(1), Fraction(-1)))

    def lp_range(self) -> Tuple[Fraction, Optional[Fraction]]:
        """Open interval (1, 1/θ0), with None for an unbounded right end."""
        return Fraction(1), (1 / self.theta0 if self.theta0 > 0 else None)

    def evaluate(self, x, y) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        y = np.asarray(y, dtype=float)
        with np.errstate(divide="ignore"):
            value = np.abs(x) ** -float(self.theta0) if self.theta0 else np.ones(np.broadcast(x, y).shape)
            for theta, alpha in zip(self.thetas, self.alphas):
                value = value * np.abs(x - float(alpha) * y) ** -float(theta)
        return value

    def singular_y(self, x: np.ndarray) -> np.ndarray:
        """y = x/α_k, where the kernel blows up; shape (len(x), number of lines)."""
        return np.stack([np.asarray(x, float) / float(a) for a in self.alphas], axis=-1)

    def to_dict(self) -> dict:
        lo, hi = self.lp_range()
        return {
            "theta0": format_rational(self.theta0),
            "thetas": [format_rational(t) for t in self.thetas],
            "alphas": [format_rational(a) for a in self.alphas],
            "lp_range": [format_rational(lo), format_rational(hi) if hi is not None else "inf"],
        }


@dataclass(frozen=True)
class AtomSpec:
    """a(y) = c·e^{-iP(c_Q, y)}·g((y - c_Q)/r) on the cube [c_Q - r, c_Q + r]."""

    center: float
    half_width: float
    polynomial: BivariatePolynomial
    profile: str
    shape: float
    scale: float = field(default=1.0)

    @property
    def sup_bound(self) -> float:
        return 1.0 / (2.0 * self.half_width)

    def profile_values(self, u) -> np.ndarray:
        u = np.asarray(u, dtype=float)
        if self.profile == "odd":
            return (u + self.shape * u ** 3) * bump(u)
        return (1.0 + self.shape * u ** 2) * bump(u)

    def twist(self, y) -> np.ndarray:
        y = np.asarray(y, dtype=float)
        return np.exp(1j * self.polynomial.evaluate_points(np.full_like(y, self.center), y))

    def untwisted(self, y) -> np.ndarray:
        """e^{iP(c_Q, y)} a(y), real-valued up to the normalization."""
        return self.scale * self.profile_values((np.asarray(y, float) - self.center) / self.half_width)

    def __call__(self, y) -> np.ndarray:
        return self.untwisted(y) / self.twist(y)

    def moment(self, nodes: int = 64) -> complex:
        """∫ e^{iP(c_Q, y)} a(y) dy by Gauss-Legendre on the cube."""
        t, w = np.polynomial.legendre.leggauss(nodes)
        y = self.center + self.half_width * t
        return complex(np.sum(self.twist(y) * self(y) * w) * self.half_width)

    def sup(self) -> float:
        u = np.linspace(-1.0, 1.0, _PROFILE_SAMPLES)
        return float(np.max(np.abs(self.untwisted(self.center + self.half_width * u))))


def make_atom(P: BivariatePolynomial, cube: Tuple[float, float], seed: int = 0, profile: str = "odd") -> AtomSpec:
    """Twisted atom on the cube (c_Q, r) with |a| ≤ 1/(2r).

    The seed picks the cubic (odd) or quadratic (even) shape term in [0, 1/2).
    The even profile has no cancellation and serves as the control.
    """
    center, half_width = float(cube[0]), float(cube[1])
    if half_width <= 0:
        raise OutOfRange("cube half-width must be positive")
    if profile not in ("odd", "even"):
        raise ValueError(f"unknown profile {profile!r}")
    shape = float(np.random.default_rng(seed).uniform(0.0, 0.5))
    draft = AtomSpec(center, half_width, P, profile, shape)
    peak = draft.sup()
    return AtomSpec(center, half_width, P, profile, shape, scale=draft.sup_bound / peak)


# ------------------------------------------------------------
# Quadrature for T_P a
# ------------------------------------------------------------
def _graded_rule(breakpoints: Sequence[float], h: float, levels: int = GRADING_LEVELS):
    """Composite 16-point rule on consecutive breakpoints, graded geometrically toward each one."""
    nodes, weights = [], []
    t16, w16 = _GL16
    for lo, hi in zip(breakpoints, breakpoints[1:]):
        length = hi - lo
        if length <= 0:
            continue
        cuts = [lo, hi]
        grade = min(h, length / 2)
        for level in range(levels):
            step = grade * 0.5 ** (level + 1)
            cuts.extend([lo + step, hi - step])
        count = max(1, math.ceil((length - 2 * grade) / h)) if length > 2 * grade else 0
        cuts.extend(np.linspace(lo + grade, hi - grade, count + 1).tolist() if count else [lo + grade, hi - grade])
        cuts = np.unique(np.clip(cuts, lo, hi))
        a, b = cuts[:-1], cuts[1:]
        mid, half = (a + b) / 2, (b - a) / 2
        nodes.append((mid[:, None] + half[:, None] * t16[None, :]).ravel())
        weights.append((half[:, None] * w16[None, :]).ravel())
    return np.concatenate(nodes), np.concatenate(weights)


def _inner_nodes(atom: AtomSpec, kernel: KernelClass, xs: np.ndarray, count: int):
    """Per-x nodes on the cube split at the singular points, with the cosine map at every cut."""
    lo, hi = atom.center - atom.half_width, atom.center + atom.half_width
    singular = np.clip(kernel.singular_y(xs), lo, hi)
    cuts = np.sort(np.concatenate([np.full((xs.size, 1), lo), singular, np.full((xs.size, 1), hi)], axis=1), axis=1)
    tau, w = np.polynomial.legendre.leggauss(count)
    tau, w = (tau + 1) / 2, w / 2
    left, length = cuts[:, :-1, None], np.diff(cuts, axis=1)[:, :, None]
    ys = left + length * (1 - np.cos(np.pi * tau)) / 2
    jac = length * np.pi * np.sin(np.pi * tau) / 2 * w
    return ys, jac


def _inner_frequency(atom: AtomSpec, xs: np.ndarray) -> float:
    """max over the chunk of |∂_y (P(x, y) - P(c_Q, y))| on the cube."""
    dy = atom.polynomial.derivative_y()
    ys = np.linspace(atom.center - atom.half_width, atom.center + atom.half_width, 9)
    here = dy.evaluate_points(xs[:, None], ys[None, :])
    there = dy.evaluate_points(np.full((1, ys.size), atom.center), ys[None, :])
    return float(np.max(np.abs(here - there), initial=0.0))


def apply_twisted(atom: AtomSpec, kernel: KernelClass, xs: np.ndarray) -> np.ndarray:
    """T_P a at the points xs."""
    xs = np.asarray(xs, dtype=float)
    out = np.empty(xs.size, dtype=complex)
    lines = len(kernel.alphas) + 1
    start = 0
    while start < xs.size:
        probe = xs[start:start + 1024]
        freq = _inner_frequency(atom, probe)
        count = int(min(_MAX_INNER_NODES, 48 + math.ceil(3 * freq * 2 * atom.half_width / math.pi)))
        size = max(1, min(probe.size, _CHUNK_ENTRIES // (lines * count)))
        chunk = xs[start:start + size]
        ys, jac = _inner_nodes(atom, kernel, chunk, count)
        xb = np.broadcast_to(chunk[:, None, None], ys.shape)
        phase = atom.polynomial.evaluate_points(xb, ys)
        with np.errstate(invalid="ignore", over="ignore"):
            integrand = np.exp(1j * phase) * kernel.evaluate(xb, ys) * atom(ys)
        with np.errstate(invalid="ignore"):
            contributions = np.where(jac > 0, integrand * jac, 0.0)
        out[start:start + size] = np.sum(contributions, axis=(1, 2))
        start += size
    return out


def truncation_radius(atom: AtomSpec) -> float:
    return max(2.0 ** 10, 2.0 ** 5 * (abs(atom.center) + atom.half_width))


def l1_norm_twisted(atom: AtomSpec, kernel: KernelClass) -> Tuple[float, float]:
    """(‖T_P a‖₁ on the resolved domain plus tail, tail estimate).

    The resolved domain covers the images α_k·Q of the cube and a margin of
    WINDOW_CONSTANT/r; beyond it |T_P a| is extended by a |x|^{-2} envelope
    up to the truncation radius.
    """
    c, r = atom.center, atom.half_width
    reach = max(abs(float(a)) for a in kernel.alphas) * (abs(c) + r)
    X = reach + max(WINDOW_CONSTANT / r, 2 * r)
    breaks = {-X, X, 0.0}
    for alpha in kernel.alphas:
        for y in (c - r, c, c + r):
            breaks.add(float(alpha) * y)
    breakpoints = sorted(b for b in breaks if -X <= b <= X)
    h = min(r, 1.0 / (abs(c) + r)) / 2
    nodes, weights = _graded_rule(breakpoints, h)
    values = np.abs(apply_twisted(atom, kernel, nodes))
    resolved = float(np.sum(values * weights))

    R = truncation_radius(atom)
    edge = np.abs(apply_twisted(atom, kernel, np.array([-X, X])))
    tail = float(np.sum(edge) * X * max(0.0, 1.0 - X / R)) if R > X else 0.0
    return resolved + tail, tail


def default_cube_family() -> List[Tuple[float, float]]:
    """Centers ±2^0..2^4 and half-widths 2^-2..2^2: fifty cubes."""
    cubes = []
    for sign in (1.0, -1.0):
        for e in range(5):
            for w in range(-2, 3):
                cubes.append((sign * 2.0 ** e, 2.0 ** w))
    return cubes


def _measure(kernel: KernelClass, P: BivariatePolynomial, cubes, profile: str, seed: int) -> List[AtomCubeResult]:
    results = []
    for index, cube in enumerate(cubes):
        atom = make_atom(P, cube, seed=seed + index, profile=profile)
        norm, tail = l1_norm_twisted(atom, kernel)
        results.append(AtomCubeResult(center=atom.center, half_width=atom.half_width,
                                      l1_norm=norm, tail_estimate=tail, moment=abs(atom.moment())))
        logger.info(f"{profile} atom on ({atom.center:g}, {atom.half_width:g}): ||T a||_1 = {norm:.5g}")
    return results


def _ratio(results: List[AtomCubeResult]) -> float:
    norms = [res.l1_norm for res in results]
    return max(norms) / min(norms) if min(norms) > 0 else math.inf


def atom_uniformity_experiment(kernel: KernelClass, P: BivariatePolynomial,
                               cubes: Optional[Sequence[Tuple[float, float]]] = None,
                               seed: int = 0, control: bool = True) -> AtomReport:
    """‖T_P a‖₁ for one twisted atom per cube; max/min across the family.

    With control=True the even no-cancellation profile is run on the same cubes.
    """
    cubes = list(default_cube_family() if cubes is None else cubes)
    atoms = _measure(kernel, P, cubes, "odd", seed)
    controls = _measure(kernel, P, cubes, "even", seed) if control else None
    return AtomReport(
        kernel=kernel.to_dict(),
        polynomial=str(P),
        atoms=atoms,
        ratio=_ratio(atoms),
        control=controls,
        control_ratio=_ratio(controls) if controls else None,
    )

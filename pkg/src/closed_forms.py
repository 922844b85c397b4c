"""Closed-form optimal distributions and the quantities used in their proofs.

Everything here is analytic; tests hold these values against the exact
hypervolume engine. Statements for the three-line triangular and inverted
fronts come without proofs in the main text, so `type5_split` and the
Type VI move check are empirically verified only.
"""
from dataclasses import dataclass, field
from enum import Enum
from math import floor
from typing import Dict, List, Optional, Sequence, Tuple
import logging

import numpy as np

from .config import CONFIG
from .exceptions import ClosedFormError, GeometryError
from .geometry import FrontLike, _spec
from .hypervolume import hypervolume
from .models import FrontKind, Point, as_points

logger = logging.getLogger(__name__)

@dataclass(frozen=True)
class Lemma1Params:
    """Two-objective linear front f2 = 1 - f1 with reference (r1, r2)."""
    mu: int
    r1: float
    r2: float

    def __post_init__(self):
        if self.mu < 2:
            raise ClosedFormError(f"mu must be at least 2, got {self.mu}")
        if self.r1 >= 0 or self.r2 >= 0:
            raise ClosedFormError(f"Reference coordinates must be negative, got ({self.r1}, {self.r2})")

def lemma1_positions(p: Lemma1Params) -> List[Tuple[float, float]]:
    """Unique optimal mu-distribution on the line f2 = 1 - f1.

    Returns front points (x, 1 - x). The bounds F_l and F_r cap how far the
    outer points may sit from the reference; beyond them both extremes are
    always included.
    """
    f = lambda x: 1.0 - x
    f_inv = lambda y: 1.0 - y
    mu = p.mu
    f_left = min(1.0 - p.r1, (mu + 1) / mu - f(1.0 - p.r2) / mu, mu / (mu - 1))
    f_right = min(1.0 - p.r2, (mu + 1) / mu - f_inv(1.0 - p.r1) / mu, mu / (mu - 1))
    start = f_inv(f_left)
    xs = [start + i / (mu + 1) * (f_right - start) for i in range(1, mu + 1)]
    return [(x, 1.0 - x) for x in xs]

@dataclass(frozen=True)
class SplitPlan:
    """Points owned by each segment of a multi-line front.

    Segment 0 owns both of its endpoints, segment 1 owns its far endpoint
    only and segment 2 owns neither, so mu1 + mu2 (+ mu3) = mu.
    """
    mu1: int
    mu2: int
    reference_threshold: float
    mu3: Optional[int] = None

    @property
    def mu(self) -> int:
        return self.mu1 + self.mu2 + (self.mu3 or 0)

    @property
    def intervals(self) -> Tuple[int, ...]:
        ks = (self.mu1 - 1, self.mu2)
        return ks if self.mu3 is None else ks + (self.mu3 + 1,)

    def segment_counts(self) -> List[int]:
        """Per-segment point counts, endpoints included (for uniform_line_set)."""
        return [k + 1 for k in self.intervals]

def type3_split(mu: int) -> Tuple[SplitPlan, ...]:
    """Optimal splits of mu points over the two edges of the triangle.

    Odd mu has a single split; even mu has two, differing by one point
    between the lines.
    """
    if mu <= 3:
        raise ClosedFormError(f"Two-line split needs mu > 3, got {mu}")
    if mu % 2:
        return (SplitPlan((mu + 1) // 2, (mu - 1) // 2, -2.0 / (mu - 1)),)
    threshold = -1.0 / ((mu - 1) // 2)
    return (
        SplitPlan(mu // 2 + 1, mu // 2 - 1, threshold),
        SplitPlan(mu // 2, mu // 2, threshold),
    )

def type3_component_hv(mu1: int, mu2: int, r: float) -> Tuple[float, float, float]:
    """2D areas of the two slices in the two-line decomposition.

    hv1 belongs to the line carrying mu1 points (both extremes), hv2 to the
    other one; total is their sum.
    """
    if mu1 < 2 or mu2 < 1:
        raise ClosedFormError(f"Need mu1 >= 2 and mu2 >= 1, got ({mu1}, {mu2})")
    if r >= 0:
        raise ClosedFormError(f"r must be negative, got {r}")
    hv1 = 0.5 + r * (r - 2.0) - 1.0 / (2.0 * (mu1 - 1))
    hv2 = 0.5 - r - 1.0 / (2.0 * mu2)
    return hv1, hv2, hv1 + hv2

def type3_uniform_hv(mu1: int, mu2: int, r: float) -> float:
    """3D hypervolume of the uniform two-line set at reference (r, r, r)."""
    return abs(r) * type3_component_hv(mu1, mu2, r)[2]

def type5_split(mu: int) -> SplitPlan:
    """Balanced split of mu points over the three edges of the triangle.

    Interval counts differ by at most one; the larger counts go to the
    lower-indexed segments.
    """
    if mu < 3:
        raise ClosedFormError(f"Three-line split needs mu >= 3, got {mu}")
    base, extra = divmod(mu, 3)
    ks = [base + (1 if j < extra else 0) for j in range(3)]
    threshold = -3.0 / mu if extra == 0 else -1.0 / (mu // 3)
    return SplitPlan(ks[0] + 1, ks[1], threshold, mu3=ks[2] - 1)

def type5_uniform_hv(plan: SplitPlan, r: float) -> float:
    """3D hypervolume of the uniform three-line set described by `plan`."""
    if plan.mu3 is None:
        raise ClosedFormError("Three-line hypervolume needs a plan with mu3")
    if r >= 0:
        raise ClosedFormError(f"r must be negative, got {r}")
    a = abs(r)
    return a ** 3 + 3 * a ** 2 + a * sum(0.5 - 1.0 / (2 * k) for k in plan.intervals)

def _check_type4_index(mu_prime: int, i: int) -> None:
    if mu_prime < 3 or not 2 <= i <= mu_prime - 1:
        raise ClosedFormError(f"Need 2 <= i <= mu'-1 with mu' >= 3, got i={i}, mu'={mu_prime}")

def type4_uniform_hvc(mu_prime: int, i: int) -> float:
    """Contribution of a_i in the uniform inverted two-line set (cuboid volume)."""
    _check_type4_index(mu_prime, i)
    return (i - 1) / (mu_prime - 1) ** 3

def type4_move_delta(mu_prime: int, i: int, alpha: float) -> float:
    """Hypervolume change when a_i moves a fraction alpha towards a_{i+1}.

    Positive iff 0 < alpha < 1/i, largest at alpha = 1/(2i).
    """
    _check_type4_index(mu_prime, i)
    if not 0.0 <= alpha <= 1.0:
        raise ClosedFormError(f"alpha must lie in [0, 1], got {alpha}")
    return (alpha - i * alpha ** 2) / (mu_prime - 1) ** 3

class Region(Enum):
    INVERTED_TRIANGLE = "inverted_triangle"
    TRIANGLE = "triangle"

# Vertex offsets in the unit cell, relative to the cell's base lattice vector.
REGION_VERTICES: Dict[Region, Dict[str, Tuple[int, int, int]]] = {
    Region.INVERTED_TRIANGLE: {"a": (1, 0, 1), "b": (0, 1, 1), "c": (1, 1, 0)},
    Region.TRIANGLE: {
        "a": (0, 0, 1), "b": (1, 0, 0), "c": (0, 1, 0),
        "d": (1, -1, 1), "e": (-1, 1, 1), "f": (1, 1, -1),
    },
}

@dataclass(frozen=True)
class RegionContributions:
    region: Region
    point: Point
    center: float
    vertices: Dict[str, float] = field(default_factory=dict)

    @property
    def p_is_least(self) -> bool:
        """Strict: the added point contributes less than every affected vertex."""
        return self.center < min(self.vertices.values())

    @property
    def is_tie(self) -> bool:
        return np.isclose(self.center, min(self.vertices.values()), rtol=0.0, atol=1e-15)

def type78_region_hvc(region, p: Sequence[float], tol: float = CONFIG["CONTAINS_TOL"]) -> RegionContributions:
    """Contributions inside one unit lattice cell after adding p.

    Coordinates are the cell's own: (x, y, z) with x + y + z = 2 for the
    inverted region and x + y + z = 1 for the triangular one.
    """
    region = Region(region)
    x, y, z = (float(c) for c in p)
    target = 2.0 if region is Region.INVERTED_TRIANGLE else 1.0
    if abs(x + y + z - target) > tol or min(x, y, z) < -tol or max(x, y, z) > 1.0 + tol:
        raise GeometryError(f"{(x, y, z)} is outside the {region.value} region")

    if region is Region.INVERTED_TRIANGLE:
        center = x * y * z
        vertices = {"a": 1.0 - x * z, "b": 1.0 - y * z, "c": 1.0 - x * y}
    else:
        center = x * y * z + x * y + x * z + y * z
        vertices = {
            "a": 1.0 - z, "b": 1.0 - x, "c": 1.0 - y,
            "d": 1.0 - x * z, "e": 1.0 - y * z, "f": 1.0 - x * y,
        }
    return RegionContributions(region, (x, y, z), center, vertices)

@dataclass(frozen=True)
class LatticeCell:
    region: Region
    base: Tuple[int, int, int]
    local: Point

def lattice_cell(point: Sequence[float], H: int, kind=FrontKind.TYPE_VII) -> LatticeCell:
    """Locate a plane-front point in the lattice of spacing 1/H.

    The affine map is q = H * point; the cell's base is floor(q) and the
    local coordinates are q - base. Fractional sums of 1 and 2 give the
    triangular and inverted regions. Lattice points themselves are placed
    as a vertex of a triangular cell.
    """
    kind = FrontKind.parse(kind)
    if not kind.is_plane:
        raise GeometryError(f"{kind.value} is not a plane front")
    q = np.asarray(point, dtype=float) * H
    snapped = np.round(q)
    q = np.where(np.abs(q - snapped) < 1e-9, snapped, q)
    base = np.floor(q)
    local = q - base
    s = int(round(local.sum()))
    if s == 0:
        k = int(np.argmax(q))
        base[k] -= 1.0
        local[k] = 1.0
        s = 1
    if s not in (1, 2):
        raise GeometryError(f"{tuple(point)} does not fall in a lattice cell (fractional sum {local.sum()})")
    region = Region.TRIANGLE if s == 1 else Region.INVERTED_TRIANGLE
    return LatticeCell(region, tuple(int(b) for b in base), tuple(float(c) for c in local))

def reference_thresholds(spec: FrontLike, mu_or_H: int) -> Optional[float]:
    """Largest reference coordinate for which the uniform set is optimal.

    None for the fronts whose optimal distribution is not uniform.
    """
    kind = _spec(spec).kind
    n = mu_or_H
    if kind is FrontKind.TYPE_I:
        if n < 2:
            raise ClosedFormError(f"Single-line threshold needs mu >= 2, got {n}")
        return -1.0 / (n - 1)
    if kind is FrontKind.TYPE_III:
        return type3_split(n)[0].reference_threshold
    if kind is FrontKind.TYPE_V:
        return type5_split(n).reference_threshold
    if kind.is_plane:
        if n < 1:
            raise ClosedFormError(f"H must be positive, got {n}")
        return -1.0 / n
    return None

@dataclass(frozen=True)
class MoveResult:
    index: int
    target: int
    alpha: float
    points: Tuple[Point, ...]
    hv: float
    base_hv: float

    @property
    def gain(self) -> float:
        return self.hv - self.base_hv

def _neighbours(arr: np.ndarray, i: int, spec) -> List[int]:
    """Closest other points reachable along the front."""
    dist = np.linalg.norm(arr - arr[i], axis=1)
    dist[i] = np.inf
    reachable = [
        j for j in np.argsort(dist, kind="stable")
        if np.isfinite(dist[j]) and dist[j] > 0 and spec.contains((arr[i] + arr[j]) / 2.0, tol=1e-9)
    ]
    if not reachable:
        return []
    nearest = dist[reachable[0]]
    return [int(j) for j in reachable if dist[j] <= nearest * (1.0 + 1e-9)]

def best_single_move(points, spec: FrontLike, reference: Sequence[float],
                     alphas: Sequence[float] = tuple(np.linspace(0.05, 0.5, 10))) -> Optional[MoveResult]:
    """Best hypervolume gain from moving one point towards a front neighbour.

    Returns None when no move improves by more than the improvement tolerance.
    """
    spec = _spec(spec)
    arr = as_points(points, dim=3)
    base_hv = hypervolume(arr, reference).value
    best: Optional[MoveResult] = None
    for i in range(len(arr)):
        for j in _neighbours(arr, i, spec):
            for alpha in alphas:
                moved = arr.copy()
                moved[i] = arr[i] + alpha * (arr[j] - arr[i])
                hv = hypervolume(moved, reference).value
                if best is None or hv > best.hv:
                    best = MoveResult(i, j, float(alpha), tuple(map(tuple, moved)), hv, base_hv)
    if best is None or best.gain <= CONFIG["IMPROVEMENT_TOL"]:
        logger.debug(f"No improving single move on {spec.name}")
        return None
    logger.debug(f"Best move on {spec.name}: point {best.index} -> {best.target}, alpha={best.alpha:.3f}, gain={best.gain:.3e}")
    return best

from typing import Dict, Iterable, Optional, Sequence, Tuple, Union
from dataclasses import dataclass, field
from enum import Enum
import logging

import numpy as np

from .config import CONFIG
from .exceptions import GeometryError, ReferencePointError

logger = logging.getLogger(__name__)

Point = Tuple[float, ...]

class FrontKind(Enum):
    TYPE_I = "type_i"
    TYPE_II = "type_ii"
    TYPE_III = "type_iii"
    TYPE_IV = "type_iv"
    TYPE_V = "type_v"
    TYPE_VI = "type_vi"
    TYPE_VII = "type_vii"
    TYPE_VIII = "type_viii"

    @property
    def is_plane(self) -> bool:
        return self in (FrontKind.TYPE_VII, FrontKind.TYPE_VIII)

    @property
    def numeral(self) -> str:
        return self.value.split("_", 1)[1].upper()

    @classmethod
    def parse(cls, name: Union[str, "FrontKind"]) -> "FrontKind":
        """Accept 'type_iii', 'TypeIII', 'III' or a FrontKind."""
        if isinstance(name, FrontKind):
            return name
        key = str(name).strip().lower().replace("-", "_")
        if key.startswith("type") and not key.startswith("type_"):
            key = "type_" + key[4:]
        if not key.startswith("type_"):
            key = "type_" + key
        try:
            return cls(key)
        except ValueError:
            raise GeometryError(f"Unknown front kind '{name}'") from None

@dataclass(frozen=True)
class Segment:
    start: Point
    end: Point
    label: str

    @property
    def direction(self) -> np.ndarray:
        return np.subtract(self.end, self.start, dtype=float)

    @property
    def length(self) -> float:
        return float(np.linalg.norm(self.direction))

    def at(self, t: float) -> np.ndarray:
        return np.asarray(self.start, dtype=float) + t * self.direction

    def nearest(self, p: Sequence[float]) -> Tuple[float, float]:
        """Clamped parameter of the nearest segment point and its distance."""
        d = self.direction
        t = float(np.dot(np.subtract(p, self.start), d) / np.dot(d, d))
        t = min(max(t, 0.0), 1.0)
        return t, float(np.linalg.norm(self.at(t) - np.asarray(p, dtype=float)))

@dataclass(frozen=True)
class FrontSpec:
    kind: FrontKind
    description: str
    segments: Tuple[Segment, ...] = tuple()
    plane_sum: Optional[float] = None  # 1 for the triangle, 2 for the inverted triangle

    @property
    def is_line_based(self) -> bool:
        return not self.kind.is_plane

    @property
    def name(self) -> str:
        return self.kind.value

    @property
    def extreme_points(self) -> Tuple[Point, ...]:
        if self.kind is FrontKind.TYPE_VII:
            return ((1.0, 0.0, 0.0), (0.0, 1.0, 0.0), (0.0, 0.0, 1.0))
        if self.kind is FrontKind.TYPE_VIII:
            return ((0.0, 1.0, 1.0), (1.0, 0.0, 1.0), (1.0, 1.0, 0.0))
        corners = []
        for seg in self.segments:
            for p in (seg.start, seg.end):
                if p not in corners:
                    corners.append(p)
        return tuple(corners)

    def segment_owner(self, corner: Point) -> int:
        """Lowest segment index having `corner` as an endpoint."""
        for i, seg in enumerate(self.segments):
            if corner in (seg.start, seg.end):
                return i
        raise GeometryError(f"{corner} is not an endpoint of {self.name}")

    def distance(self, p: Sequence[float]) -> float:
        """Euclidean distance from p to the front."""
        q = np.asarray(p, dtype=float)
        if q.shape != (3,):
            raise GeometryError(f"Expected a 3D point, got shape {q.shape}")
        if self.is_line_based:
            return min(seg.nearest(q)[1] for seg in self.segments)
        from .geometry import project_simplex  # local import, geometry builds on models
        if self.kind is FrontKind.TYPE_VII:
            return float(np.linalg.norm(project_simplex(q) - q))
        return float(np.linalg.norm((1.0 - project_simplex(1.0 - q)) - q))

    def contains(self, p: Sequence[float], tol: float = CONFIG["CONTAINS_TOL"]) -> bool:
        q = np.asarray(p, dtype=float)
        if q.shape != (3,) or not np.all(np.isfinite(q)):
            return False
        if self.kind.is_plane:
            if abs(q.sum() - self.plane_sum) > tol or np.any(q < -tol):
                return False
            return not (self.kind is FrontKind.TYPE_VIII and np.any(q > 1.0 + tol))
        return self.distance(q) <= tol

@dataclass(frozen=True)
class LineCoord:
    segment: int
    t: float

@dataclass(frozen=True)
class PlaneCoord:
    u: float
    v: float

ManifoldCoord = Union[LineCoord, PlaneCoord]

def as_points(points: Iterable[Sequence[float]], dim: Optional[int] = None) -> np.ndarray:
    """Validate and convert to a float (n, m) array."""
    arr = np.asarray(list(points) if not isinstance(points, np.ndarray) else points, dtype=float)
    if arr.size == 0:
        return np.empty((0, dim or 3))
    if arr.ndim != 2 or arr.shape[1] not in (2, 3):
        raise ReferencePointError(f"Points must be 2D or 3D vectors, got shape {arr.shape}")
    if dim is not None and arr.shape[1] != dim:
        raise ReferencePointError(f"Expected dimension {dim}, got {arr.shape[1]}")
    if not np.all(np.isfinite(arr)):
        raise ReferencePointError("Point coordinates must be finite")
    return arr

@dataclass(frozen=True)
class SolutionSet:
    """Points plus reference; duplicates collapse on construction."""
    points: Tuple[Point, ...]
    reference: Point
    front: Optional[FrontSpec] = field(default=None, compare=False)

    def __post_init__(self):
        ref = tuple(float(x) for x in self.reference)
        arr = as_points(self.points, dim=len(ref))
        if arr.size and not np.all(arr > np.asarray(ref)):
            raise ReferencePointError("Every point must strictly dominate the reference point")
        unique = []
        for row in arr:
            p = tuple(float(x) for x in row)
            if p not in unique:
                unique.append(p)
        object.__setattr__(self, "points", tuple(unique))
        object.__setattr__(self, "reference", ref)

    def __len__(self) -> int:
        return len(self.points)

    @property
    def dim(self) -> int:
        return len(self.reference)

    @property
    def array(self) -> np.ndarray:
        return np.asarray(self.points, dtype=float).reshape(-1, self.dim)

    def with_point(self, p: Sequence[float]) -> "SolutionSet":
        return SolutionSet(self.points + (tuple(float(x) for x in p),), self.reference, self.front)

    def without(self, index: int) -> "SolutionSet":
        if not 0 <= index < len(self.points):
            raise IndexError(f"Index {index} out of range for set of size {len(self.points)}")
        return SolutionSet(self.points[:index] + self.points[index + 1:], self.reference, self.front)

    def hypervolume(self) -> float:
        from .hypervolume import hypervolume
        return hypervolume(self.array, self.reference).value

    def contributions(self) -> Tuple[float, ...]:
        from .hypervolume import contributions
        return contributions(self.array, self.reference).values

def _seg(a: Point, b: Point, label: str) -> Segment:
    return Segment(a, b, label)

E1, E2, E3 = (1.0, 0.0, 0.0), (0.0, 1.0, 0.0), (0.0, 0.0, 1.0)
I1, I2, I3 = (0.0, 1.0, 1.0), (1.0, 0.0, 1.0), (1.0, 1.0, 0.0)

FRONTS: Dict[FrontKind, FrontSpec] = {
    FrontKind.TYPE_I: FrontSpec(
        FrontKind.TYPE_I, "single line f1+f3=1, f2=0",
        (_seg(E3, E1, "f2=0"),)
    ),
    FrontKind.TYPE_II: FrontSpec(
        FrontKind.TYPE_II, "single line f1+f3=1, f1=f2",
        (_seg(E3, I3, "f1=f2"),)
    ),
    FrontKind.TYPE_III: FrontSpec(
        FrontKind.TYPE_III, "two edges of the triangle f1+f2+f3=1",
        (_seg(E1, E3, "f2=0"), _seg(E1, E2, "f3=0"))
    ),
    FrontKind.TYPE_IV: FrontSpec(
        FrontKind.TYPE_IV, "two edges of the inverted triangle f1+f2+f3=2",
        (_seg(I1, I3, "f2=1"), _seg(I1, I2, "f3=1"))
    ),
    FrontKind.TYPE_V: FrontSpec(
        FrontKind.TYPE_V, "three edges of the triangle f1+f2+f3=1",
        (_seg(E1, E3, "f2=0"), _seg(E1, E2, "f3=0"), _seg(E2, E3, "f1=0"))
    ),
    FrontKind.TYPE_VI: FrontSpec(
        FrontKind.TYPE_VI, "three edges of the inverted triangle f1+f2+f3=2",
        (_seg(I1, I3, "f2=1"), _seg(I1, I2, "f3=1"), _seg(I2, I3, "f1=1"))
    ),
    FrontKind.TYPE_VII: FrontSpec(
        FrontKind.TYPE_VII, "triangle f1+f2+f3=1, fi>=0", plane_sum=1.0
    ),
    FrontKind.TYPE_VIII: FrontSpec(
        FrontKind.TYPE_VIII, "inverted triangle f1+f2+f3=2, 0<=fi<=1", plane_sum=2.0
    ),
}

def get_front_spec(kind: Union[str, FrontKind]) -> FrontSpec:
    """Get front specification by kind or serialized name"""
    try:
        return FRONTS[FrontKind.parse(kind)]
    except GeometryError:
        logger.warning(f"Front spec not found for: {kind}")
        raise

def list_fronts(line_based: Optional[bool] = None) -> Tuple[str, ...]:
    """Serialized names of the registered fronts"""
    return tuple(
        spec.name for spec in FRONTS.values()
        if line_based is None or spec.is_line_based == line_based
    )

def validate_front(kind: Union[str, FrontKind]) -> bool:
    """Check if a front kind name is known"""
    try:
        FrontKind.parse(kind)
        return True
    except GeometryError:
        return False

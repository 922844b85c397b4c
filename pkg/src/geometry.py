"""Front parametrizations and uniform point sets (DAS lattices, equispaced lines).

DAS points are built from integer numerators over H so that every
coordinate sum is exact. Line-based fronts are parametrized per segment by
t in [0, 1]; planes by a barycentric pair (u, v) with u, v >= 0, u + v <= 1.
"""
from typing import List, Optional, Sequence, Tuple, Union
import logging

import numpy as np

from .config import CONFIG
from .exceptions import GeometryError
from .models import (
    FrontKind, FrontSpec, LineCoord, ManifoldCoord, PlaneCoord, Point, get_front_spec
)

logger = logging.getLogger(__name__)

FrontLike = Union[FrontSpec, FrontKind, str]

def _spec(spec: FrontLike) -> FrontSpec:
    return spec if isinstance(spec, FrontSpec) else get_front_spec(spec)

def das_lattice(H: int, m: int = 3) -> List[Tuple[int, ...]]:
    """Integer numerators (k1..km), sum H, in descending lexicographic order."""
    if not isinstance(H, (int, np.integer)) or isinstance(H, bool) or H < 1:
        raise GeometryError(f"H must be a positive integer, got {H!r}")
    if m not in (2, 3):
        raise GeometryError(f"Only m in {{2, 3}} is supported, got {m}")
    if m == 2:
        return [(k, H - k) for k in range(H, -1, -1)]
    return [(k1, k2, H - k1 - k2) for k1 in range(H, -1, -1) for k2 in range(H - k1, -1, -1)]

def das_weights(H: int, m: int = 3) -> List[Point]:
    """All simplex-lattice points with coordinates in {0, 1/H, ..., 1}."""
    return [tuple(k / H for k in ks) for ks in das_lattice(H, m)]

def inverted_das_weights(H: int) -> List[Point]:
    """(1,1,1) - w for every DAS point w; lies on the inverted triangle."""
    return [tuple((H - k) / H for k in ks) for ks in das_lattice(H, 3)]

def _segment_point(spec: FrontSpec, index: int, i: int, intervals: int) -> Point:
    seg = spec.segments[index]
    return tuple(
        (s * (intervals - i) + e * i) / intervals for s, e in zip(seg.start, seg.end)
    )

def uniform_line_set(spec: FrontLike, counts: Sequence[int]) -> List[Point]:
    """Equispaced points per segment, endpoints included, shared corners once.

    counts[j] is the number of points on segment j including both of its
    endpoints. A corner shared by two segments is emitted by the lower index.
    """
    spec = _spec(spec)
    if not spec.is_line_based:
        raise GeometryError(f"{spec.name} is not a line-based front")
    if len(counts) != len(spec.segments):
        raise GeometryError(
            f"{spec.name} has {len(spec.segments)} segments, got {len(counts)} counts"
        )
    points: List[Point] = []
    for j, count in enumerate(counts):
        if count < 2:
            raise GeometryError(f"Segment {j} needs at least its two endpoints, got count={count}")
        for i in range(count):
            p = _segment_point(spec, j, i, count - 1)
            if p not in points:
                points.append(p)
    return points

def uniform_front_set(spec: FrontLike, intervals: int) -> List[Point]:
    """Uniform set with the same number of intervals on every segment (or H for planes)."""
    spec = _spec(spec)
    if intervals < 1:
        raise GeometryError(f"intervals must be positive, got {intervals}")
    if spec.kind is FrontKind.TYPE_VII:
        return das_weights(intervals, 3)
    if spec.kind is FrontKind.TYPE_VIII:
        return inverted_das_weights(intervals)
    return uniform_line_set(spec, [intervals + 1] * len(spec.segments))

def project_simplex(w: Sequence[float]) -> np.ndarray:
    """Euclidean projection onto {w >= 0, sum(w) = 1}."""
    w = np.asarray(w, dtype=float)
    u = np.sort(w)[::-1]
    css = np.cumsum(u) - 1.0
    ind = np.arange(1, w.size + 1)
    rho = ind[u - css / ind > 0][-1]
    theta = css[rho - 1] / rho
    return np.maximum(w - theta, 0.0)

def embed(spec: FrontLike, coord: ManifoldCoord) -> np.ndarray:
    """Map a manifold coordinate onto its front point."""
    spec = _spec(spec)
    tol = CONFIG["CONTAINS_TOL"]
    if spec.is_line_based:
        if not isinstance(coord, LineCoord):
            raise GeometryError(f"{spec.name} expects a LineCoord, got {coord!r}")
        if not 0 <= coord.segment < len(spec.segments):
            raise GeometryError(f"Segment {coord.segment} out of range for {spec.name}")
        if not -tol <= coord.t <= 1.0 + tol:
            raise GeometryError(f"t must lie in [0, 1], got {coord.t}")
        return spec.segments[coord.segment].at(min(max(coord.t, 0.0), 1.0))
    if not isinstance(coord, PlaneCoord):
        raise GeometryError(f"{spec.name} expects a PlaneCoord, got {coord!r}")
    u, v = coord.u, coord.v
    if u < -tol or v < -tol or u + v > 1.0 + tol:
        raise GeometryError(f"Barycentric pair out of range: ({u}, {v})")
    w = np.array([u, v, 1.0 - u - v])
    return w if spec.kind is FrontKind.TYPE_VII else 1.0 - w

def project(spec: FrontLike, p: Sequence[float]) -> ManifoldCoord:
    """Nearest front point's manifold coordinate (clamps off-front input)."""
    spec = _spec(spec)
    q = np.asarray(p, dtype=float)
    if q.shape != (3,):
        raise GeometryError(f"Expected a 3D point, got shape {q.shape}")
    if spec.is_line_based:
        best: Optional[Tuple[float, int, float]] = None
        for j, seg in enumerate(spec.segments):
            t, dist = seg.nearest(q)
            if best is None or dist < best[0]:
                best = (dist, j, t)
        dist, j, t = best
        coord: ManifoldCoord = LineCoord(j, t)
    else:
        w = project_simplex(q if spec.kind is FrontKind.TYPE_VII else 1.0 - q)
        coord = PlaneCoord(float(w[0]), float(w[1]))
        dist = float(np.linalg.norm(embed(spec, coord) - q))
    if dist > CONFIG["PROJECT_MAX_DISTANCE"]:
        raise GeometryError(f"{tuple(q)} is {dist:.3f} away from {spec.name}")
    return coord

def clamp_coord(spec: FrontLike, coord: ManifoldCoord) -> ManifoldCoord:
    """Pull an out-of-range manifold coordinate back onto the front."""
    spec = _spec(spec)
    if isinstance(coord, LineCoord):
        return LineCoord(coord.segment, min(max(coord.t, 0.0), 1.0))
    w = project_simplex([coord.u, coord.v, 1.0 - coord.u - coord.v])
    return PlaneCoord(float(w[0]), float(w[1]))

def sample_front(spec: FrontLike, n: int, rng: np.random.Generator) -> List[ManifoldCoord]:
    """Uniform random coordinates on the front (by length or by area)."""
    spec = _spec(spec)
    if spec.is_line_based:
        lengths = np.array([seg.length for seg in spec.segments])
        segments = rng.choice(len(lengths), size=n, p=lengths / lengths.sum())
        ts = rng.random(n)
        return [LineCoord(int(j), float(t)) for j, t in zip(segments, ts)]
    w = rng.dirichlet(np.ones(3), size=n)
    return [PlaneCoord(float(a), float(b)) for a, b, _ in w]

def embed_all(spec: FrontLike, coords: Sequence[ManifoldCoord]) -> np.ndarray:
    spec = _spec(spec)
    if not coords:
        return np.empty((0, 3))
    return np.vstack([embed(spec, c) for c in coords])


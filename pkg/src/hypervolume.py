"""Exact hypervolume and hypervolume contributions in two and three dimensions.

Maximization throughout: a point p dominates the box [r, p]. Every point
must strictly dominate the reference point in all coordinates; dominated
or duplicated points inside a set are fine and simply contribute nothing.
"""
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple
import logging

import numpy as np

from .exceptions import EmptySetError, ReferencePointError
from .models import as_points

logger = logging.getLogger(__name__)

@dataclass(frozen=True)
class HvResult:
    value: float

    def __float__(self) -> float:
        return self.value

@dataclass(frozen=True)
class ContributionTable:
    values: Tuple[float, ...]
    total: float

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, index: int) -> float:
        return self.values[index]

    @property
    def least(self) -> int:
        """Index of the smallest entry, lowest index on ties."""
        return int(np.argmin(self.values))

def _validate(points, reference: Sequence[float], dim: Optional[int] = None) -> Tuple[np.ndarray, np.ndarray]:
    ref = np.asarray(reference, dtype=float)
    if ref.ndim != 1 or ref.size not in (2, 3):
        raise ReferencePointError(f"Reference must be a 2D or 3D vector, got shape {ref.shape}")
    if dim is not None and ref.size != dim:
        raise ReferencePointError(f"Expected a {dim}D reference point, got {ref.size}D")
    arr = as_points(points, dim=ref.size)
    if arr.size and not np.all(arr > ref):
        bad = arr[~np.all(arr > ref, axis=1)][0]
        raise ReferencePointError(
            f"Point {tuple(bad)} does not strictly dominate reference {tuple(ref)}"
        )
    return arr, ref

def _staircase_area(xy: np.ndarray, r1: float, r2: float) -> float:
    """Area dominated by 2D points, sweeping f1 from high to low."""
    if len(xy) == 0:
        return 0.0
    order = np.lexsort((-xy[:, 1], -xy[:, 0]))
    xs = xy[order, 0]
    ys = xy[order, 1]
    area = 0.0
    best_y = r2
    for i in range(len(xs)):
        best_y = max(best_y, ys[i])
        x_next = xs[i + 1] if i + 1 < len(xs) else r1
        area += (xs[i] - x_next) * (best_y - r2)
    return area

def hv2(points, reference) -> HvResult:
    """Exact 2D hypervolume (staircase area)."""
    arr, ref = _validate(points, reference, dim=2)
    return HvResult(_staircase_area(arr, ref[0], ref[1]))

def _sweep_volume(arr: np.ndarray, ref: np.ndarray) -> float:
    if len(arr) == 0:
        return 0.0
    levels = np.unique(arr[:, 2])[::-1]
    volume = 0.0
    for k, z in enumerate(levels):
        z_next = levels[k + 1] if k + 1 < len(levels) else ref[2]
        active = arr[arr[:, 2] >= z]
        volume += _staircase_area(active[:, :2], ref[0], ref[1]) * (z - z_next)
    return volume

def hv3(points, reference) -> HvResult:
    """Exact 3D hypervolume by sweeping f3 levels downwards.

    Between two consecutive f3 levels the slab area is the 2D hypervolume
    of every point at or above the upper level; the last slab ends at r3.
    """
    arr, ref = _validate(points, reference, dim=3)
    return HvResult(_sweep_volume(arr, ref))

def hypervolume(points, reference) -> HvResult:
    """Dispatch on the reference point's dimension."""
    dim = np.asarray(reference).size
    return hv2(points, reference) if dim == 2 else hv3(points, reference)

def hvc(index: int, points, reference) -> float:
    """HV(A) - HV(A minus point `index`)."""
    arr, ref = _validate(points, reference)
    if not 0 <= index < len(arr):
        raise IndexError(f"Index {index} out of range for set of size {len(arr)}")
    rest = np.delete(arr, index, axis=0)
    return hypervolume(arr, ref).value - hypervolume(rest, ref).value

def _dominance_grid(arr: np.ndarray, ref: np.ndarray) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Cell volumes, dominator counts and dominator index sums on the compressed grid.

    Grid lines are the distinct coordinate values (plus the reference) per
    axis. A point covers every cell whose upper corner it weakly dominates,
    so a suffix cumulative sum of per-point markers counts the dominators.
    """
    m = arr.shape[1]
    axes = [np.unique(np.concatenate(([ref[k]], arr[:, k]))) for k in range(m)]
    corner = tuple(np.searchsorted(axes[k], arr[:, k]) - 1 for k in range(m))
    shape = tuple(len(a) - 1 for a in axes)

    count = np.zeros(shape)
    label = np.zeros(shape)
    np.add.at(count, corner, 1.0)
    np.add.at(label, corner, np.arange(len(arr), dtype=float))
    for axis in range(m):
        count = np.flip(np.cumsum(np.flip(count, axis), axis=axis), axis)
        label = np.flip(np.cumsum(np.flip(label, axis), axis=axis), axis)

    volume = np.diff(axes[0])
    for k in range(1, m):
        volume = np.multiply.outer(volume, np.diff(axes[k]))
    return volume, count, label

def _mutually_nondominated(arr: np.ndarray) -> bool:
    """True when no point weakly dominates another (duplicates included)."""
    covers = np.all(arr[:, None, :] >= arr[None, :, :], axis=2)
    np.fill_diagonal(covers, False)
    return not covers.any()

def _row_searchsorted(rows: np.ndarray, queries: np.ndarray, side: str = "left") -> np.ndarray:
    """np.searchsorted applied row by row, on exact value ranks."""
    values, inverse = np.unique(np.concatenate([rows.ravel(), queries.ravel()]), return_inverse=True)
    inverse = inverse.ravel()
    stride = len(values) + 1
    offset = np.arange(len(rows))[:, None] * stride
    flat_rows = (inverse[: rows.size].reshape(rows.shape) + offset).ravel()
    flat_queries = (inverse[rows.size:].reshape(queries.shape) + offset).ravel()
    found = np.searchsorted(flat_rows, flat_queries, side=side).reshape(queries.shape)
    return found - np.arange(len(rows))[:, None] * rows.shape[1]

def _suffix_maxima(keys: np.ndarray, key_floor: float, heights, floors):
    """Sort each row by key and take suffix maxima of every height array along it.

    A column holding (key_floor, floor) is appended to every row first, so each
    sorted row starts at the reference coordinate.
    """
    n = len(keys)
    keys = np.hstack([keys, np.full((n, 1), key_floor)])
    order = np.argsort(keys, axis=1, kind="stable")
    sorted_keys = np.take_along_axis(keys, order, axis=1)
    maxima = []
    for height, floor in zip(heights, floors):
        height = np.take_along_axis(np.hstack([height, np.full((n, 1), floor)]), order, axis=1)
        maxima.append(np.maximum.accumulate(height[:, ::-1], axis=1)[:, ::-1])
    return sorted_keys, maxima

def _exclusive_volumes(arr: np.ndarray, ref: np.ndarray, others: np.ndarray) -> np.ndarray:
    """Volume of each box [ref, p_i] not covered by the boxes of its `others`.

    `others[i, q]` selects the points that may cover point i. The set must be
    mutually nondominated: then every clipped point min(p_q, p_i) sits on an
    upper face of box i. Points reaching p_i in f3 cover full-height columns
    over a 2D staircase in (f1, f2); points reaching it in f1 (or f2) cover
    everything below a staircase in (f2, f3) (or (f1, f3)). The uncovered
    volume is then a sum over f1 cells of a 1D integral along f2 that prefix
    sums answer in closed form.
    """
    r1, r2, r3 = ref
    clip = np.minimum(arr[None, :, :], arr[:, None, :])
    reach = (arr[None, :, :] >= arr[:, None, :]) & others[:, :, None]

    xs, (column, wall) = _suffix_maxima(
        clip[:, :, 0], r1,
        [np.where(reach[:, :, 2], clip[:, :, 1], r2), np.where(reach[:, :, 1], clip[:, :, 2], r3)],
        [r2, r3],
    )
    ys, (shelf,) = _suffix_maxima(
        clip[:, :, 1], r2, [np.where(reach[:, :, 0], clip[:, :, 2], r3)], [r3]
    )

    dx = np.diff(xs, axis=1)
    floor_y = column[:, 1:]
    floor_z = wall[:, 1:]
    dy = np.diff(ys, axis=1)
    step_z = shelf[:, 1:]

    zeros = np.zeros((len(arr), 1))
    run_y = np.hstack([zeros, np.cumsum(dy, axis=1)])
    run_yz = np.hstack([zeros, np.cumsum(dy * step_z, axis=1)])
    span = run_y[:, -1:]

    start = _row_searchsorted(ys[:, :-1], floor_y)
    # step_z is nonincreasing, so its negation is sorted
    cross = np.maximum(start, _row_searchsorted(-step_z, -floor_z))

    def at(table, index):
        return np.take_along_axis(table, index, axis=1)

    strip = (
        arr[:, 2:3] * (span - at(run_y, start))
        - (at(run_yz, cross) - at(run_yz, start))
        - floor_z * (span - at(run_y, cross))
    )
    return (dx * strip).sum(axis=1)

def _contribution_values(arr: np.ndarray, ref: np.ndarray) -> np.ndarray:
    """Exclusive contributions of an already validated set."""
    n = len(arr)
    if arr.shape[1] == 3 and _mutually_nondominated(arr):
        return _exclusive_volumes(arr, ref, ~np.eye(n, dtype=bool))
    volume, count, label = _dominance_grid(arr, ref)
    single = count == 1
    return np.bincount(label[single].astype(int), weights=volume[single], minlength=n)

def _total_volume(arr: np.ndarray, ref: np.ndarray) -> float:
    if arr.shape[1] == 3 and _mutually_nondominated(arr):
        # each point adds what the points before it leave uncovered
        earlier = np.tri(len(arr), k=-1, dtype=bool)
        return float(_exclusive_volumes(arr, ref, earlier).sum())
    volume, count, _ = _dominance_grid(arr, ref)
    return float(volume[count > 0].sum())

def contributions(points, reference) -> ContributionTable:
    """All exclusive contributions at once, aligned with the input order."""
    arr, ref = _validate(points, reference)
    if len(arr) == 0:
        return ContributionTable(tuple(), 0.0)
    values = _contribution_values(arr, ref)
    return ContributionTable(tuple(float(v) for v in values), _total_volume(arr, ref))

def least_contributor(points, reference) -> int:
    """Index of the minimal contribution; ties go to the lowest index."""
    arr, ref = _validate(points, reference)
    if len(arr) == 0:
        raise EmptySetError("least_contributor needs a nonempty set")
    return int(np.argmin(_contribution_values(arr, ref)))

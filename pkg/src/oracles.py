"""Independent hypervolume oracles used to validate the exact engine."""
from dataclasses import dataclass
import logging

import numpy as np

from .config import CONFIG
from .exceptions import ConfigurationError, GeometryError
from .hypervolume import HvResult, _validate

logger = logging.getLogger(__name__)

@dataclass(frozen=True)
class McEstimate:
    value: float
    stderr: float
    samples: int

    def agrees_with(self, exact: float, sigmas: float = 4.0) -> bool:
        return abs(self.value - exact) <= sigmas * self.stderr + 1e-15

def hv_oracle_ie(points, reference) -> HvResult:
    """Inclusion-exclusion over every nonempty subset (exact, small sets only).

    Each term is the volume of the box between the reference point and the
    componentwise minimum of the subset.
    """
    arr, ref = _validate(points, reference)
    n = len(arr)
    if n > CONFIG["IE_MAX_POINTS"]:
        raise ConfigurationError(
            f"Inclusion-exclusion is limited to {CONFIG['IE_MAX_POINTS']} points, got {n}"
        )
    total = 0.0
    # depth-first over subsets, carrying the running componentwise minimum
    stack = [(i, arr[i], 1) for i in range(n - 1, -1, -1)]
    while stack:
        last, low, size = stack.pop()
        total += (1.0 if size % 2 else -1.0) * float(np.prod(low - ref))
        for j in range(n - 1, last, -1):
            stack.append((j, np.minimum(low, arr[j]), size + 1))
    return HvResult(total)

def hv_oracle_mc(points, reference, samples: int = 1_000_000, seed: int = 0,
                 chunk: int = 100_000) -> McEstimate:
    """Monte-Carlo estimate over the box [r, componentwise max]."""
    if samples < CONFIG["MC_MIN_SAMPLES"]:
        raise ConfigurationError(
            f"At least {CONFIG['MC_MIN_SAMPLES']} samples are required, got {samples}"
        )
    arr, ref = _validate(points, reference)
    if len(arr) == 0:
        return McEstimate(0.0, 0.0, samples)
    upper = arr.max(axis=0)
    extent = upper - ref
    if np.any(extent <= 0):
        raise GeometryError(f"Degenerate sampling box between {tuple(ref)} and {tuple(upper)}")
    box = float(np.prod(extent))

    rng = np.random.default_rng(seed)
    hits = 0
    remaining = samples
    while remaining:
        size = min(chunk, remaining)
        draws = ref + rng.random((size, arr.shape[1])) * extent
        dominated = np.zeros(size, dtype=bool)
        for p in arr:
            dominated |= np.all(draws <= p, axis=1)
        hits += int(dominated.sum())
        remaining -= size

    frac = hits / samples
    estimate = McEstimate(box * frac, box * np.sqrt(frac * (1.0 - frac) / samples), samples)
    logger.debug(f"MC oracle: {hits}/{samples} hits, estimate {estimate.value:.6f} ± {estimate.stderr:.2e}")
    return estimate

"""Steady-state (mu + 1) hypervolume search restricted to a front.

Candidates live in manifold coordinates, so every offspring is a front
point. Each generation one random parent is perturbed, the child joins the
population and the least hypervolume contributor leaves.
"""
from dataclasses import dataclass, field
from functools import partial
from typing import List, Optional, Sequence, Tuple
import logging

import numpy as np
import pandas as pd
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from .config import CONFIG
from .exceptions import ConfigurationError, ReferencePointError
from .geometry import clamp_coord, embed, embed_all, project, sample_front
from .hypervolume import contributions, hypervolume, least_contributor
from .models import FrontSpec, LineCoord, ManifoldCoord, PlaneCoord, Point, SolutionSet, as_points, get_front_spec
from .settings import settings
from .thread_manager import ThreadManager

logger = logging.getLogger(__name__)

SEARCH = CONFIG["SEARCH"]

class SearchConfig(BaseModel):
    """Validated search parameters; invalid values raise ConfigurationError."""
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    spec: FrontSpec
    mu: int = Field(ge=1)
    reference: Tuple[float, float, float]
    generations: int = Field(default=CONFIG["BUDGETS"]["desk"]["generations"], ge=1)
    runs: int = Field(default=CONFIG["BUDGETS"]["desk"]["runs"], ge=1)
    seed: int = Field(default=settings.DEFAULT_SEED, ge=0, lt=2 ** 64)
    mutation_sigma: float = Field(default=SEARCH["SIGMA_INITIAL"], gt=0)
    sigma_decay: Optional[float] = Field(default=None, gt=0, le=1)
    trace_every: int = Field(default=SEARCH["TRACE_EVERY"], ge=1)

    def __init__(self, **data):
        try:
            super().__init__(**data)
        except ValidationError as e:
            raise ConfigurationError(f"Invalid search configuration: {e}") from e

    @field_validator("spec", mode="before")
    @classmethod
    def _resolve_spec(cls, value):
        return value if isinstance(value, FrontSpec) else get_front_spec(value)

    @model_validator(mode="after")
    def _reference_dominated(self):
        lowest = np.min(np.asarray(self.spec.extreme_points), axis=0)
        if not np.all(lowest > np.asarray(self.reference)):
            raise ValueError(f"reference {self.reference} is not strictly dominated by every point of {self.spec.name}")
        return self

    @property
    def kick_generations(self) -> int:
        """Generations per kick; zero when the population or the budget is too small for kicks."""
        if self.mu <= SEARCH["KICK_SIZE"]:
            return 0
        return int(self.generations * SEARCH["KICK_SHARE"]) // SEARCH["KICKS"]

    @property
    def main_generations(self) -> int:
        return self.generations - SEARCH["KICKS"] * self.kick_generations

    @property
    def decay(self) -> float:
        """Per-generation sigma factor; by default sigma reaches the floor at the end of the main phase."""
        if self.sigma_decay is not None:
            return self.sigma_decay
        floor = SEARCH["SIGMA_FLOOR"]
        if self.mutation_sigma <= floor:
            return 1.0
        return (floor / self.mutation_sigma) ** (1.0 / self.main_generations)

@dataclass(frozen=True)
class RunResult:
    run_index: int
    points: Tuple[Point, ...]
    hv: float
    trace: Tuple[Tuple[int, float], ...]
    skipped: int = 0

@dataclass(frozen=True)
class SearchResult:
    best_set: SolutionSet
    best_hv: float
    per_run_best: Tuple[float, ...]
    hv_trace: Tuple[Tuple[Tuple[int, float], ...], ...] = field(repr=False)
    best_run: int = 0

    def trace_frame(self) -> pd.DataFrame:
        """Long-format trace: one row per (run, sampled generation)."""
        rows = [
            {"run": run, "generation": gen, "best_hv": hv}
            for run, trace in enumerate(self.hv_trace)
            for gen, hv in trace
        ]
        return pd.DataFrame(rows, columns=["run", "generation", "best_hv"])

def _mutate(spec: FrontSpec, coord: ManifoldCoord, sigma: float, rng: np.random.Generator) -> ManifoldCoord:
    if rng.random() < SEARCH["GLOBAL_MOVE_PROBABILITY"]:
        return sample_front(spec, 1, rng)[0]
    if isinstance(coord, LineCoord):
        n_segments = len(spec.segments)
        if n_segments > 1 and rng.random() < SEARCH["SEGMENT_HOP_PROBABILITY"]:
            others = [j for j in range(n_segments) if j != coord.segment]
            return LineCoord(int(rng.choice(others)), coord.t)
        return clamp_coord(spec, LineCoord(coord.segment, coord.t + sigma * rng.standard_normal()))
    du, dv = sigma * rng.standard_normal(2)
    return clamp_coord(spec, PlaneCoord(coord.u + du, coord.v + dv))

def _evolve(spec: FrontSpec, coords: List[ManifoldCoord], reference: np.ndarray,
            generations: int, rng: np.random.Generator, sigma: float, decay: float,
            trace_every: int) -> Tuple[List[ManifoldCoord], np.ndarray, List[Tuple[int, float]], int]:
    """Shared (mu + 1) loop; returns the final population, its points, the trace and skipped generations."""
    arr = embed_all(spec, coords)
    trace = [(0, hypervolume(arr, reference).value)]
    skipped = 0
    floor = SEARCH["SIGMA_FLOOR"]

    for gen in range(1, generations + 1):
        parent = coords[int(rng.integers(len(coords)))]
        for _ in range(SEARCH["DUPLICATE_RETRIES"]):
            child = _mutate(spec, parent, sigma, rng)
            point = embed(spec, child)
            if not np.any(np.all(arr == point, axis=1)):
                break
        else:
            skipped += 1
            logger.debug(f"Generation {gen}: no distinct offspring after {SEARCH['DUPLICATE_RETRIES']} tries")
            child = None

        if child is not None:
            candidate = np.vstack([arr, point])
            loser = least_contributor(candidate, reference)
            coords = coords + [child]
            del coords[loser]
            arr = np.delete(candidate, loser, axis=0)

        sigma = max(sigma * decay, floor)
        if gen % trace_every == 0 or gen == generations:
            trace.append((gen, hypervolume(arr, reference).value))
    return coords, arr, trace, skipped

def _kick(spec: FrontSpec, coords: List[ManifoldCoord], rng: np.random.Generator) -> List[ManifoldCoord]:
    """Resample several members at once, a move no single replacement can make."""
    size = min(SEARCH["KICK_SIZE"], len(coords))
    chosen = set(int(i) for i in rng.choice(len(coords), size=size, replace=False))
    fresh = iter(sample_front(spec, size, rng))
    return [next(fresh) if i in chosen else c for i, c in enumerate(coords)]

def run_once(config: SearchConfig, run_index: int = 0) -> RunResult:
    """One deterministic run keyed by (seed, run_index).

    The main phase converges from a random start. Each kick afterwards
    re-converges from a perturbed copy of the best population and is kept
    only when it ends strictly higher.
    """
    rng = np.random.default_rng([config.seed, run_index])
    reference = np.asarray(config.reference, dtype=float)
    coords = sample_front(config.spec, config.mu, rng)
    coords, arr, trace, skipped = _evolve(
        config.spec, coords, reference, config.main_generations, rng,
        config.mutation_sigma, config.decay, config.trace_every,
    )
    hv = hypervolume(arr, reference).value

    length = config.kick_generations
    if length:
        kick_decay = (SEARCH["SIGMA_FLOOR"] / SEARCH["KICK_SIGMA"]) ** (1.0 / length)
        for k in range(SEARCH["KICKS"]):
            trial, trial_arr, _, trial_skipped = _evolve(
                config.spec, _kick(config.spec, coords, rng), reference, length, rng,
                SEARCH["KICK_SIGMA"], kick_decay, length,
            )
            skipped += trial_skipped
            trial_hv = hypervolume(trial_arr, reference).value
            if trial_hv > hv:
                logger.debug(f"Kick {k} of run {run_index} escaped: {hv:.6f} -> {trial_hv:.6f}")
                coords, arr, hv = trial, trial_arr, trial_hv
            trace.append((config.main_generations + (k + 1) * length, hv))

    logger.debug(f"{config.spec.name} mu={config.mu} run {run_index}: hv={hv:.6f}, skipped={skipped}")
    return RunResult(run_index, tuple(map(tuple, arr)), hv, tuple(trace), skipped)

def search(config: SearchConfig, manager: Optional[ThreadManager] = None) -> SearchResult:
    """Run `config.runs` independent searches and keep the best final set."""
    manager = manager or ThreadManager()
    runs: List[RunResult] = manager.process_tasks(
        [partial(run_once, config, i) for i in range(config.runs)]
    )
    per_run = tuple(r.hv for r in runs)
    best = max(runs, key=lambda r: (r.hv, -r.run_index))
    logger.info(
        f"{config.spec.name} mu={config.mu} r={config.reference[0]:.4g}: "
        f"best hv {best.hv:.6f} over {config.runs} runs x {config.generations} generations"
    )
    return SearchResult(
        best_set=SolutionSet(best.points, config.reference, config.spec),
        best_hv=best.hv,
        per_run_best=per_run,
        hv_trace=tuple(r.trace for r in runs),
        best_run=best.run_index,
    )

@dataclass(frozen=True)
class LocalOptVerdict:
    passed: bool
    trials: int
    failures: int = 0
    counterexample: Optional[Point] = None
    # largest (HVC(p) - min HVC of the others) seen; <= 0 everywhere on a pass
    worst_margin: float = float("-inf")

def local_opt_check(solution_set: SolutionSet, spec, trials: int = 10_000,
                    seed: int = settings.DEFAULT_SEED, tol: float = CONFIG["CONTAINS_TOL"]) -> LocalOptVerdict:
    """Add random front points one at a time; pass iff each is a least contributor.

    Ties with the added point count as a pass.
    """
    spec = spec if isinstance(spec, FrontSpec) else get_front_spec(spec)
    arr = solution_set.array
    if any(not spec.contains(p, tol=1e-9) for p in arr):
        raise ReferencePointError(f"Solution set does not lie on {spec.name}")
    reference = np.asarray(solution_set.reference, dtype=float)
    rng = np.random.default_rng(seed)
    added = embed_all(spec, sample_front(spec, trials, rng))

    failures = 0
    worst = float("-inf")
    counterexample = None
    for p in added:
        table = contributions(np.vstack([arr, p]), reference)
        values = np.asarray(table.values)
        margin = values[-1] - values[:-1].min() if len(values) > 1 else 0.0
        if margin > worst:
            worst = float(margin)
        if margin > tol:
            failures += 1
            if counterexample is None:
                counterexample = tuple(float(c) for c in p)
    verdict = LocalOptVerdict(failures == 0, trials, failures, counterexample, worst)
    if not verdict.passed:
        logger.warning(f"Local optimality failed on {spec.name}: {failures}/{trials} added points survive, e.g. {counterexample}")
    return verdict

@dataclass(frozen=True)
class DescentResult:
    solution_set: SolutionSet
    improved: bool
    start_hv: float
    final_hv: float

def seeded_descent(points, spec, reference: Sequence[float], iterations: int,
                   seed: int = settings.DEFAULT_SEED,
                   sigma: float = SEARCH["SIGMA_INITIAL"]) -> DescentResult:
    """The search loop started from a given set instead of a random one."""
    spec = spec if isinstance(spec, FrontSpec) else get_front_spec(spec)
    arr = points.array if isinstance(points, SolutionSet) else as_points(points, dim=3)
    ref = np.asarray(reference, dtype=float)
    coords = [project(spec, p) for p in arr]
    start_hv = hypervolume(embed_all(spec, coords), ref).value
    decay = (SEARCH["SIGMA_FLOOR"] / sigma) ** (1.0 / iterations) if sigma > SEARCH["SIGMA_FLOOR"] else 1.0
    _, final, _, _ = _evolve(spec, coords, ref, iterations, np.random.default_rng(seed), sigma, decay, iterations)
    final_hv = hypervolume(final, ref).value
    improved = final_hv > start_hv + CONFIG["IMPROVEMENT_TOL"]
    logger.debug(f"Seeded descent on {spec.name}: {start_hv:.6f} -> {final_hv:.6f}")
    return DescentResult(SolutionSet(tuple(map(tuple, final)), tuple(ref), spec), improved, start_hv, final_hv)

from typing import Dict, Any
from pathlib import Path

CONFIG: Dict[str, Any] = {
    "CONTAINS_TOL": 1e-12,  # absolute tolerance for front membership
    "PROJECT_MAX_DISTANCE": 0.5,  # farther than this from a front is a logic error
    "IE_MAX_POINTS": 20,
    "MC_MIN_SAMPLES": 10_000,
    "IMPROVEMENT_TOL": 1e-9,
    "EXPECTED_VALUES_PATH": Path(__file__).parent / "data" / "expected_values.yaml",
    "EXPERIMENTS_CONFIG_PATH": Path(__file__).parent.parent / "config.json",
}

SEARCH_CONFIG = {
    "SIGMA_INITIAL": 0.3,  # manifold-coordinate units
    "SIGMA_FLOOR": 1e-3,
    "SEGMENT_HOP_PROBABILITY": 0.05,
    "DUPLICATE_RETRIES": 10,
    "TRACE_EVERY": 50,  # generations between trace samples
    "GLOBAL_MOVE_PROBABILITY": 0.05,  # child resampled anywhere on the front
    "KICKS": 4,
    "KICK_SIZE": 3,  # members resampled together by one kick
    "KICK_SHARE": 0.25,  # share of a run's generations spent re-converging after kicks
    "KICK_SIGMA": 0.05,
}

BUDGETS = {
    "desk": {"generations": 2_000, "runs": 20},
    "paper": {"generations": 10_000, "runs": 100},
}

EXPORT_CONFIG = {
    "CSV_FLOAT_FORMAT": "%.10g",
    "COLUMNS_3D": ("f1", "f2", "f3"),
    "COLUMNS_2D": ("f1", "f2"),
}

CONFIG.update({
    "SEARCH": SEARCH_CONFIG,
    "BUDGETS": BUDGETS,
    "EXPORT": EXPORT_CONFIG,
})

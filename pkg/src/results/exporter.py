from pathlib import Path
from typing import Union
import logging

import numpy as np
import pandas as pd

from ..config import CONFIG
from ..exceptions import EmptySetError, StorageError
from ..hypervolume import contributions
from ..models import SolutionSet
from ..settings import settings

logger = logging.getLogger(__name__)

EXPORT = CONFIG["EXPORT"]
FORMATS = ("csv", "json")

class PointSetExporter:
    """Writes point sets with their contributions, and optimizer traces"""

    def __init__(self, export_dir: Union[str, Path, None] = None):
        self.export_dir = Path(export_dir or settings.OUTPUT_DIR)
        self.export_dir.mkdir(parents=True, exist_ok=True)

    @staticmethod
    def contribution_frame(solution_set: SolutionSet) -> pd.DataFrame:
        """One row per point: objectives then its exclusive contribution"""
        if len(solution_set) == 0:
            raise EmptySetError("Refusing to export an empty point set")
        columns = list(EXPORT["COLUMNS_3D"] if solution_set.dim == 3 else EXPORT["COLUMNS_2D"])
        frame = pd.DataFrame(solution_set.array, columns=columns)
        frame["hvc"] = np.asarray(contributions(solution_set.array, solution_set.reference).values)
        return frame

    def _write(self, frame: pd.DataFrame, name: str, fmt: str) -> Path:
        if fmt not in FORMATS:
            raise StorageError(f"Unknown export format '{fmt}', expected one of {FORMATS}")
        filepath = self.export_dir / f"{name}.{fmt}"
        try:
            if fmt == "csv":
                frame.to_csv(filepath, index=False, float_format=EXPORT["CSV_FLOAT_FORMAT"])
            else:
                frame.to_json(filepath, orient="records", indent=2, double_precision=10)
        except OSError as e:
            logger.error(f"Export error: {e}")
            raise StorageError(f"Could not write {filepath}: {e}") from e
        logger.debug(f"Exported {len(frame)} rows to {filepath}")
        return filepath

    def export_set(self, solution_set: SolutionSet, name: str, fmt: str = "csv") -> Path:
        return self._write(self.contribution_frame(solution_set), name, fmt)

    def export_trace(self, trace: pd.DataFrame, name: str, fmt: str = "csv") -> Path:
        """Per-run (generation, best_hv) samples"""
        return self._write(trace, name, fmt)

    def list_exports(self):
        return sorted(f.name for f in self.export_dir.iterdir() if f.suffix.lstrip(".") in FORMATS)

from pathlib import Path
from typing import Any, Dict, List, Optional, Union
import logging

from .storage import ReportStore
from .exporter import PointSetExporter

logger = logging.getLogger(__name__)

class ResultsManager:
    """Central manager for reports and exported data under one output directory"""
    def __init__(self, output_dir: Union[str, Path, None] = None):
        self.storage = ReportStore(output_dir)
        self.exporter = PointSetExporter(output_dir)

    @property
    def output_dir(self) -> Path:
        return self.storage.storage_dir

    def save_report(self, report: Dict[str, Any], name: str) -> Path:
        path = self.storage.save(report, name)
        logger.info(f"Report written to {path}")
        return path

    def load_report(self, name: str) -> Optional[Dict[str, Any]]:
        return self.storage.load(name)

    def list_reports(self) -> List[str]:
        return self.storage.list_files()

    def delete_report(self, name: str) -> bool:
        return self.storage.delete(name)

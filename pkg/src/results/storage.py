from typing import Any, Dict, List, Optional, Union
import json
from pathlib import Path
import logging

from ..exceptions import StorageError
from ..settings import settings

logger = logging.getLogger(__name__)

class ReportStore:
    """JSON storage for experiment reports"""
    def __init__(self, storage_dir: Union[str, Path, None] = None):
        self.storage_dir = Path(storage_dir or settings.OUTPUT_DIR)
        self.storage_dir.mkdir(parents=True, exist_ok=True)

    def path_for(self, name: str) -> Path:
        return self.storage_dir / f"{name}.json"

    def save(self, data: Dict[str, Any], name: str) -> Path:
        """Save a report; keys keep their insertion order"""
        filepath = self.path_for(name)
        try:
            with open(filepath, 'w', encoding='utf-8') as f:
                json.dump(data, f, ensure_ascii=False, indent=2)
        except (OSError, TypeError) as e:
            logger.error(f"Storage save error: {e}")
            raise StorageError(f"Could not write {filepath}: {e}") from e
        return filepath

    def load(self, name: str) -> Optional[Dict[str, Any]]:
        """Load a report, None when it was never saved"""
        filepath = self.path_for(name)
        if not filepath.exists():
            return None
        try:
            with open(filepath, 'r', encoding='utf-8') as f:
                return json.load(f)
        except (OSError, json.JSONDecodeError) as e:
            logger.error(f"Storage load error: {e}")
            raise StorageError(f"Could not read {filepath}: {e}") from e

    def list_files(self) -> List[str]:
        """List all stored reports"""
        return sorted(f.stem for f in self.storage_dir.glob("*.json"))

    def delete(self, name: str) -> bool:
        """Delete a report; False when there was nothing to delete"""
        filepath = self.path_for(name)
        if not filepath.exists():
            return False
        try:
            filepath.unlink()
        except OSError as e:
            logger.error(f"Storage delete error: {e}")
            raise StorageError(f"Could not delete {filepath}: {e}") from e
        return True

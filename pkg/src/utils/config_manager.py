import json
import logging
from pathlib import Path
from typing import Any, Dict, Optional, Union

from ..config import CONFIG
from ..exceptions import ConfigurationError

logger = logging.getLogger(__name__)

class ConfigManager:
    """Handles the experiment defaults file (config.json)"""

    @staticmethod
    def load_config(config_path: Union[str, Path, None] = None) -> Dict[str, Any]:
        """Load experiment defaults; a missing file yields an empty dict"""
        config_path = Path(config_path or CONFIG["EXPERIMENTS_CONFIG_PATH"])
        try:
            with open(config_path, 'r', encoding='utf-8') as f:
                data = json.load(f)
        except FileNotFoundError:
            logger.warning(f"Config file not found: {config_path}")
            return {}
        except json.JSONDecodeError as e:
            logger.error(f"Error parsing config file: {e}")
            raise ConfigurationError(f"Invalid JSON in {config_path}: {e}") from e
        if not isinstance(data, dict):
            raise ConfigurationError(f"{config_path} must hold a JSON object")
        return data

    @staticmethod
    def section(name: str, config_path: Union[str, Path, None] = None,
                defaults: Optional[Dict[str, Any]] = None) -> Dict[str, Any]:
        """One experiment's settings merged over `defaults`"""
        merged = dict(defaults or {})
        merged.update(ConfigManager.load_config(config_path).get(name, {}))
        return merged

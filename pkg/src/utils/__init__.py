from .config_manager import ConfigManager
from .timing import PerformanceMonitor, monitor

__all__ = [
    'ConfigManager',
    'PerformanceMonitor',
    'monitor',
]

import time
from functools import wraps
from typing import Any, Dict, List, Optional
import logging

logger = logging.getLogger(__name__)

class PerformanceMonitor:
    """Collects wall-clock durations of decorated calls."""

    def __init__(self):
        self.metrics: List[Dict[str, Any]] = []

    def measure(self, func_name: str):
        def decorator(func):
            @wraps(func)
            def wrapper(*args, **kwargs):
                start_time = time.perf_counter()
                try:
                    result = func(*args, **kwargs)
                    self._log_metric(func_name, time.perf_counter() - start_time, "success")
                    return result
                except Exception as e:
                    self._log_metric(func_name, time.perf_counter() - start_time, "error", str(e))
                    raise
            return wrapper
        return decorator

    def _log_metric(self, name: str, duration: float, status: str, error: Optional[str] = None):
        metric = {
            "name": name,
            "duration": duration,
            "timestamp": time.time(),
            "status": status
        }
        if error:
            metric["error"] = error
        logger.debug(f"{name} took {duration:.3f}s ({status})")
        self.metrics.append(metric)

    def total(self, name: Optional[str] = None) -> float:
        """Summed duration, optionally restricted to one measured name"""
        return sum(m["duration"] for m in self.metrics if name is None or m["name"] == name)

monitor = PerformanceMonitor()

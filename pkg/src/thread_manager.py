from concurrent.futures import ThreadPoolExecutor
from typing import Any, Callable, List, Optional, Sequence
from functools import wraps
import logging

from .settings import settings

logger = logging.getLogger(__name__)

class ThreadManager:
    """Runs independent tasks on a thread pool and keeps submission order."""

    def __init__(self, max_workers: Optional[int] = None):
        self.max_workers = max_workers or settings.MAX_WORKERS

    def _wrap_with_logging(self, func: Callable, index: int) -> Callable:
        """Log failures with the task index before they propagate"""
        @wraps(func)
        def wrapper(*args, **kwargs):
            try:
                return func(*args, **kwargs)
            except Exception as e:
                logger.error(f"Task {index} failed: {e}")
                raise
        return wrapper

    def process_tasks(self, tasks: Sequence[Callable[[], Any]]) -> List[Any]:
        """Run zero-argument tasks; results come back in task order"""
        wrapped_tasks = [self._wrap_with_logging(task, i) for i, task in enumerate(tasks)]
        if self.max_workers <= 1 or len(wrapped_tasks) <= 1:
            return [t() for t in wrapped_tasks]

        with ThreadPoolExecutor(max_workers=self.max_workers) as executor:
            return list(executor.map(lambda t: t(), wrapped_tasks))

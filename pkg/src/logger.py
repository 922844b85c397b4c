import logging
from pathlib import Path
from typing import Optional

from rich.logging import RichHandler

from .settings import settings

def setup_logger(name: str, log_dir: Optional[Path] = None) -> logging.Logger:
    """Configure and return a logger instance"""
    logger = logging.getLogger(name)

    if not logger.handlers:  # Avoid adding handlers multiple times
        logger.setLevel(settings.LOG_LEVEL.upper())

        log_dir = Path(log_dir or settings.LOG_DIR)
        log_dir.mkdir(parents=True, exist_ok=True)

        file_handler = logging.FileHandler(log_dir / "hvdist.log")
        file_handler.setFormatter(
            logging.Formatter('%(asctime)s - %(name)s - %(levelname)s - %(message)s')
        )

        console_handler = RichHandler(show_path=False, rich_tracebacks=False)
        console_handler.setFormatter(logging.Formatter('%(message)s'))

        logger.addHandler(file_handler)
        logger.addHandler(console_handler)

    return logger

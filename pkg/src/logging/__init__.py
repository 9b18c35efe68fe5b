"""
Logging setup and configuration module for molkit.

This module provides a centralized way to set up logging across the application.
"""

import logging
from datetime import datetime
from pathlib import Path
from typing import Union

from src.core.constants import LOG_DIR

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


def setup_logging(name: str, level: Union[int, str] = logging.INFO,
                  log_to_file: bool = False) -> logging.Logger:
    """
    Set up a logger with a console handler and an optional file handler.

    Args:
        name: The name of the logger (usually __name__ or the package name)
        level: The logging level (default: INFO)
        log_to_file: Also write a timestamped log file under LOG_DIR

    Returns:
        A configured logger instance
    """
    if isinstance(level, str):
        level = logging.getLevelName(level.upper())
        if not isinstance(level, int):
            level = logging.INFO

    logger = logging.getLogger(name)
    logger.setLevel(level)

    # Remove existing handlers to avoid duplicates
    for handler in list(logger.handlers):
        logger.removeHandler(handler)

    # Console handler writes to stderr so reports on stdout stay clean
    console_handler = logging.StreamHandler()
    console_handler.setLevel(level)
    console_handler.setFormatter(logging.Formatter(LOG_FORMAT))
    logger.addHandler(console_handler)

    if log_to_file:
        log_dir = Path(LOG_DIR)
        log_dir.mkdir(exist_ok=True)

        timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")
        log_path = log_dir / f"{name.replace('.', '-')}_{timestamp}.log"

        file_handler = logging.FileHandler(log_path)
        file_handler.setLevel(level)
        file_handler.setFormatter(logging.Formatter(LOG_FORMAT))
        logger.addHandler(file_handler)
        logger.debug(f"Logger {name} initialized with log file: {log_path}")

    return logger

"""Logging setup shared by the CLI, the HTTP service and the numeric core."""
import logging
import os
import sys
from logging.handlers import RotatingFileHandler
from pathlib import Path
from typing import Optional, Union

CONSOLE_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
FILE_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(funcName)s:%(lineno)d - %(message)s'
DATE_FORMAT = '%Y-%m-%d %H:%M:%S'

# Third-party loggers that are chatty at DEBUG
QUIET_LOGGERS = ("matplotlib", "numexpr", "httpx", "multipart")


class LoggerManager:
    """Process-wide logger manager: console on stderr, rotating debug file under LOG_DIR."""

    _instance: Optional['LoggerManager'] = None
    _initialized: bool = False

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __init__(self):
        if not self._initialized:
            self._setup_logging()
            LoggerManager._initialized = True

    def _setup_logging(self):
        # Runs at import time, before Config exists, so the env is read directly
        log_dir = Path(os.getenv("LOG_DIR", "logs"))
        level = _parse_level(os.getenv("LOG_LEVEL", "INFO"))

        self.root_logger = logging.getLogger()
        self.root_logger.setLevel(logging.DEBUG)
        self.root_logger.handlers.clear()

        # stdout carries CLI results
        self.console_handler = logging.StreamHandler(sys.stderr)
        self.console_handler.setLevel(level)
        self.console_handler.setFormatter(logging.Formatter(CONSOLE_FORMAT, datefmt=DATE_FORMAT))
        self.root_logger.addHandler(self.console_handler)

        try:
            log_dir.mkdir(parents=True, exist_ok=True)
            file_handler = RotatingFileHandler(
                log_dir / "app.log",
                maxBytes=10 * 1024 * 1024,  # 10MB
                backupCount=5
            )
        except OSError as e:
            self.root_logger.warning(f"File logging disabled, cannot use {log_dir}: {e}")
        else:
            file_handler.setLevel(logging.DEBUG)
            file_handler.setFormatter(logging.Formatter(FILE_FORMAT, datefmt=DATE_FORMAT))
            self.root_logger.addHandler(file_handler)

        for name in QUIET_LOGGERS:
            logging.getLogger(name).setLevel(logging.WARNING)

    def set_console_level(self, level: Union[str, int]) -> None:
        """Change the console threshold; the file handler keeps logging DEBUG."""
        self.console_handler.setLevel(_parse_level(level))

    @staticmethod
    def get_logger(name: str) -> logging.Logger:
        """Get a logger instance for a specific module."""
        return logging.getLogger(name)


def _parse_level(level: Union[str, int]) -> int:
    if isinstance(level, int):
        return level
    return getattr(logging, str(level).upper(), logging.INFO)


logger_manager = LoggerManager()


def get_logger(name: str) -> logging.Logger:
    """Convenience function to get a logger."""
    return LoggerManager.get_logger(name)


def set_console_level(level: Union[str, int]) -> None:
    logger_manager.set_console_level(level)

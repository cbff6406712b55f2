"""Application configuration management."""
import os
from typing import Optional
from src.logger import get_logger
from src.exceptions import ConfigurationError

logger = get_logger(__name__)


class Config:
    """Application configuration with validation."""

    def __init__(self):
        """Initialize configuration from environment variables."""
        self._load_config()
        self._validate_config()

    def _load_config(self):
        """Load configuration from environment variables."""
        try:
            # Spectral projection
            self.FILTER_DEFAULT_MODES: int = int(os.getenv("FILTER_DEFAULT_MODES", "64"))
            self.QUADRATURE_MARGIN: int = int(os.getenv("QUADRATURE_MARGIN", "32"))
            self.HALFLINE_QUAD_POINTS: int = int(os.getenv("HALFLINE_QUAD_POINTS", "96"))

            # Reporting
            self.REPORT_DEFAULT_K: int = int(os.getenv("REPORT_DEFAULT_K", "4"))

            # Circle constructions
            self.CIRCLE_TAIL_TOL: float = float(os.getenv("CIRCLE_TAIL_TOL", "1e-14"))
            self.WRAP_SUM_TOL: float = float(os.getenv("WRAP_SUM_TOL", "1e-12"))
            self.MAX_DET_ORDER: int = int(os.getenv("MAX_DET_ORDER", "8"))

            # Logging
            self.LOG_DIR: str = os.getenv("LOG_DIR", "logs")
            self.LOG_LEVEL: str = os.getenv("LOG_LEVEL", "INFO")
        except ValueError as e:
            raise ConfigurationError(f"Malformed configuration value: {e}")

        logger.debug("Configuration loaded successfully")

    def _validate_config(self):
        """Validate configuration values."""
        if self.FILTER_DEFAULT_MODES < 1:
            raise ConfigurationError("FILTER_DEFAULT_MODES must be at least 1")

        if self.QUADRATURE_MARGIN < 0:
            raise ConfigurationError("QUADRATURE_MARGIN must be non-negative")

        if self.HALFLINE_QUAD_POINTS < 1:
            raise ConfigurationError("HALFLINE_QUAD_POINTS must be at least 1")

        if self.REPORT_DEFAULT_K < 1:
            raise ConfigurationError("REPORT_DEFAULT_K must be at least 1")

        if not (self.CIRCLE_TAIL_TOL > 0 and self.WRAP_SUM_TOL > 0):
            raise ConfigurationError("Circle tolerances must be positive")

        if self.MAX_DET_ORDER < 0:
            raise ConfigurationError("MAX_DET_ORDER must be non-negative")

        if self.MAX_DET_ORDER > 12:
            logger.warning(f"MAX_DET_ORDER={self.MAX_DET_ORDER} allows very large exact determinants")

        logger.debug("Configuration validated successfully")

    def rule_size(self, modes: int) -> int:
        """Default quadrature size when projecting onto `modes` functions."""
        return 2 * modes + self.QUADRATURE_MARGIN


# Singleton instance
_config_instance: Optional[Config] = None


def get_config() -> Config:
    """Get or create configuration instance."""
    global _config_instance
    if _config_instance is None:
        _config_instance = Config()
    return _config_instance


def reset_config() -> None:
    """Drop the cached configuration so the next get_config() re-reads the env."""
    global _config_instance
    _config_instance = None

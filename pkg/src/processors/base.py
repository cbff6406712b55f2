"""Base processor class for filter steps."""
from abc import ABC, abstractmethod

from src.core.spectral import energy as _energy
from src.exceptions import DataProcessingError, NumericalError
from src.logger import get_logger
from src.models.basis_models import CoeffVec

logger = get_logger(__name__)


class BaseProcessor(ABC):
    """Abstract base class for one step of a filter plan."""

    def __init__(self):
        """Initialize base processor."""
        self.logger = get_logger(self.__class__.__name__)

    @abstractmethod
    def process(self, coeffs: CoeffVec) -> CoeffVec:
        """
        Apply the step to a coefficient vector.

        Returns:
            New coefficient vector in the same basis
        """
        pass

    def describe(self) -> str:
        return self.__class__.__name__

    def safe_process(self, coeffs: CoeffVec) -> CoeffVec:
        """
        Run `process`, letting numerical contract errors through unchanged.

        Args:
            coeffs: Input coefficients

        Returns:
            Processed coefficients
        """
        try:
            result = self.process(coeffs)
            self.logger.debug(f"{self.describe()}: energy {_energy(coeffs):.6g} -> {_energy(result):.6g}")
            return result
        except NumericalError:
            raise
        except Exception as e:
            self.logger.error(f"Error in {self.describe()}: {e}")
            raise DataProcessingError(f"{self.describe()} failed: {e}")


"""Custom exceptions for the application."""


class BaseAppException(Exception):
    """Base exception for all application exceptions."""
    pass


class ConfigurationError(BaseAppException):
    """Raised when configuration is invalid."""
    pass


class PlanValidationError(BaseAppException):
    """Raised when a filter plan field is invalid."""

    def __init__(self, field: str, message: str):
        self.field = field
        super().__init__(f"Invalid plan field '{field}': {message}")


class DataLoadError(BaseAppException):
    """Raised when a signal or report cannot be read or written."""
    pass


class DataValidationError(BaseAppException):
    """Raised when input data is inconsistent with the requested plan."""
    pass


class DataProcessingError(BaseAppException):
    """Raised when pipeline processing fails."""
    pass


class NumericalError(BaseAppException):
    """Base exception for numerical contract failures."""
    pass


class DomainError(NumericalError, ValueError):
    """Raised when an argument lies outside the domain of an operation."""
    pass


class BasisMismatchError(NumericalError):
    """Raised when a coefficient vector or rule has the wrong basis kind."""
    pass


class EvaluationError(NumericalError):
    """Raised when an integrand is not finite at a quadrature node."""

    def __init__(self, node: float, value: complex):
        self.node = node
        super().__init__(f"Integrand is not finite at node x={node!r} (value={value!r})")


class ContractViolationError(NumericalError):
    """Raised when a truncation or invariant contract is violated."""
    pass


class DependenceError(NumericalError):
    """Raised when Gram-Schmidt meets a numerically dependent vector."""

    def __init__(self, index: int, pivot: float):
        self.index = index
        super().__init__(f"Vector {index} is numerically dependent (pivot norm {pivot:.3e})")


class AliasingError(NumericalError):
    """Raised when a circle grid is too coarse for the requested cutoff."""
    pass


class ResourceError(NumericalError):
    """Raised when an exact computation would exceed the configured size."""
    pass

"""Exception types shared across the package."""


class WeissbenchError(Exception):
    """Base class for all package-specific errors."""


class DomainError(WeissbenchError):
    """An argument lies outside the documented domain of an operation."""


class ToleranceNotMet(WeissbenchError):
    """A quadrature error estimate exceeded the requested tolerance."""

    def __init__(self, message, value=None, estimate=None):
        super().__init__(message)
        self.value = value
        self.estimate = estimate


class TruncationOverflow(WeissbenchError):
    """A series needs more modes than the system keeps active."""


class DivergentSum(WeissbenchError):
    """Series terms do not decay; the sum has no finite value."""


class BoundViolated(WeissbenchError):
    """A certified lower bound failed, indicating an implementation bug."""

    def __init__(self, message, n=None, t=None):
        super().__init__(message)
        self.n = n
        self.t = t


EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_CONFIG_INVALID = 2
EXIT_IO_ERROR = 3
